#include "iwtsteg/colorspace.hpp"

#include <cmath>
#include <string>

namespace iwtsteg {

const char* mode_name(ConversionMode m) {
    return m == ConversionMode::reversible ? "reversible" : "bt601";
}

ConversionMode mode_from_name(const std::string& name) {
    if (name == "reversible") return ConversionMode::reversible;
    if (name == "bt601") return ConversionMode::bt601;
    raise(errc::format, "unknown color mode '" + name + "'");
}

namespace {

int clamp8(int v, std::size_t& clamped) {
    if (v < 0) { ++clamped; return 0; }
    if (v > 255) { ++clamped; return 255; }
    return v;
}

// round half away from zero, then clamp
int quant8(double v, std::size_t& clamped) {
    return clamp8(static_cast<int>(std::lround(v)), clamped);
}

} // namespace

YccImage rgb_to_ycc(const RgbImage& img, ConversionMode mode) {
    require_rgb8(img, "rgb_to_ycc");
    const int rows = img.rows(), cols = img.cols();
    YccImage out{PixelPlane(rows, cols), PixelPlane(rows, cols), PixelPlane(rows, cols), mode};

    if (mode == ConversionMode::reversible) {
        for (int i = 0; i < rows; ++i) {
            const std::int32_t* r = img.r.row(i);
            const std::int32_t* g = img.g.row(i);
            const std::int32_t* b = img.b.row(i);
            std::int32_t* y = out.y.row(i);
            std::int32_t* cb = out.cb.row(i);
            std::int32_t* cr = out.cr.row(i);
            for (int j = 0; j < cols; ++j) {
                y[j] = (r[j] + 2 * g[j] + b[j]) >> 2;
                cb[j] = b[j] - g[j];
                cr[j] = r[j] - g[j];
            }
        }
        return out;
    }

    std::size_t clamped = 0;
    for (int i = 0; i < rows; ++i) {
        const std::int32_t* r = img.r.row(i);
        const std::int32_t* g = img.g.row(i);
        const std::int32_t* b = img.b.row(i);
        std::int32_t* y = out.y.row(i);
        std::int32_t* cb = out.cb.row(i);
        std::int32_t* cr = out.cr.row(i);
        for (int j = 0; j < cols; ++j) {
            double rd = r[j], gd = g[j], bd = b[j];
            y[j] = quant8(0.299 * rd + 0.587 * gd + 0.114 * bd, clamped);
            cb[j] = quant8(128.0 - 0.168736 * rd - 0.331264 * gd + 0.5 * bd, clamped);
            cr[j] = quant8(128.0 + 0.5 * rd - 0.418688 * gd - 0.081312 * bd, clamped);
        }
    }
    return out;
}

RgbConversion ycc_to_rgb(const YccImage& img, ConversionMode mode) {
    if (mode != img.mode)
        raise(errc::mode_mismatch, "conversion mode does not match the image");
    if (img.y.empty() || !img.y.same_dims(img.cb) || !img.y.same_dims(img.cr))
        raise(errc::dimension, "ycc_to_rgb: planes disagree or are empty");

    const int rows = img.rows(), cols = img.cols();
    RgbConversion out{{PixelPlane(rows, cols), PixelPlane(rows, cols), PixelPlane(rows, cols)}, 0};

    if (mode == ConversionMode::reversible) {
        for (int i = 0; i < rows; ++i) {
            const std::int32_t* y = img.y.row(i);
            const std::int32_t* cb = img.cb.row(i);
            const std::int32_t* cr = img.cr.row(i);
            std::int32_t* r = out.image.r.row(i);
            std::int32_t* g = out.image.g.row(i);
            std::int32_t* b = out.image.b.row(i);
            for (int j = 0; j < cols; ++j) {
                int gv = y[j] - ((cb[j] + cr[j]) >> 2);
                int bv = cb[j] + gv;
                int rv = cr[j] + gv;
                g[j] = clamp8(gv, out.clamped_samples);
                b[j] = clamp8(bv, out.clamped_samples);
                r[j] = clamp8(rv, out.clamped_samples);
            }
        }
        return out;
    }

    for (int i = 0; i < rows; ++i) {
        const std::int32_t* y = img.y.row(i);
        const std::int32_t* cb = img.cb.row(i);
        const std::int32_t* cr = img.cr.row(i);
        std::int32_t* r = out.image.r.row(i);
        std::int32_t* g = out.image.g.row(i);
        std::int32_t* b = out.image.b.row(i);
        for (int j = 0; j < cols; ++j) {
            double yd = y[j];
            double cbd = cb[j] - 128.0;
            double crd = cr[j] - 128.0;
            r[j] = quant8(yd + 1.402 * crd, out.clamped_samples);
            g[j] = quant8(yd - 0.344136 * cbd - 0.714136 * crd, out.clamped_samples);
            b[j] = quant8(yd + 1.772 * cbd, out.clamped_samples);
        }
    }
    return out;
}

} // namespace iwtsteg
