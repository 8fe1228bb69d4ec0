#include "iwtsteg/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include <png.h>

namespace iwtsteg {

namespace {

[[noreturn]] void io_fail(const std::string& path, const std::string& why) {
    raise(errc::io, path + ": " + why);
}

std::string lower_ext(const std::string& path) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return {};
    std::string ext = path.substr(dot);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

// ------------------------------------------------------------------ PNG ---

LoadedImage load_png(const std::string& path) {
    png_image img;
    std::fill_n(reinterpret_cast<char*>(&img), sizeof img, 0);
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&img, path.c_str()))
        io_fail(path, img.message);

    const bool gray = (img.format & PNG_FORMAT_FLAG_COLOR) == 0 &&
                      (img.format & PNG_FORMAT_FLAG_COLORMAP) == 0;
    img.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;

    std::vector<png_byte> buf(PNG_IMAGE_SIZE(img));
    png_color white{255, 255, 255};
    if (!png_image_finish_read(&img, &white, buf.data(), 0, nullptr)) {
        png_image_free(&img);
        io_fail(path, img.message);
    }

    const int rows = static_cast<int>(img.height);
    const int cols = static_cast<int>(img.width);
    LoadedImage out;
    if (gray) {
        out.kind = ImageKind::gray;
        out.gray = PixelPlane(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                out.gray.at(r, c) = buf[static_cast<std::size_t>(r) * cols + c];
    } else {
        out.kind = ImageKind::rgb;
        out.rgb = {PixelPlane(rows, cols), PixelPlane(rows, cols), PixelPlane(rows, cols)};
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const png_byte* px = &buf[(static_cast<std::size_t>(r) * cols + c) * 3];
                out.rgb.r.at(r, c) = px[0];
                out.rgb.g.at(r, c) = px[1];
                out.rgb.b.at(r, c) = px[2];
            }
    }
    return out;
}

void save_png(const std::string& path, const PixelPlane* gray, const RgbImage* rgb) {
    png_image img;
    std::fill_n(reinterpret_cast<char*>(&img), sizeof img, 0);
    img.version = PNG_IMAGE_VERSION;

    std::vector<png_byte> buf;
    if (gray) {
        img.width = static_cast<png_uint_32>(gray->cols());
        img.height = static_cast<png_uint_32>(gray->rows());
        img.format = PNG_FORMAT_GRAY;
        buf.reserve(gray->sample_count());
        for (std::int32_t v : gray->data())
            buf.push_back(static_cast<png_byte>(v));
    } else {
        img.width = static_cast<png_uint_32>(rgb->cols());
        img.height = static_cast<png_uint_32>(rgb->rows());
        img.format = PNG_FORMAT_RGB;
        buf.reserve(rgb->r.sample_count() * 3);
        for (std::size_t i = 0; i < rgb->r.sample_count(); ++i) {
            buf.push_back(static_cast<png_byte>(rgb->r.data()[i]));
            buf.push_back(static_cast<png_byte>(rgb->g.data()[i]));
            buf.push_back(static_cast<png_byte>(rgb->b.data()[i]));
        }
    }
    if (!png_image_write_to_file(&img, path.c_str(), 0, buf.data(), 0, nullptr))
        io_fail(path, img.message);
}

// ------------------------------------------------------------------ PNM ---

int pnm_token(std::istream& in, const std::string& path) {
    // Skips whitespace and '#' comments, then reads one decimal value.
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c))
        io_fail(path, "malformed PNM header");
    long v = 0;
    while (c != EOF && std::isdigit(c)) {
        v = v * 10 + (c - '0');
        if (v > 1'000'000) io_fail(path, "PNM header value out of range");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return static_cast<int>(v);
}

LoadedImage load_pnm(const std::string& path, std::ifstream& in, char kind) {
    const int cols = pnm_token(in, path);
    const int rows = pnm_token(in, path);
    const int maxval = pnm_token(in, path);
    if (maxval != 255)
        raise(errc::format, path + ": only maxval 255 PNM images are supported");
    if (in.get() == EOF)  // single whitespace after the header
        io_fail(path, "truncated PNM header");
    if (rows <= 0 || cols <= 0)
        io_fail(path, "bad PNM dimensions");

    const int channels = kind == '6' ? 3 : 1;
    std::vector<unsigned char> buf(static_cast<std::size_t>(rows) * cols * channels);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::size_t>(in.gcount()) != buf.size())
        io_fail(path, "truncated PNM pixel data");

    LoadedImage out;
    if (channels == 1) {
        out.kind = ImageKind::gray;
        out.gray = PixelPlane(rows, cols);
        for (std::size_t i = 0; i < buf.size(); ++i)
            out.gray.data()[i] = buf[i];
    } else {
        out.kind = ImageKind::rgb;
        out.rgb = {PixelPlane(rows, cols), PixelPlane(rows, cols), PixelPlane(rows, cols)};
        for (std::size_t i = 0, n = static_cast<std::size_t>(rows) * cols; i < n; ++i) {
            out.rgb.r.data()[i] = buf[i * 3];
            out.rgb.g.data()[i] = buf[i * 3 + 1];
            out.rgb.b.data()[i] = buf[i * 3 + 2];
        }
    }
    return out;
}

void save_pnm(const std::string& path, const PixelPlane* gray, const RgbImage* rgb) {
    std::ofstream out(path, std::ios::binary);
    if (!out) io_fail(path, "cannot open for writing");
    if (gray) {
        out << "P5\n" << gray->cols() << ' ' << gray->rows() << "\n255\n";
        for (std::int32_t v : gray->data())
            out.put(static_cast<char>(v));
    } else {
        out << "P6\n" << rgb->cols() << ' ' << rgb->rows() << "\n255\n";
        for (std::size_t i = 0; i < rgb->r.sample_count(); ++i) {
            out.put(static_cast<char>(rgb->r.data()[i]));
            out.put(static_cast<char>(rgb->g.data()[i]));
            out.put(static_cast<char>(rgb->b.data()[i]));
        }
    }
    if (!out) io_fail(path, "write failed");
}

void save_dispatch(const std::string& path, const PixelPlane* gray, const RgbImage* rgb) {
    const std::string ext = lower_ext(path);
    if (ext == ".png") {
        save_png(path, gray, rgb);
    } else if (ext == ".pnm" || ext == ".pgm" || ext == ".ppm") {
        if (gray && ext == ".ppm")
            raise(errc::format, path + ": .ppm holds color images, use .pgm or .pnm");
        if (rgb && ext == ".pgm")
            raise(errc::format, path + ": .pgm holds grayscale images, use .ppm or .pnm");
        save_pnm(path, gray, rgb);
    } else if (ext == ".jpg" || ext == ".jpeg" || ext == ".webp" || ext == ".gif") {
        raise(errc::format,
              path + ": lossy formats would destroy the embedded payload; use .png or .pnm");
    } else {
        raise(errc::format, path + ": unsupported output format; use .png or .pnm");
    }
}

} // namespace

LoadedImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) io_fail(path, "cannot open");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2) io_fail(path, "file too short");

    if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6'))
        return load_pnm(path, in, magic[1]);
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        in.close();
        return load_png(path);
    }
    raise(errc::format, path + ": not a PNG or binary PNM image");
}

PixelPlane load_gray(const std::string& path) {
    LoadedImage img = load_image(path);
    if (img.kind == ImageKind::gray) return std::move(img.gray);
    PixelPlane out(img.rgb.rows(), img.rgb.cols());
    for (std::size_t i = 0; i < out.sample_count(); ++i) {
        double y = 0.299 * img.rgb.r.data()[i] + 0.587 * img.rgb.g.data()[i] +
                   0.114 * img.rgb.b.data()[i];
        out.data()[i] = static_cast<std::int32_t>(std::lround(y));
    }
    return out;
}

RgbImage load_rgb(const std::string& path) {
    LoadedImage img = load_image(path);
    if (img.kind == ImageKind::rgb) return std::move(img.rgb);
    return {img.gray, img.gray, img.gray};
}

void save_gray(const std::string& path, const PixelPlane& img) {
    require_gray8(img, "image to save");
    save_dispatch(path, &img, nullptr);
}

void save_rgb(const std::string& path, const RgbImage& img) {
    require_rgb8(img, "image to save");
    save_dispatch(path, nullptr, &img);
}

} // namespace iwtsteg
