#ifndef IWTSTEG_COLORSPACE_HPP
#define IWTSTEG_COLORSPACE_HPP

#include <cstddef>

#include "iwtsteg/plane.hpp"

namespace iwtsteg {

// reversible: integer RCT, exact round trip, signed chrominance.
// bt601:      full-range BT.601 with rounding, all planes in [0,255].
enum class ConversionMode { reversible, bt601 };

const char* mode_name(ConversionMode m);
ConversionMode mode_from_name(const std::string& name);

struct YccImage {
    PixelPlane y, cb, cr;
    ConversionMode mode = ConversionMode::reversible;

    int rows() const { return y.rows(); }
    int cols() const { return y.cols(); }
};

struct RgbConversion {
    RgbImage image;
    std::size_t clamped_samples = 0;
};

// reversible: Y = floor((R + 2G + B)/4), Cb = B - G, Cr = R - G.
YccImage rgb_to_ycc(const RgbImage& img, ConversionMode mode);

// reversible: G = Y - floor((Cb + Cr)/4), B = Cb + G, R = Cr + G.
// Out-of-range outputs are clamped and counted.
RgbConversion ycc_to_rgb(const YccImage& img, ConversionMode mode);

} // namespace iwtsteg

#endif
