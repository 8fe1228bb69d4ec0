#ifndef IWTSTEG_IMAGEIO_HPP
#define IWTSTEG_IMAGEIO_HPP

#include <string>

#include "iwtsteg/plane.hpp"

namespace iwtsteg {

enum class ImageKind { gray, rgb };

struct LoadedImage {
    ImageKind kind = ImageKind::gray;
    PixelPlane gray;  // set when kind == gray
    RgbImage rgb;     // set when kind == rgb
};

// PNG (any 8/16-bit layout, reduced to 8-bit gray or RGB) and binary
// PNM (P5/P6, maxval 255). Dispatch is by content for reads.
LoadedImage load_image(const std::string& path);

// Gray view of any supported image; color inputs are reduced with BT.601
// luma (0.299 R + 0.587 G + 0.114 B, rounded).
PixelPlane load_gray(const std::string& path);

// Color view; gray inputs are replicated across the three channels.
RgbImage load_rgb(const std::string& path);

// Writers dispatch on extension: .png, .ppm/.pgm/.pnm. Lossy formats
// (.jpg, .jpeg, .webp, ...) are refused with errc::format — a lossy save
// would destroy the payload.
void save_gray(const std::string& path, const PixelPlane& img);
void save_rgb(const std::string& path, const RgbImage& img);

} // namespace iwtsteg

#endif
