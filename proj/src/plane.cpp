#include "iwtsteg/plane.hpp"

#include <string>

namespace iwtsteg {

void require_rgb8(const RgbImage& img, const char* what) {
    if (img.r.empty() || !img.r.same_dims(img.g) || !img.r.same_dims(img.b))
        raise(errc::dimension, std::string(what) + ": RGB planes disagree or are empty");
    if (!img.r.in_range(0, 255) || !img.g.in_range(0, 255) || !img.b.in_range(0, 255))
        raise(errc::dimension, std::string(what) + ": samples outside [0,255]");
}

void require_gray8(const PixelPlane& p, const char* what) {
    if (p.empty())
        raise(errc::dimension, std::string(what) + ": empty plane");
    if (!p.in_range(0, 255))
        raise(errc::dimension, std::string(what) + ": samples outside [0,255]");
}

} // namespace iwtsteg
