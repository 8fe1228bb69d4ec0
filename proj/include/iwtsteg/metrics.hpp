#ifndef IWTSTEG_METRICS_HPP
#define IWTSTEG_METRICS_HPP

#include <cstddef>

#include "iwtsteg/plane.hpp"

namespace iwtsteg {

struct QualityReport {
    double mse = 0.0;
    double psnr_db = 0.0;  // +infinity when mse == 0
    std::size_t sample_count = 0;
    int peak = 255;
};

// (1/N) * sum |x_i - y_i|^2 over all samples; dimensions must match.
double mse(const PixelPlane& x, const PixelPlane& y);

// 10 * log10(peak^2 / mse); +infinity for identical inputs.
double psnr(const PixelPlane& x, const PixelPlane& y, int peak = 255);

QualityReport plane_quality(const PixelPlane& ref, const PixelPlane& test, int peak = 255);

// Pools all 3N samples into one mean, giving a single number per image.
QualityReport rgb_quality(const RgbImage& ref, const RgbImage& test, int peak = 255);

} // namespace iwtsteg

#endif
