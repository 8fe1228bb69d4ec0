#include "iwtsteg/metrics.hpp"

#include <cmath>
#include <limits>

namespace iwtsteg {

namespace {

std::int64_t sse(const PixelPlane& x, const PixelPlane& y) {
    if (!x.same_dims(y))
        raise(errc::dimension, "quality metrics need planes of equal dimensions");
    std::int64_t acc = 0;
    const auto& xd = x.data();
    const auto& yd = y.data();
    for (std::size_t i = 0; i < xd.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(xd[i]) - yd[i];
        acc += d * d;
    }
    return acc;
}

QualityReport report_from(std::int64_t total_sse, std::size_t n, int peak) {
    QualityReport q;
    q.sample_count = n;
    q.peak = peak;
    q.mse = static_cast<double>(total_sse) / static_cast<double>(n);
    q.psnr_db = q.mse == 0.0
                    ? std::numeric_limits<double>::infinity()
                    : 10.0 * std::log10(static_cast<double>(peak) * peak / q.mse);
    return q;
}

} // namespace

double mse(const PixelPlane& x, const PixelPlane& y) {
    return static_cast<double>(sse(x, y)) / static_cast<double>(x.sample_count());
}

double psnr(const PixelPlane& x, const PixelPlane& y, int peak) {
    return plane_quality(x, y, peak).psnr_db;
}

QualityReport plane_quality(const PixelPlane& ref, const PixelPlane& test, int peak) {
    return report_from(sse(ref, test), ref.sample_count(), peak);
}

QualityReport rgb_quality(const RgbImage& ref, const RgbImage& test, int peak) {
    std::int64_t total = sse(ref.r, test.r) + sse(ref.g, test.g) + sse(ref.b, test.b);
    return report_from(total, 3 * ref.r.sample_count(), peak);
}

} // namespace iwtsteg
