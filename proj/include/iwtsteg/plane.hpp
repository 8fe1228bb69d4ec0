#ifndef IWTSTEG_PLANE_HPP
#define IWTSTEG_PLANE_HPP

#include <cstdint>
#include <vector>

#include "iwtsteg/errors.hpp"

namespace iwtsteg {

// 2D matrix of signed samples, row-major. Wide enough for 8-bit pixels as
// well as signed wavelet coefficients and chrominance differences.
class PixelPlane {
public:
    PixelPlane() = default;

    PixelPlane(int rows, int cols, std::int32_t fill = 0)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
        if (rows <= 0 || cols <= 0)
            raise(errc::dimension, "plane dimensions must be positive");
    }

    PixelPlane(int rows, int cols, std::vector<std::int32_t> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows <= 0 || cols <= 0)
            raise(errc::dimension, "plane dimensions must be positive");
        if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
            raise(errc::dimension, "plane data size does not match dimensions");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t sample_count() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    std::int32_t& at(int r, int c) { return data_[idx(r, c)]; }
    std::int32_t at(int r, int c) const { return data_[idx(r, c)]; }

    std::int32_t* row(int r) { return data_.data() + idx(r, 0); }
    const std::int32_t* row(int r) const { return data_.data() + idx(r, 0); }

    std::vector<std::int32_t>& data() { return data_; }
    const std::vector<std::int32_t>& data() const { return data_; }

    bool same_dims(const PixelPlane& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    bool in_range(std::int32_t lo, std::int32_t hi) const {
        for (std::int32_t v : data_)
            if (v < lo || v > hi) return false;
        return true;
    }

    friend bool operator==(const PixelPlane&, const PixelPlane&) = default;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int32_t> data_;
};

// Three 8-bit planes of identical dimensions.
struct RgbImage {
    PixelPlane r, g, b;

    int rows() const { return r.rows(); }
    int cols() const { return r.cols(); }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

// Throws errc::dimension unless all three planes agree and hold 8-bit samples.
void require_rgb8(const RgbImage& img, const char* what);

// Throws unless the plane holds 8-bit samples.
void require_gray8(const PixelPlane& p, const char* what);

} // namespace iwtsteg

#endif
