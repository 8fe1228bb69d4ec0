#include "iwtsteg/iwt.hpp"

#include <vector>

namespace iwtsteg {

namespace {

void require_even(const PixelPlane& p) {
    if (p.rows() % 2 != 0 || p.cols() % 2 != 0)
        raise(errc::dimension, "transform input must have even dimensions");
}

void require_bands(const SubbandSet& b) {
    if (b.ll.empty() || !b.ll.same_dims(b.lh) || !b.ll.same_dims(b.hl) || !b.ll.same_dims(b.hh))
        raise(errc::dimension, "malformed subband set");
    if (b.origin_rows != 2 * b.ll.rows() || b.origin_cols != 2 * b.ll.cols())
        raise(errc::dimension, "subband set origin dimensions disagree with the planes");
}

SubbandSet forward_s(const PixelPlane& p) {
    const int hr = p.rows() / 2, hc = p.cols() / 2;
    SubbandSet out{PixelPlane(hr, hc), PixelPlane(hr, hc), PixelPlane(hr, hc),
                   PixelPlane(hr, hc), p.rows(), p.cols()};
    for (int i = 0; i < hr; ++i) {
        const std::int32_t* top = p.row(2 * i);
        const std::int32_t* bot = p.row(2 * i + 1);
        std::int32_t* ll = out.ll.row(i);
        std::int32_t* lh = out.lh.row(i);
        std::int32_t* hl = out.hl.row(i);
        std::int32_t* hh = out.hh.row(i);
        for (int j = 0; j < hc; ++j) {
            std::int32_t a = top[2 * j];      // I(2i,   2j)
            std::int32_t b = bot[2 * j];      // I(2i+1, 2j)
            std::int32_t c = top[2 * j + 1];  // I(2i,   2j+1)
            std::int32_t d = bot[2 * j + 1];  // I(2i+1, 2j+1)
            ll[j] = (a + b) >> 1;
            hl[j] = b - a;
            lh[j] = c - a;
            hh[j] = d - a;
        }
    }
    return out;
}

PixelPlane inverse_s(const SubbandSet& bands) {
    const int hr = bands.ll.rows(), hc = bands.ll.cols();
    PixelPlane out(2 * hr, 2 * hc);
    for (int i = 0; i < hr; ++i) {
        const std::int32_t* ll = bands.ll.row(i);
        const std::int32_t* lh = bands.lh.row(i);
        const std::int32_t* hl = bands.hl.row(i);
        const std::int32_t* hh = bands.hh.row(i);
        std::int32_t* top = out.row(2 * i);
        std::int32_t* bot = out.row(2 * i + 1);
        for (int j = 0; j < hc; ++j) {
            std::int32_t a = ll[j] - (hl[j] >> 1);
            top[2 * j] = a;
            bot[2 * j] = a + hl[j];
            top[2 * j + 1] = a + lh[j];
            bot[2 * j + 1] = a + hh[j];
        }
    }
    return out;
}

// LeGall 5/3 lifting on one line: predict then update, symmetric extension.
void lift_53(const std::int32_t* x, int n, std::int32_t* low, std::int32_t* high) {
    const int h = n / 2;
    for (int i = 0; i < h; ++i) {
        std::int32_t right = (2 * i + 2 < n) ? x[2 * i + 2] : x[n - 2];
        high[i] = x[2 * i + 1] - ((x[2 * i] + right) >> 1);
    }
    for (int i = 0; i < h; ++i) {
        std::int32_t left = (i > 0) ? high[i - 1] : high[0];
        low[i] = x[2 * i] + ((left + high[i] + 2) >> 2);
    }
}

void unlift_53(const std::int32_t* low, const std::int32_t* high, int n, std::int32_t* x) {
    const int h = n / 2;
    for (int i = 0; i < h; ++i) {
        std::int32_t left = (i > 0) ? high[i - 1] : high[0];
        x[2 * i] = low[i] - ((left + high[i] + 2) >> 2);
    }
    for (int i = 0; i < h; ++i) {
        std::int32_t right = (2 * i + 2 < n) ? x[2 * i + 2] : x[n - 2];
        x[2 * i + 1] = high[i] + ((x[2 * i] + right) >> 1);
    }
}

SubbandSet forward_cdf22(const PixelPlane& p) {
    const int rows = p.rows(), cols = p.cols();
    const int hr = rows / 2, hc = cols / 2;

    // columns first: split into vertical low/high half-planes
    PixelPlane vlow(hr, cols), vhigh(hr, cols);
    std::vector<std::int32_t> col(rows), lo(hr), hi(hr);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) col[i] = p.at(i, j);
        lift_53(col.data(), rows, lo.data(), hi.data());
        for (int i = 0; i < hr; ++i) {
            vlow.at(i, j) = lo[i];
            vhigh.at(i, j) = hi[i];
        }
    }

    // then rows of each half
    SubbandSet out{PixelPlane(hr, hc), PixelPlane(hr, hc), PixelPlane(hr, hc),
                   PixelPlane(hr, hc), rows, cols};
    for (int i = 0; i < hr; ++i) {
        lift_53(vlow.row(i), cols, out.ll.row(i), out.lh.row(i));
        lift_53(vhigh.row(i), cols, out.hl.row(i), out.hh.row(i));
    }
    return out;
}

PixelPlane inverse_cdf22(const SubbandSet& bands) {
    const int hr = bands.ll.rows(), hc = bands.ll.cols();
    const int rows = 2 * hr, cols = 2 * hc;

    PixelPlane vlow(hr, cols), vhigh(hr, cols);
    for (int i = 0; i < hr; ++i) {
        unlift_53(bands.ll.row(i), bands.lh.row(i), cols, vlow.row(i));
        unlift_53(bands.hl.row(i), bands.hh.row(i), cols, vhigh.row(i));
    }

    PixelPlane out(rows, cols);
    std::vector<std::int32_t> col(rows), lo(hr), hi(hr);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < hr; ++i) {
            lo[i] = vlow.at(i, j);
            hi[i] = vhigh.at(i, j);
        }
        unlift_53(lo.data(), hi.data(), rows, col.data());
        for (int i = 0; i < rows; ++i) out.at(i, j) = col[i];
    }
    return out;
}

} // namespace

SubbandSet iwt_forward(const PixelPlane& plane, WaveletKernel kernel) {
    if (plane.empty())
        raise(errc::dimension, "transform input is empty");
    require_even(plane);
    return kernel == WaveletKernel::s_transform ? forward_s(plane) : forward_cdf22(plane);
}

PixelPlane iwt_inverse(const SubbandSet& bands, WaveletKernel kernel) {
    require_bands(bands);
    return kernel == WaveletKernel::s_transform ? inverse_s(bands) : inverse_cdf22(bands);
}

} // namespace iwtsteg
