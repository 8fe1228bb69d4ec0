#ifndef IWTSTEG_IWT_HPP
#define IWTSTEG_IWT_HPP

#include "iwtsteg/plane.hpp"

namespace iwtsteg {

// s_transform: per 2x2 block with a = I(2i,2j), b = I(2i+1,2j),
//              c = I(2i,2j+1), d = I(2i+1,2j+1):
//                LL = floor((a+b)/2), HL = b-a, LH = c-a, HH = d-a.
//              This is the normative kernel for the stego format.
// cdf22:       LeGall 5/3 integer lifting, separable, symmetric extension.
enum class WaveletKernel { s_transform, cdf22 };

// Single decomposition level. First index is the row.
struct SubbandSet {
    PixelPlane ll, lh, hl, hh;
    int origin_rows = 0;
    int origin_cols = 0;

    friend bool operator==(const SubbandSet&, const SubbandSet&) = default;
};

// Requires even dimensions; no implicit padding.
SubbandSet iwt_forward(const PixelPlane& plane,
                       WaveletKernel kernel = WaveletKernel::s_transform);

// Exact inverse: iwt_inverse(iwt_forward(p)) == p for every integer plane.
PixelPlane iwt_inverse(const SubbandSet& bands,
                       WaveletKernel kernel = WaveletKernel::s_transform);

} // namespace iwtsteg

#endif
