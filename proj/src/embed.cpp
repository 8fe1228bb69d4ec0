#include "iwtsteg/embed.hpp"

#include <array>

namespace iwtsteg {

namespace {

// Floor-division LSB: matches v' = 2*floor(v/2) + bit for negative v too.
inline int lsb_of(std::int32_t v) {
    return static_cast<int>(((v % 2) + 2) % 2);
}

inline std::int32_t with_lsb(std::int32_t v, int bit) {
    std::int32_t even = v - lsb_of(v);  // 2*floor(v/2)
    return even + bit;
}

} // namespace

std::size_t embed_capacity(const SubbandSet& bands) {
    auto n = [](const PixelPlane& p) {
        return static_cast<std::size_t>(p.rows()) * static_cast<std::size_t>(p.cols());
    };
    return n(bands.lh) + n(bands.hl) + n(bands.hh);
}

SubbandSet embed_bits(const SubbandSet& bands, const Bitstream& bits) {
    if (bits.size() > embed_capacity(bands))
        raise(errc::capacity, "payload exceeds the carrier capacity");
    SubbandSet out = bands;
    std::size_t t = 0;
    for (PixelPlane* p : std::array<PixelPlane*, 3>{&out.lh, &out.hl, &out.hh}) {
        for (int r = 0; r < p->rows() && t < bits.size(); ++r)
            for (int c = 0; c < p->cols() && t < bits.size(); ++c, ++t)
                p->at(r, c) = with_lsb(p->at(r, c), bits.bit(t));
        if (t == bits.size()) break;
    }
    return out;
}

Bitstream extract_bits(const SubbandSet& bands, std::size_t count) {
    if (count > embed_capacity(bands))
        raise(errc::capacity, "requested more bits than the carrier holds");
    Bitstream out;
    std::size_t t = 0;
    for (const PixelPlane* p : std::array<const PixelPlane*, 3>{&bands.lh, &bands.hl, &bands.hh}) {
        for (int r = 0; r < p->rows() && t < count; ++r)
            for (int c = 0; c < p->cols() && t < count; ++c, ++t)
                out.push_bit(lsb_of(p->at(r, c)));
        if (t == count) break;
    }
    return out;
}

} // namespace iwtsteg
