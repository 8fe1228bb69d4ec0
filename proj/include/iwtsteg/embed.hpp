#ifndef IWTSTEG_EMBED_HPP
#define IWTSTEG_EMBED_HPP

#include "iwtsteg/bitstream.hpp"
#include "iwtsteg/iwt.hpp"

namespace iwtsteg {

// Carrier bits available in one SubbandSet: one LSB per high-frequency
// coefficient, scan order all of LH row-major, then HL, then HH. The LL
// plane is never part of the carrier.
std::size_t embed_capacity(const SubbandSet& bands);

// Writes bits[t] into the LSB of the coefficient at scan position t:
// v' = 2*floor(v/2) + bit. Positions past the stream are left untouched.
// Throws errc::capacity when the stream exceeds the carrier.
SubbandSet embed_bits(const SubbandSet& bands, const Bitstream& bits);

// Reads `count` LSBs in scan order; bit = v mod 2 with nonnegative
// remainder (so -3 yields 1, -4 yields 0).
Bitstream extract_bits(const SubbandSet& bands, std::size_t count);

} // namespace iwtsteg

#endif
