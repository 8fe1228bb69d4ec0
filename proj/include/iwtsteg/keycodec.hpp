#ifndef IWTSTEG_KEYCODEC_HPP
#define IWTSTEG_KEYCODEC_HPP

#include <cstdint>
#include <vector>

#include "iwtsteg/bitstream.hpp"
#include "iwtsteg/blockmatch.hpp"

namespace iwtsteg {

// Repeating-XOR keystream. Same operation encrypts and decrypts.
struct XorKey {
    std::vector<std::uint8_t> bytes;
};

inline constexpr std::uint16_t kPayloadMagic = 0x5354; // "ST"
inline constexpr std::uint8_t kPayloadVersion = 1;
inline constexpr std::uint8_t kFlagBodyRle = 0x01;
inline constexpr std::size_t kPayloadHeaderBits = 168;

// Framed key container. Layout (big-endian), header always in the clear:
//
//   magic:16  version:8  flags:8  index_width:8
//   grid_rows:16  grid_cols:16  entry_count:32
//   body_bit_length:32  crc32:32  body:body_bit_length
//
// body = rle(xor(serialized key)) when flags bit 0 is set, otherwise
// xor(serialized key) verbatim; RLE is kept only when it actually shrinks
// the stream. crc32 covers the plaintext serialized key bytes and rejects
// wrong-key decrypts. See FORMAT.md.
struct KeyPayload {
    std::uint8_t flags = 0;
    std::uint8_t index_width = 0;
    std::uint16_t grid_rows = 0;
    std::uint16_t grid_cols = 0;
    std::uint32_t entry_count = 0;
    std::uint32_t body_bit_length = 0;
    std::uint32_t plain_crc32 = 0;
    Bitstream body;

    std::size_t bit_length() const { return kPayloadHeaderBits + body.size(); }
    Bitstream to_bits() const;
};

// ceil(log2(n_blocks)): bits needed to address a cover block. 0 when the
// cover has a single block.
int index_bit_width(int n_blocks);

// Fixed-width big-endian indices, concatenated in entry order.
Bitstream serialize_key(const BlockKey& key);

// XOR with the key bytes repeated cyclically, aligned to the stream's byte 0.
// Throws errc::format on an empty key.
Bitstream xor_crypt(const Bitstream& bits, const XorKey& key);

// Alternating 8-bit run counts, first run describes bit 0; runs longer than
// 255 split as 255 followed by a zero count of the opposite bit.
Bitstream rle_encode(const Bitstream& bits);
Bitstream rle_decode(const Bitstream& runs, std::size_t original_bit_len);

// serialize -> xor -> rle (kept only if shorter) -> frame.
KeyPayload build_payload(const BlockKey& key, const XorKey& xk);

// Splits a raw bitstream into header + body. Validates magic, version,
// flags and lengths but does not decrypt.
KeyPayload payload_from_bits(const Bitstream& bits);

// Exact inverse of build_payload. cover_grid fixes the expected index
// width and address range; pass expected_secret_grid to also pin the
// secret geometry. Distinct errors: errc::payload_corrupt for framing,
// length, RLE or address damage, errc::wrong_key when the plaintext
// checksum fails.
BlockKey parse_payload(const KeyPayload& payload, const XorKey& xk,
                       const BlockGrid& cover_grid,
                       const BlockGrid* expected_secret_grid = nullptr);
BlockKey parse_payload(const Bitstream& bits, const XorKey& xk,
                       const BlockGrid& cover_grid,
                       const BlockGrid* expected_secret_grid = nullptr);

// Header + serialized-key bits: an exact upper bound on the payload size
// since the body is never stored in expanded form.
std::size_t payload_bits_upper_bound(std::size_t entry_count, int index_width);

} // namespace iwtsteg

#endif
