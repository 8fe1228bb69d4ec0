#include "iwtsteg/keycodec.hpp"

#include <bit>
#include <zlib.h>

namespace iwtsteg {

int index_bit_width(int n_blocks) {
    if (n_blocks <= 0)
        raise(errc::dimension, "index width needs a positive block count");
    if (n_blocks == 1) return 0;
    return std::bit_width(static_cast<unsigned>(n_blocks - 1));
}

Bitstream serialize_key(const BlockKey& key) {
    const int width = index_bit_width(key.cover_grid.block_count());
    Bitstream out;
    for (std::uint32_t e : key.entries)
        out.push_uint(e, width);
    return out;
}

Bitstream xor_crypt(const Bitstream& bits, const XorKey& key) {
    if (key.bytes.empty())
        raise(errc::format, "XOR key must not be empty");
    std::vector<std::uint8_t> buf = bits.bytes();
    for (std::size_t i = 0; i < buf.size(); ++i)
        buf[i] ^= key.bytes[i % key.bytes.size()];
    return Bitstream::from_bytes(std::move(buf), bits.size());
}

Bitstream rle_encode(const Bitstream& bits) {
    Bitstream out;
    int current = 0;  // first run always describes bit value 0
    std::size_t pos = 0;
    while (pos < bits.size()) {
        std::size_t run = 0;
        while (pos < bits.size() && bits.bit(pos) == current) {
            ++run;
            ++pos;
        }
        while (run > 255) {
            out.push_uint(255, 8);
            out.push_uint(0, 8);  // empty run of the opposite bit
            run -= 255;
        }
        out.push_uint(run, 8);
        current ^= 1;
    }
    return out;
}

Bitstream rle_decode(const Bitstream& runs, std::size_t original_bit_len) {
    if (runs.size() % 8 != 0)
        raise(errc::payload_corrupt, "run-length stream is not a whole number of counts");
    Bitstream out;
    BitReader rd(runs);
    int current = 0;
    while (out.size() < original_bit_len) {
        if (rd.remaining() == 0)
            raise(errc::payload_corrupt, "run-length stream ends before the declared length");
        std::uint64_t count = rd.read_uint(8);
        if (count > original_bit_len - out.size())
            raise(errc::payload_corrupt, "run-length counts overshoot the declared length");
        for (std::uint64_t i = 0; i < count; ++i)
            out.push_bit(current);
        current ^= 1;
    }
    if (rd.remaining() != 0)
        raise(errc::payload_corrupt, "run-length stream has trailing counts");
    return out;
}

namespace {

std::uint32_t plain_checksum(const Bitstream& plain) {
    uLong crc = crc32(0L, Z_NULL, 0);
    if (!plain.bytes().empty())
        crc = crc32(crc, plain.bytes().data(), static_cast<uInt>(plain.bytes().size()));
    return static_cast<std::uint32_t>(crc);
}

} // namespace

std::size_t payload_bits_upper_bound(std::size_t entry_count, int index_width) {
    return kPayloadHeaderBits + entry_count * static_cast<std::size_t>(index_width);
}

Bitstream KeyPayload::to_bits() const {
    Bitstream out;
    out.push_uint(kPayloadMagic, 16);
    out.push_uint(kPayloadVersion, 8);
    out.push_uint(flags, 8);
    out.push_uint(index_width, 8);
    out.push_uint(grid_rows, 16);
    out.push_uint(grid_cols, 16);
    out.push_uint(entry_count, 32);
    out.push_uint(body_bit_length, 32);
    out.push_uint(plain_crc32, 32);
    out.append(body);
    return out;
}

KeyPayload build_payload(const BlockKey& key, const XorKey& xk) {
    const BlockGrid& sg = key.secret_grid;
    if (key.entries.size() != static_cast<std::size_t>(sg.blocks_per_col) *
                                  static_cast<std::size_t>(sg.blocks_per_row))
        raise(errc::dimension, "build_payload: entries do not match the secret grid");
    if (sg.blocks_per_col > 0xFFFF || sg.blocks_per_row > 0xFFFF)
        raise(errc::dimension, "build_payload: secret grid too large for the frame");

    Bitstream plain = serialize_key(key);
    Bitstream enc = xor_crypt(plain, xk);
    Bitstream rle = rle_encode(enc);

    KeyPayload p;
    p.index_width = static_cast<std::uint8_t>(index_bit_width(key.cover_grid.block_count()));
    p.grid_rows = static_cast<std::uint16_t>(sg.blocks_per_col);
    p.grid_cols = static_cast<std::uint16_t>(sg.blocks_per_row);
    p.entry_count = static_cast<std::uint32_t>(key.entries.size());
    p.plain_crc32 = plain_checksum(plain);
    if (rle.size() < enc.size()) {
        p.flags = kFlagBodyRle;
        p.body = std::move(rle);
    } else {
        p.body = std::move(enc);
    }
    p.body_bit_length = static_cast<std::uint32_t>(p.body.size());
    return p;
}

KeyPayload payload_from_bits(const Bitstream& bits) {
    if (bits.size() < kPayloadHeaderBits)
        raise(errc::payload_corrupt, "payload shorter than its header");
    BitReader rd(bits);
    if (rd.read_uint(16) != kPayloadMagic)
        raise(errc::payload_corrupt, "bad payload magic");
    if (rd.read_uint(8) != kPayloadVersion)
        raise(errc::payload_corrupt, "unsupported payload version");

    KeyPayload p;
    p.flags = static_cast<std::uint8_t>(rd.read_uint(8));
    if (p.flags & ~kFlagBodyRle)
        raise(errc::payload_corrupt, "unknown payload flags");
    p.index_width = static_cast<std::uint8_t>(rd.read_uint(8));
    if (p.index_width > 32)
        raise(errc::payload_corrupt, "index width out of range");
    p.grid_rows = static_cast<std::uint16_t>(rd.read_uint(16));
    p.grid_cols = static_cast<std::uint16_t>(rd.read_uint(16));
    p.entry_count = static_cast<std::uint32_t>(rd.read_uint(32));
    p.body_bit_length = static_cast<std::uint32_t>(rd.read_uint(32));
    p.plain_crc32 = static_cast<std::uint32_t>(rd.read_uint(32));

    if (static_cast<std::uint64_t>(p.grid_rows) * p.grid_cols != p.entry_count)
        raise(errc::payload_corrupt, "entry count disagrees with the secret grid");
    if (bits.size() - kPayloadHeaderBits != p.body_bit_length)
        raise(errc::payload_corrupt, "payload body length mismatch");
    p.body = bits.slice(kPayloadHeaderBits, p.body_bit_length);
    return p;
}

BlockKey parse_payload(const KeyPayload& p, const XorKey& xk,
                       const BlockGrid& cover_grid,
                       const BlockGrid* expected_secret_grid) {
    if (xk.bytes.empty())
        raise(errc::format, "XOR key must not be empty");

    const int want_width = index_bit_width(cover_grid.block_count());
    if (p.index_width != want_width)
        raise(errc::payload_corrupt, "index width disagrees with the cover grid");

    const std::size_t plain_len =
        static_cast<std::size_t>(p.entry_count) * static_cast<std::size_t>(p.index_width);

    Bitstream enc;
    if (p.flags & kFlagBodyRle) {
        enc = rle_decode(p.body, plain_len);
    } else {
        if (p.body.size() != plain_len)
            raise(errc::payload_corrupt, "raw body length disagrees with the entry count");
        enc = p.body;
    }

    Bitstream plain = xor_crypt(enc, xk);
    if (plain_checksum(plain) != p.plain_crc32)
        raise(errc::wrong_key, "payload checksum failed: wrong key or corrupted payload");

    BlockKey key;
    key.cover_grid = cover_grid;
    key.secret_grid = BlockGrid{p.grid_rows * cover_grid.block_size,
                                p.grid_cols * cover_grid.block_size,
                                cover_grid.block_size,
                                p.grid_rows,
                                p.grid_cols};
    if (expected_secret_grid && key.secret_grid != *expected_secret_grid)
        raise(errc::payload_corrupt, "payload secret grid disagrees with the expected one");

    key.entries.resize(p.entry_count);
    BitReader rd(plain);
    for (std::uint32_t i = 0; i < p.entry_count; ++i) {
        std::uint64_t e = rd.read_uint(p.index_width);
        if (e >= static_cast<std::uint64_t>(cover_grid.block_count()))
            raise(errc::payload_corrupt, "block address out of range: corrupted payload");
        key.entries[i] = static_cast<std::uint32_t>(e);
    }
    return key;
}

BlockKey parse_payload(const Bitstream& bits, const XorKey& xk,
                       const BlockGrid& cover_grid,
                       const BlockGrid* expected_secret_grid) {
    return parse_payload(payload_from_bits(bits), xk, cover_grid, expected_secret_grid);
}

} // namespace iwtsteg
