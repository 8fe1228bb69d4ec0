#ifndef IWTSTEG_BITSTREAM_HPP
#define IWTSTEG_BITSTREAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iwtsteg/errors.hpp"

namespace iwtsteg {

// Packed bit sequence, MSB-first within each byte. Trailing padding bits of
// the last byte are kept zero so byte-level comparison equals bit-level
// comparison.
class Bitstream {
public:
    Bitstream() = default;

    std::size_t size() const { return bit_count_; }
    bool empty() const { return bit_count_ == 0; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    int bit(std::size_t i) const {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
    }

    void push_bit(int b) {
        if ((bit_count_ & 7) == 0) bytes_.push_back(0);
        if (b) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - (bit_count_ & 7)));
        ++bit_count_;
    }

    // Appends `width` bits of `value`, most significant first.
    void push_uint(std::uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i)
            push_bit(static_cast<int>((value >> i) & 1));
    }

    void append(const Bitstream& other) {
        for (std::size_t i = 0; i < other.size(); ++i)
            push_bit(other.bit(i));
    }

    Bitstream slice(std::size_t from, std::size_t count) const {
        Bitstream out;
        for (std::size_t i = 0; i < count; ++i)
            out.push_bit(bit(from + i));
        return out;
    }

    // Zero all padding bits past the logical length.
    void mask_tail() {
        if (bit_count_ & 7) {
            std::uint8_t keep = static_cast<std::uint8_t>(0xFF00 >> (bit_count_ & 7));
            bytes_.back() &= keep;
        }
    }

    std::string to01() const {
        std::string s;
        s.reserve(bit_count_);
        for (std::size_t i = 0; i < bit_count_; ++i)
            s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    static Bitstream from01(const std::string& s) {
        Bitstream out;
        for (char c : s) out.push_bit(c == '1');
        return out;
    }

    static Bitstream from_bytes(std::vector<std::uint8_t> bytes, std::size_t bit_count) {
        if (bytes.size() * 8 < bit_count)
            raise(errc::dimension, "byte buffer shorter than declared bit count");
        Bitstream out;
        out.bytes_ = std::move(bytes);
        out.bytes_.resize((bit_count + 7) / 8);
        out.bit_count_ = bit_count;
        out.mask_tail();
        return out;
    }

    friend bool operator==(const Bitstream&, const Bitstream&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_count_ = 0;
};

// Sequential reader over a Bitstream.
class BitReader {
public:
    explicit BitReader(const Bitstream& bits) : bits_(&bits) {}

    std::size_t remaining() const { return bits_->size() - pos_; }

    std::uint64_t read_uint(int width) {
        if (remaining() < static_cast<std::size_t>(width))
            raise(errc::payload_corrupt, "bitstream truncated");
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i)
            v = (v << 1) | static_cast<std::uint64_t>(bits_->bit(pos_++));
        return v;
    }

private:
    const Bitstream* bits_;
    std::size_t pos_ = 0;
};

} // namespace iwtsteg

#endif
