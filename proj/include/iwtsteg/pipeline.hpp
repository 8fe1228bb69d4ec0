#ifndef IWTSTEG_PIPELINE_HPP
#define IWTSTEG_PIPELINE_HPP

#include <cstddef>

#include "iwtsteg/blockmatch.hpp"
#include "iwtsteg/colorspace.hpp"
#include "iwtsteg/keycodec.hpp"
#include "iwtsteg/metrics.hpp"
#include "iwtsteg/plane.hpp"

namespace iwtsteg {

// Cover samples are pinned into [kCoverMargin, 255 - kCoverMargin] before
// embedding in reversible mode. Each embedded LSB moves a chrominance
// sample by at most 1 and the green reconstruction by at most 1, so a
// margin of 2 guarantees the stego RGB never clamps and the payload
// survives the color round trip bit-exactly.
inline constexpr int kCoverMargin = 2;

// Matching offset between the secret's LL (8-bit, centered near 128) and
// the chrominance LL. Reversible-mode chrominance is a signed difference
// centered at 0, so the secret is shifted down by 128 before the block
// search and shifted back after reconstruction. bt601 chrominance already
// sits at 128, no shift.
int chroma_match_offset(ConversionMode mode);

// Clips every sample into [margin, 255 - margin].
RgbImage condition_cover(const RgbImage& cover, int margin = kCoverMargin);

struct EncodeDigest {
    std::size_t payload1_bits = 0;
    std::size_t payload2_bits = 0;
    std::size_t capacity_bits = 0;       // per chrominance channel
    std::size_t conditioned_samples = 0; // cover samples moved by the margin clip
    bool verified = false;               // self-decode recovered both payloads
};

struct EncodeResult {
    RgbImage stego;
    QualityReport report;  // original cover vs stego, pooled RGB
    EncodeDigest digest;
    BlockKey key1, key2;
};

struct KeyDiagnostics {
    std::size_t payload_bits = 0;
    std::size_t entry_count = 0;
    bool body_rle = false;
};

struct DecodeResult {
    PixelPlane secret1, secret2;  // grayscale, clamped to [0,255]
    BlockKey key1, key2;
    KeyDiagnostics diag1, diag2;
};

// Hides the keys of both secrets in the cover: key1 in the Cb channel,
// key2 in Cr. Runs a mandatory self-decode; if the payloads do not survive
// (possible in bt601 mode, whose rounding destroys LSBs) the call throws
// errc::self_check instead of returning an unrecoverable stego.
EncodeResult encode(const RgbImage& cover, const PixelPlane& secret1,
                    const PixelPlane& secret2, const XorKey& xk,
                    ConversionMode mode = ConversionMode::reversible);

// Extracts both keys and rebuilds the secrets from the stego's own
// chrominance LL blocks. High-frequency subbands of the secrets are not
// transmitted and are zero-filled.
DecodeResult decode(const RgbImage& stego, const XorKey& xk,
                    ConversionMode mode = ConversionMode::reversible);

} // namespace iwtsteg

#endif
