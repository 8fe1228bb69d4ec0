#include "iwtsteg/pipeline.hpp"

#include <algorithm>
#include <string>

#include "iwtsteg/embed.hpp"
#include "iwtsteg/iwt.hpp"

namespace iwtsteg {

int chroma_match_offset(ConversionMode mode) {
    return mode == ConversionMode::reversible ? 128 : 0;
}

RgbImage condition_cover(const RgbImage& cover, int margin) {
    RgbImage out = cover;
    const std::int32_t lo = margin;
    const std::int32_t hi = 255 - margin;
    for (PixelPlane* p : {&out.r, &out.g, &out.b})
        for (std::int32_t& v : p->data())
            v = std::clamp(v, lo, hi);
    return out;
}

namespace {

std::size_t count_diffs(const RgbImage& a, const RgbImage& b) {
    std::size_t n = 0;
    const PixelPlane* pa[] = {&a.r, &a.g, &a.b};
    const PixelPlane* pb[] = {&b.r, &b.g, &b.b};
    for (int k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < pa[k]->data().size(); ++i)
            n += pa[k]->data()[i] != pb[k]->data()[i];
    return n;
}

PixelPlane shifted(const PixelPlane& p, int delta) {
    PixelPlane out = p;
    for (std::int32_t& v : out.data()) v += delta;
    return out;
}

// Header + declared body, as one bitstream pulled from the carrier.
Bitstream extract_payload_bits(const SubbandSet& bands) {
    Bitstream head = extract_bits(bands, kPayloadHeaderBits);
    BitReader rd(head);
    if (rd.read_uint(16) != kPayloadMagic)
        raise(errc::payload_corrupt, "no payload found: bad magic");
    if (rd.read_uint(8) != kPayloadVersion)
        raise(errc::payload_corrupt, "unsupported payload version");
    rd.read_uint(8 + 8 + 16 + 16);  // flags, index_width, grid dims
    rd.read_uint(32);               // entry_count
    std::uint64_t body_len = rd.read_uint(32);
    std::uint64_t total = kPayloadHeaderBits + body_len;
    if (total > embed_capacity(bands))
        raise(errc::payload_corrupt, "declared payload exceeds the carrier");
    return extract_bits(bands, static_cast<std::size_t>(total));
}

struct ChannelDecode {
    KeyPayload payload;
    BlockKey key;
    PixelPlane secret;  // clamped [0,255] grayscale
};

// Key extraction + dictionary lookup for one chrominance channel.
ChannelDecode decode_channel(const PixelPlane& chroma, const XorKey& xk, int offset) {
    SubbandSet bands = iwt_forward(chroma);
    ChannelDecode out;
    out.payload = payload_from_bits(extract_payload_bits(bands));
    BlockGrid cover_grid = partition(bands.ll, 2);
    out.key = parse_payload(out.payload, xk, cover_grid);

    PixelPlane ll = shifted(reconstruct_ll(out.key, bands.ll), offset);
    SubbandSet sb;
    sb.ll = ll;
    sb.lh = PixelPlane(ll.rows(), ll.cols(), 0);
    sb.hl = sb.lh;
    sb.hh = sb.lh;
    sb.origin_rows = ll.rows() * 2;
    sb.origin_cols = ll.cols() * 2;
    out.secret = iwt_inverse(sb);
    for (std::int32_t& v : out.secret.data())
        v = std::clamp(v, 0, 255);
    return out;
}

} // namespace

EncodeResult encode(const RgbImage& cover, const PixelPlane& secret1,
                    const PixelPlane& secret2, const XorKey& xk,
                    ConversionMode mode) {
    require_rgb8(cover, "cover");
    require_gray8(secret1, "secret 1");
    require_gray8(secret2, "secret 2");
    if (xk.bytes.empty())
        raise(errc::format, "XOR key must not be empty");

    // Pinning the cover away from 0/255 keeps the inverse color transform
    // clamp-free after embedding, which is what makes reversible-mode
    // extraction bit-exact. bt601 rounding breaks LSBs regardless, so the
    // cover is left untouched there and the self-check decides.
    RgbImage work = mode == ConversionMode::reversible ? condition_cover(cover) : cover;

    YccImage ycc = rgb_to_ycc(work, mode);
    SubbandSet cb_bands = iwt_forward(ycc.cb);
    SubbandSet cr_bands = iwt_forward(ycc.cr);

    const int offset = chroma_match_offset(mode);
    SubbandSet s1_bands = iwt_forward(secret1);
    SubbandSet s2_bands = iwt_forward(secret2);

    // Admission is decided on the raw (un-RLE'd) payload size so that it
    // never depends on how compressible a particular key happens to be.
    BlockGrid cover_grid = partition(cb_bands.ll, 2);
    const std::size_t capacity = embed_capacity(cb_bands);
    const int width = index_bit_width(cover_grid.block_count());
    for (const SubbandSet* sb : {&s1_bands, &s2_bands}) {
        BlockGrid sg = partition(sb->ll, 2);
        std::size_t needed =
            payload_bits_upper_bound(static_cast<std::size_t>(sg.block_count()), width);
        if (needed > capacity)
            raise(errc::capacity,
                  "key payload needs " + std::to_string(needed) + " bits but the carrier holds " +
                      std::to_string(capacity));
    }

    EncodeResult res;
    res.key1 = build_key(shifted(s1_bands.ll, -offset), cb_bands.ll);
    res.key2 = build_key(shifted(s2_bands.ll, -offset), cr_bands.ll);

    KeyPayload payload1 = build_payload(res.key1, xk);
    KeyPayload payload2 = build_payload(res.key2, xk);

    YccImage stego_ycc;
    stego_ycc.mode = mode;
    stego_ycc.y = ycc.y;
    stego_ycc.cb = iwt_inverse(embed_bits(cb_bands, payload1.to_bits()));
    stego_ycc.cr = iwt_inverse(embed_bits(cr_bands, payload2.to_bits()));

    RgbConversion conv = ycc_to_rgb(stego_ycc, mode);
    if (mode == ConversionMode::reversible && conv.clamped_samples != 0)
        raise(errc::internal, "stego reconstruction clamped despite cover conditioning");
    res.stego = conv.image;

    // Mandatory self-decode through the stored RGB domain: the payload must
    // come back bit-exactly or the stego is useless to a decoder.
    bool ok = true;
    try {
        YccImage check = rgb_to_ycc(res.stego, mode);
        ok = extract_payload_bits(iwt_forward(check.cb)) == payload1.to_bits() &&
             extract_payload_bits(iwt_forward(check.cr)) == payload2.to_bits();
    } catch (const StegoError&) {
        ok = false;
    }
    if (!ok)
        raise(errc::self_check,
              std::string("unrecoverable payload: embedded bits do not survive the ") +
                  mode_name(mode) + " color round trip");

    res.report = rgb_quality(cover, res.stego);
    res.digest.payload1_bits = payload1.bit_length();
    res.digest.payload2_bits = payload2.bit_length();
    res.digest.capacity_bits = capacity;
    res.digest.conditioned_samples = count_diffs(cover, work);
    res.digest.verified = true;
    return res;
}

DecodeResult decode(const RgbImage& stego, const XorKey& xk, ConversionMode mode) {
    require_rgb8(stego, "stego");
    if (xk.bytes.empty())
        raise(errc::format, "XOR key must not be empty");

    YccImage ycc = rgb_to_ycc(stego, mode);
    const int offset = chroma_match_offset(mode);

    ChannelDecode c1 = decode_channel(ycc.cb, xk, offset);
    ChannelDecode c2 = decode_channel(ycc.cr, xk, offset);

    DecodeResult res;
    res.secret1 = std::move(c1.secret);
    res.secret2 = std::move(c2.secret);
    res.key1 = std::move(c1.key);
    res.key2 = std::move(c2.key);
    res.diag1 = {c1.payload.bit_length(), c1.payload.entry_count,
                 (c1.payload.flags & kFlagBodyRle) != 0};
    res.diag2 = {c2.payload.bit_length(), c2.payload.entry_count,
                 (c2.payload.flags & kFlagBodyRle) != 0};
    return res;
}

} // namespace iwtsteg
