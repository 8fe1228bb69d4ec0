#include "doctest.h"

#include "iwtsteg/embed.hpp"
#include "iwtsteg/iwt.hpp"
#include "iwtsteg/pipeline.hpp"

#include "../support/synthetic.hpp"

using namespace iwtsteg;

namespace {

const XorKey kKey{{0xDE, 0xAD, 0xBE, 0xEF}};

// The decoder's reconstruction, recomputed without any embedding channel:
// condition the cover, take its chrominance LL as the dictionary, match,
// assemble, undo the offset, invert with zeroed high bands, clamp.
PixelPlane oracle_secret(const RgbImage& cover, const PixelPlane& secret,
                         bool use_cb) {
    YccImage ycc = rgb_to_ycc(condition_cover(cover), ConversionMode::reversible);
    SubbandSet chroma = iwt_forward(use_cb ? ycc.cb : ycc.cr);
    const int offset = chroma_match_offset(ConversionMode::reversible);

    PixelPlane sll = iwt_forward(secret).ll;
    for (std::int32_t& v : sll.data()) v -= offset;

    PixelPlane rec = reconstruct_ll(build_key(sll, chroma.ll), chroma.ll);
    for (std::int32_t& v : rec.data()) v += offset;

    SubbandSet sb;
    sb.ll = rec;
    sb.lh = PixelPlane(rec.rows(), rec.cols(), 0);
    sb.hl = sb.lh;
    sb.hh = sb.lh;
    sb.origin_rows = rec.rows() * 2;
    sb.origin_cols = rec.cols() * 2;
    PixelPlane out = iwt_inverse(sb);
    for (std::int32_t& v : out.data()) v = std::clamp(v, 0, 255);
    return out;
}

} // namespace

TEST_CASE("cover conditioning clips into the margin") {
    RgbImage img{PixelPlane(1, 4, std::vector<std::int32_t>{0, 1, 2, 3}),
                 PixelPlane(1, 4, std::vector<std::int32_t>{252, 253, 254, 255}),
                 PixelPlane(1, 4, 128)};
    RgbImage out = condition_cover(img);
    CHECK(out.r.data() == std::vector<std::int32_t>{2, 2, 2, 3});
    CHECK(out.g.data() == std::vector<std::int32_t>{252, 253, 253, 253});
    CHECK(out.b.data() == std::vector<std::int32_t>{128, 128, 128, 128});
    CHECK(chroma_match_offset(ConversionMode::reversible) == 128);
    CHECK(chroma_match_offset(ConversionMode::bt601) == 0);
}

TEST_CASE("reversible encode/decode recovers both keys bit-for-bit") {
    testsupport::Rng rng(81);
    for (int iter = 0; iter < 6; ++iter) {
        RgbImage cover = testsupport::random_rgb(rng, 64, 64);  // full range, saturated
        PixelPlane s1 = testsupport::random_plane(rng, 32, 32, 0, 255);
        PixelPlane s2 = testsupport::random_plane(rng, 32, 32, 0, 255);

        EncodeResult enc = encode(cover, s1, s2, kKey);
        CHECK(enc.digest.verified);
        DecodeResult dec = decode(enc.stego, kKey);
        REQUIRE(dec.key1 == enc.key1);
        REQUIRE(dec.key2 == enc.key2);
    }
}

TEST_CASE("decoded secrets equal the no-embedding oracle exactly") {
    testsupport::Rng rng(82);
    RgbImage cover = testsupport::random_rgb(rng, 64, 64);
    PixelPlane s1 = testsupport::random_plane(rng, 32, 32, 0, 255);
    PixelPlane s2 = testsupport::random_plane(rng, 32, 32, 0, 255);

    DecodeResult dec = decode(encode(cover, s1, s2, kKey).stego, kKey);
    REQUIRE(dec.secret1 == oracle_secret(cover, s1, true));
    REQUIRE(dec.secret2 == oracle_secret(cover, s2, false));
}

TEST_CASE("stego chrominance LL equals the conditioned cover's") {
    testsupport::Rng rng(83);
    RgbImage cover = testsupport::random_rgb(rng, 32, 32);
    PixelPlane s = testsupport::random_plane(rng, 16, 16, 0, 255);
    EncodeResult enc = encode(cover, s, s, kKey);

    YccImage cover_ycc = rgb_to_ycc(condition_cover(cover), ConversionMode::reversible);
    YccImage stego_ycc = rgb_to_ycc(enc.stego, ConversionMode::reversible);
    CHECK(iwt_forward(stego_ycc.cb).ll == iwt_forward(cover_ycc.cb).ll);
    CHECK(iwt_forward(stego_ycc.cr).ll == iwt_forward(cover_ycc.cr).ll);
    // Y is never a carrier: equal as a full plane
    CHECK(stego_ycc.y == cover_ycc.y);
}

TEST_CASE("in-range covers are not moved by conditioning") {
    RgbImage cover = testsupport::cover_peppers();
    PixelPlane s1 = testsupport::secret_earth();
    PixelPlane s2 = testsupport::secret_moon();
    EncodeResult enc = encode(cover, s1, s2, kKey);
    CHECK(enc.digest.conditioned_samples == 0);
    CHECK(enc.report.psnr_db > 40.0);
}

TEST_CASE("constant secret with a matching cover block reconstructs its LL exactly") {
    // Gray cover pixels make chrominance 0; a constant-128 secret shifts to 0.
    RgbImage cover(
        {PixelPlane(16, 16, 200), PixelPlane(16, 16, 200), PixelPlane(16, 16, 200)});
    PixelPlane secret(8, 8, 128);
    EncodeResult enc = encode(cover, secret, secret, kKey);
    DecodeResult dec = decode(enc.stego, kKey);
    CHECK(dec.secret1 == PixelPlane(8, 8, 128));
    CHECK(dec.secret2 == PixelPlane(8, 8, 128));
}

TEST_CASE("oversized secrets are rejected before any embedding") {
    testsupport::Rng rng(84);
    // 64x64 cover: 3*32*32 = 3072 payload bits per channel. A 128x128
    // secret needs 168 + 1024*8 = 8360 bits and must be refused up front.
    RgbImage cover = testsupport::random_rgb(rng, 64, 64);
    PixelPlane huge = testsupport::random_plane(rng, 128, 128, 0, 255);
    try {
        encode(cover, huge, huge, kKey);
        FAIL("expected a throw");
    } catch (const StegoError& e) {
        CHECK(e.code() == errc::capacity);
    }
}

TEST_CASE("wrong key and missing payload fail loudly at decode") {
    testsupport::Rng rng(85);
    RgbImage cover = testsupport::random_rgb(rng, 32, 32);
    PixelPlane s = testsupport::random_plane(rng, 16, 16, 0, 255);
    RgbImage stego = encode(cover, s, s, kKey).stego;

    try {
        decode(stego, XorKey{{0x01}});
        FAIL("expected a throw");
    } catch (const StegoError& e) {
        CHECK(e.code() == errc::wrong_key);
    }
    try {
        decode(cover, kKey);  // nothing embedded
        FAIL("expected a throw");
    } catch (const StegoError& e) {
        CHECK(e.code() == errc::payload_corrupt);
    }
}

TEST_CASE("empty keys and bad dimensions are rejected") {
    testsupport::Rng rng(86);
    RgbImage cover = testsupport::random_rgb(rng, 32, 32);
    PixelPlane s = testsupport::random_plane(rng, 16, 16, 0, 255);
    CHECK_THROWS_AS(encode(cover, s, s, XorKey{}), StegoError);
    CHECK_THROWS_AS(decode(cover, XorKey{}), StegoError);

    PixelPlane odd = testsupport::random_plane(rng, 15, 16, 0, 255);
    CHECK_THROWS_AS(encode(cover, odd, s, kKey), StegoError);

    RgbImage wide{PixelPlane(32, 32, 0), PixelPlane(32, 32, 0), PixelPlane(32, 32, 999)};
    CHECK_THROWS_AS(encode(wide, s, s, kKey), StegoError);
}

TEST_CASE("bt601 either verifies or throws the unrecoverable-payload error") {
    testsupport::Rng rng(87);
    int verified = 0, refused = 0;
    for (int iter = 0; iter < 8; ++iter) {
        RgbImage cover = testsupport::random_rgb(rng, 32, 32);
        PixelPlane s1 = testsupport::random_plane(rng, 16, 16, 0, 255);
        PixelPlane s2 = testsupport::random_plane(rng, 16, 16, 0, 255);
        try {
            EncodeResult enc = encode(cover, s1, s2, kKey, ConversionMode::bt601);
            REQUIRE(enc.digest.verified);
            DecodeResult dec = decode(enc.stego, kKey, ConversionMode::bt601);
            REQUIRE(dec.key1 == enc.key1);  // verified stego must decode
            REQUIRE(dec.key2 == enc.key2);
            ++verified;
        } catch (const StegoError& e) {
            REQUIRE(e.code() == errc::self_check);
            REQUIRE(std::string(e.what()).find("unrecoverable payload") != std::string::npos);
            ++refused;
        }
    }
    CHECK(verified + refused == 8);
}

TEST_CASE("payload diagnostics surface the framing numbers") {
    testsupport::Rng rng(88);
    RgbImage cover = testsupport::random_rgb(rng, 64, 64);
    PixelPlane s = testsupport::random_plane(rng, 32, 32, 0, 255);
    EncodeResult enc = encode(cover, s, s, kKey);
    CHECK(enc.digest.capacity_bits == 3 * 32 * 32);
    CHECK(enc.digest.payload1_bits >= kPayloadHeaderBits);
    DecodeResult dec = decode(enc.stego, kKey);
    CHECK(dec.diag1.payload_bits == enc.digest.payload1_bits);
    // 32x32 secret -> 16x16 LL -> 8x8 grid of 2x2 blocks
    CHECK(dec.diag1.entry_count == 8 * 8);
}
