#include "doctest.h"

#include "iwtsteg/embed.hpp"

#include "../support/synthetic.hpp"

using namespace iwtsteg;

namespace {

SubbandSet random_bands(testsupport::Rng& rng, int rows, int cols) {
    SubbandSet b;
    b.ll = testsupport::random_plane(rng, rows / 2, cols / 2, -255, 255);
    b.lh = testsupport::random_plane(rng, rows / 2, cols / 2, -510, 510);
    b.hl = testsupport::random_plane(rng, rows / 2, cols / 2, -510, 510);
    b.hh = testsupport::random_plane(rng, rows / 2, cols / 2, -510, 510);
    b.origin_rows = rows;
    b.origin_cols = cols;
    return b;
}

Bitstream random_bits(testsupport::Rng& rng, std::size_t n) {
    Bitstream b;
    for (std::size_t i = 0; i < n; ++i) b.push_bit(static_cast<int>(rng.next() & 1));
    return b;
}

} // namespace

TEST_CASE("capacity counts one bit per high-frequency coefficient") {
    testsupport::Rng rng(61);
    CHECK(embed_capacity(random_bands(rng, 256, 256)) == 49152);  // 3 * 128 * 128
    CHECK(embed_capacity(random_bands(rng, 4, 4)) == 12);
    CHECK(embed_capacity(random_bands(rng, 2, 2)) == 3);
}

TEST_CASE("lsb substitution on pinned values") {
    testsupport::Rng rng(62);
    SubbandSet b = random_bands(rng, 2, 2);
    b.lh.at(0, 0) = 6;

    SubbandSet set1 = embed_bits(b, Bitstream::from01("1"));
    CHECK(set1.lh.at(0, 0) == 7);  // 6 with LSB set

    b.lh.at(0, 0) = -3;
    SubbandSet set0 = embed_bits(b, Bitstream::from01("0"));
    CHECK(set0.lh.at(0, 0) == -4);  // 2*floor(-3/2)+0

    CHECK(extract_bits(set1, 1).to01() == "1");
    CHECK(extract_bits(set0, 1).to01() == "0");
}

TEST_CASE("extraction uses the nonnegative remainder") {
    testsupport::Rng rng(63);
    SubbandSet b = random_bands(rng, 2, 2);
    b.lh.at(0, 0) = 7;
    CHECK(extract_bits(b, 1).bit(0) == 1);
    b.lh.at(0, 0) = -4;
    CHECK(extract_bits(b, 1).bit(0) == 0);
    b.lh.at(0, 0) = -3;
    CHECK(extract_bits(b, 1).bit(0) == 1);
}

TEST_CASE("empty stream leaves the bands unchanged") {
    testsupport::Rng rng(64);
    SubbandSet b = random_bands(rng, 8, 8);
    CHECK(embed_bits(b, Bitstream()) == b);
}

TEST_CASE("round trip and bounded distortion") {
    testsupport::Rng rng(65);
    for (int iter = 0; iter < 50; ++iter) {
        int rows = 2 * rng.uniform(1, 16), cols = 2 * rng.uniform(1, 16);
        SubbandSet b = random_bands(rng, rows, cols);
        std::size_t n = static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int32_t>(embed_capacity(b))));
        Bitstream bits = random_bits(rng, n);
        SubbandSet e = embed_bits(b, bits);

        REQUIRE(extract_bits(e, n) == bits);
        REQUIRE(e.ll == b.ll);  // LL is never part of the carrier

        const PixelPlane* before[] = {&b.lh, &b.hl, &b.hh};
        const PixelPlane* after[] = {&e.lh, &e.hl, &e.hh};
        for (int k = 0; k < 3; ++k)
            for (std::size_t i = 0; i < before[k]->data().size(); ++i) {
                int d = after[k]->data()[i] - before[k]->data()[i];
                REQUIRE(d >= -1);
                REQUIRE(d <= 1);
            }
    }
}

TEST_CASE("scan order is lh, then hl, then hh, row-major") {
    testsupport::Rng rng(66);
    SubbandSet b = random_bands(rng, 4, 4);  // 4 coefficients per band
    for (PixelPlane* p : {&b.lh, &b.hl, &b.hh})
        for (std::int32_t& v : p->data()) v = 0;

    SubbandSet e = embed_bits(b, Bitstream::from01("101100011010"));
    CHECK(e.lh == PixelPlane(2, 2, std::vector<std::int32_t>{1, 0, 1, 1}));
    CHECK(e.hl == PixelPlane(2, 2, std::vector<std::int32_t>{0, 0, 0, 1}));
    CHECK(e.hh == PixelPlane(2, 2, std::vector<std::int32_t>{1, 0, 1, 0}));
}

TEST_CASE("overfull payloads are refused") {
    testsupport::Rng rng(67);
    SubbandSet b = random_bands(rng, 4, 4);
    try {
        embed_bits(b, random_bits(rng, 13));
        FAIL("expected a throw");
    } catch (const StegoError& e) {
        CHECK(e.code() == errc::capacity);
    }
    CHECK_THROWS_AS(extract_bits(b, 13), StegoError);
}
