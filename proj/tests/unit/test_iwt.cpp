#include "doctest.h"

#include "iwtsteg/iwt.hpp"

#include "../support/synthetic.hpp"

using namespace iwtsteg;

TEST_CASE("forward transform of pinned 2x2 blocks") {
    // rows: a=3 (r0,c0), b=5 (r1,c0), c=4 (r0,c1), d=7 (r1,c1)
    PixelPlane p(2, 2, std::vector<std::int32_t>{3, 4, 5, 7});
    SubbandSet b = iwt_forward(p);
    CHECK(b.ll.at(0, 0) == 4);   // floor((3+5)/2)
    CHECK(b.hl.at(0, 0) == 2);   // 5-3
    CHECK(b.lh.at(0, 0) == 1);   // 4-3
    CHECK(b.hh.at(0, 0) == 4);   // 7-3
    CHECK(iwt_inverse(b) == p);

    PixelPlane q(2, 2, std::vector<std::int32_t>{6, 3, 3, 3});
    SubbandSet bq = iwt_forward(q);
    CHECK(bq.ll.at(0, 0) == 4);  // floor(9/2)
    CHECK(bq.hl.at(0, 0) == -3);
    CHECK(bq.lh.at(0, 0) == -3);
    CHECK(bq.hh.at(0, 0) == -3);
    // a = LL - floor(HL/2) = 4 - floor(-3/2) = 4 - (-2) = 6
    CHECK(iwt_inverse(bq) == q);
}

TEST_CASE("constant plane has zero high bands") {
    PixelPlane p(6, 8, 77);
    SubbandSet b = iwt_forward(p);
    CHECK(b.ll == PixelPlane(3, 4, 77));
    CHECK(b.lh == PixelPlane(3, 4, 0));
    CHECK(b.hl == PixelPlane(3, 4, 0));
    CHECK(b.hh == PixelPlane(3, 4, 0));
    CHECK(iwt_inverse(b) == p);
}

TEST_CASE("subband geometry and origin dims") {
    PixelPlane p(10, 16);
    SubbandSet b = iwt_forward(p);
    CHECK(b.ll.rows() == 5);
    CHECK(b.ll.cols() == 8);
    CHECK(b.origin_rows == 10);
    CHECK(b.origin_cols == 16);
}

TEST_CASE("odd dimensions are rejected, no implicit padding") {
    CHECK_THROWS_AS(iwt_forward(PixelPlane(3, 4)), StegoError);
    CHECK_THROWS_AS(iwt_forward(PixelPlane(4, 7)), StegoError);
    try {
        iwt_forward(PixelPlane(5, 5));
        FAIL("expected a throw");
    } catch (const StegoError& e) {
        CHECK(e.code() == errc::dimension);
    }
}

TEST_CASE("perfect reconstruction on random planes, both kernels") {
    testsupport::Rng rng(31);
    for (WaveletKernel k : {WaveletKernel::s_transform, WaveletKernel::cdf22}) {
        for (int iter = 0; iter < 150; ++iter) {
            int rows = 2 * rng.uniform(1, 32);
            int cols = 2 * rng.uniform(1, 32);
            PixelPlane p = testsupport::random_plane(rng, rows, cols, -512, 512);
            REQUIRE(iwt_inverse(iwt_forward(p, k), k) == p);
        }
    }
}

TEST_CASE("s-transform coefficient ranges for 8-bit-style input") {
    testsupport::Rng rng(32);
    for (int iter = 0; iter < 25; ++iter) {
        PixelPlane p = testsupport::random_plane(rng, 16, 16, -255, 255);
        SubbandSet b = iwt_forward(p);
        CHECK(b.ll.in_range(-255, 255));   // mean of two samples stays in range
        CHECK(b.hl.in_range(-510, 510));   // differences can double it
        CHECK(b.lh.in_range(-510, 510));
        CHECK(b.hh.in_range(-510, 510));
    }
}

TEST_CASE("inverse validates band shapes") {
    SubbandSet b = iwt_forward(PixelPlane(4, 4));
    b.hh = PixelPlane(2, 3);
    CHECK_THROWS_AS(iwt_inverse(b), StegoError);
    SubbandSet c = iwt_forward(PixelPlane(4, 4));
    c.origin_rows = 6;
    CHECK_THROWS_AS(iwt_inverse(c), StegoError);
}
