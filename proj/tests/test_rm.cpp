#include <array>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "trm/channel.hpp"
#include "trm/oracles.hpp"
#include "trm/rm.hpp"

using namespace trm;

namespace {

oracle::Vec to_vec(const BitWord& w) {
    oracle::Vec v(w.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = w.get(i) ? 1 : 0;
    return v;
}

}  // namespace

TEST_SUITE("rm") {
    TEST_CASE("code descriptor arithmetic") {
        const RmCode c(2, 4);
        CHECK(c.length() == 16);
        CHECK(c.dimension() == 11);
        CHECK(c.d_min() == 4);
        CHECK(c.rate() == doctest::Approx(11.0 / 16.0));
        CHECK(binom_sum(4, 2) == 11);
        CHECK(binom_sum(7, 5) == 120);
        CHECK(binom_sum(8, 6) == 247);
        CHECK(binom_sum(5, 0) == 1);
        CHECK(binom_sum(5, 5) == 32);
        CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
        CHECK(binary_entropy(0.11) == doctest::Approx(0.49992).epsilon(1e-4));
        CHECK(binary_entropy(0.0) == 0.0);
        CHECK(binary_entropy(1.0) == 0.0);
        CHECK_THROWS_AS(RmCode(3, 2), std::invalid_argument);
        CHECK_THROWS_AS(RmCode(-1, 2), std::invalid_argument);
        CHECK_THROWS_AS(RmCode(1, 27), std::invalid_argument);
    }

    TEST_CASE("point order puts the first coordinate in the top bit") {
        {
            const std::array<int, 2> v{0, 0};
            CHECK(point_index(v) == 0);
        }
        {
            const std::array<int, 2> v{1, 0};
            CHECK(point_index(v) == 2);
        }
        {
            const std::array<int, 3> v{0, 1, 1};
            CHECK(point_index(v) == 3);
        }
        // index < 2^(m-1) exactly when the first coordinate is 0
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    const std::array<int, 3> v{a, b, c};
                    CHECK((point_index(v) < 4) == (a == 0));
                }
    }

    TEST_CASE("monomial order is degree-ascending then lexicographic") {
        const auto masks = monomial_masks(RmCode(2, 3));
        // {}, x1, x2, x3, x1x2, x1x3, x2x3 with variable j at bit (m-j)
        const std::vector<u32> want{0, 4, 2, 1, 6, 5, 3};
        CHECK(masks == want);
        for (const RmCode& c : {RmCode(1, 2), RmCode(2, 4), RmCode(3, 5), RmCode(2, 6)}) {
            const auto lib = monomial_masks(c);
            const auto ora = oracle::monomial_masks_from_varlists(c.r, c.m);
            REQUIRE(lib.size() == ora.size());
            for (std::size_t i = 0; i < lib.size(); ++i) CHECK(u64(lib[i]) == ora[i]);
        }
    }

    TEST_CASE("encoding anchors") {
        // coefficients (1) -> all ones
        CHECK(rm_encode(RmCode(0, 2), BitWord::from_string("1")).to_string() == "1111");
        // x1 + x2 evaluates to 0110 over the four points
        CHECK(rm_encode(RmCode(1, 2), BitWord::from_string("011")).to_string() == "0110");
        // x1 alone: second half of the points
        CHECK(rm_encode(RmCode(1, 3), BitWord::from_string("0100")).to_string() ==
              "00001111");
        CHECK_THROWS_AS(rm_encode(RmCode(1, 2), BitWord::from_string("0110")),
                        std::invalid_argument);
    }

    TEST_CASE("round trip against subset-parity coefficient recovery") {
        std::mt19937_64 rng(21);
        for (int m = 1; m <= 5; ++m)
            for (int r = 0; r <= m; ++r) {
                const RmCode c(r, m);
                for (int it = 0; it < 20; ++it) {
                    const BitWord msg = random_message(c.dimension(), rng());
                    const BitWord cw = rm_encode(c, msg);
                    CHECK(to_vec(msg) == oracle::coefficient_recovery(r, m, to_vec(cw)));
                }
            }
    }

    TEST_CASE("membership: exhaustive counts for short codes") {
        CHECK(rm_is_codeword(RmCode(1, 2), BitWord::from_string("0110")));
        CHECK(!rm_is_codeword(RmCode(1, 2), BitWord::from_string("0111")));
        for (int m = 2; m <= 4; ++m)
            for (int r = 0; r < m; ++r) {
                const RmCode c(r, m);
                u64 members = 0;
                for (u64 w = 0; w < (u64(1) << c.length()); ++w) {
                    BitWord bw(c.length());
                    for (std::size_t i = 0; i < c.length(); ++i)
                        if ((w >> i) & 1) bw.set(i, true);
                    if (rm_is_codeword(c, bw)) ++members;
                }
                CHECK(members == (u64(1) << c.dimension()));
            }
    }

    TEST_CASE("membership matches the parity oracle on longer codes") {
        std::mt19937_64 rng(22);
        for (const RmCode& c : {RmCode(2, 5), RmCode(3, 6), RmCode(4, 6)}) {
            const RmMembership memb(c);
            for (int it = 0; it < 200; ++it) {
                BitWord w = it % 2 ? random_message(c.length(), rng())
                                   : rm_encode(c, random_message(c.dimension(), rng()));
                if (it % 4 == 1) w.flip(rng() % c.length());
                const bool want = oracle::rm_member_anf(c.r, c.m, to_vec(w));
                CHECK(rm_is_codeword(c, w) == want);
                CHECK(memb.check(w) == want);
                CHECK(memb.check_words(w.data()) == want);
            }
        }
    }

    TEST_CASE("subset transform is an involution and factors per axis") {
        std::mt19937_64 rng(23);
        for (const int m : {1, 3, 6, 7, 9, 12}) {
            const std::size_t nw = words_for(std::size_t(1) << m);
            std::vector<u64> buf(nw);
            for (u64& x : buf) x = rng();
            if (m < 6) buf[0] &= (u64(1) << (1 << m)) - 1;
            const auto orig = buf;
            subset_xor_transform(buf.data(), m);
            subset_xor_transform(buf.data(), m);
            CHECK(buf == orig);

            auto axiswise = orig;
            for (int j = 0; j < m; ++j) subset_xor_axis(axiswise.data(), m, j);
            subset_xor_transform(buf.data(), m);
            CHECK(axiswise == buf);
        }
    }

    TEST_CASE("evaluations of a monomial follow the submask rule") {
        // The transform of a single coefficient at mask u must light exactly
        // the points p with (p & u) == u.
        const RmCode c(2, 4);
        const auto masks = monomial_masks(c);
        for (std::size_t k = 0; k < masks.size(); ++k) {
            BitWord coeffs(c.dimension());
            coeffs.set(k, true);
            const BitWord cw = rm_encode(c, coeffs);
            for (std::size_t p = 0; p < c.length(); ++p)
                CHECK(cw.get(p) == ((p & masks[k]) == masks[k]));
        }
    }
}
