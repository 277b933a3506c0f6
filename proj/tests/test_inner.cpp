#include <random>
#include <stdexcept>

#include "doctest.h"
#include "trm/channel.hpp"
#include "trm/inner.hpp"
#include "trm/oracles.hpp"

using namespace trm;

namespace {

oracle::Vec to_vec(const BitWord& w) {
    oracle::Vec v(w.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = w.get(i) ? 1 : 0;
    return v;
}

BitWord word_from_bits(u64 bits, std::size_t n) {
    BitWord w(n);
    for (std::size_t i = 0; i < n; ++i) w.set(i, (bits >> i) & 1);
    return w;
}

BitWord weight_mask(std::size_t n, std::size_t w, u64 seed) {
    NoiseSpec spec;
    spec.kind = NoiseSpec::Kind::adversarial;
    spec.weight = w;
    return apply_noise_bits(spec, BitWord(n), seed);
}

}  // namespace

TEST_SUITE("inner") {
    TEST_CASE("table and direct search match the exhaustive oracle") {
        for (int m = 1; m <= 3; ++m)
            for (int r = 0; r <= m; ++r) {
                const RmCode c(r, m);
                const MlTable table = build_ml_table(c);
                REQUIRE(table.entries().size() == (std::size_t(1) << c.length()));
                const auto cws =
                    oracle::enumerate_codewords(oracle::rm_generator(r, m));
                for (u64 w = 0; w < (u64(1) << c.length()); ++w) {
                    const BitWord bw = word_from_bits(w, c.length());
                    const oracle::Vec want = oracle::nearest_in(cws, to_vec(bw));
                    const BitWord via_table = ml_decode(c, bw, &table);
                    const BitWord via_search = ml_decode(c, bw);
                    CHECK(to_vec(via_table) == want);
                    CHECK(via_table == via_search);
                    CHECK(table.lookup(w) == word_from_bits(table.lookup(w), c.length())
                                                 .data()[0]);  // fits the length
                    CHECK(via_table == word_from_bits(table.lookup(w), c.length()));
                }
            }
    }

    TEST_CASE("length-16 codes agree with the oracle on samples") {
        std::mt19937_64 rng(61);
        for (int r = 1; r <= 3; ++r) {
            const RmCode c(r, 4);
            const MlTable table = build_ml_table(c);
            const auto cws = oracle::enumerate_codewords(oracle::rm_generator(r, 4));
            for (int it = 0; it < 600; ++it) {
                const u64 w = rng() & 0xFFFF;
                const BitWord bw = word_from_bits(w, 16);
                CHECK(to_vec(ml_decode(c, bw, &table)) == oracle::nearest_in(cws, to_vec(bw)));
            }
        }
    }

    TEST_CASE("tie-break anchors") {
        // weight-1 word: the zero codeword wins every tie by message order
        const RmCode c12(1, 2);
        const MlTable t12 = build_ml_table(c12);
        CHECK(t12.lookup(0b0001) == 0);
        CHECK(ml_decode(c12, BitWord::from_string("1000")).to_string() == "0000");
        // two flips of the x1 codeword: four codewords at distance two,
        // smallest message integer selects x1 back
        const RmCode c13(1, 3);
        CHECK(ml_decode(c13, BitWord::from_string("10001011")).to_string() ==
              "00001111");
        const MlTable t13 = build_ml_table(c13);
        CHECK(ml_decode(c13, BitWord::from_string("10001011"), &t13).to_string() ==
              "00001111");
    }

    TEST_CASE("full-space code decodes to the input") {
        const RmCode c(3, 3);
        const MlTable table = build_ml_table(c);
        for (u64 w = 0; w < 256; ++w) {
            CHECK(table.lookup(w) == w);
            CHECK(ml_decode(c, word_from_bits(w, 8), &table) == word_from_bits(w, 8));
        }
    }

    TEST_CASE("table construction respects the length cap") {
        CHECK_THROWS_AS(build_ml_table(RmCode(1, 5)), std::invalid_argument);
        CHECK_THROWS_AS(build_ml_table(RmCode(1, 4), 8), std::invalid_argument);
        CHECK_NOTHROW(build_ml_table(RmCode(1, 4)));
    }

    TEST_CASE("majority decoding corrects every pattern within its radius") {
        std::mt19937_64 rng(62);
        for (const RmCode& c : {RmCode(1, 3), RmCode(1, 4), RmCode(2, 4)}) {
            const u64 radius = (u64(1) << (c.m - c.r - 1)) - 1;
            std::vector<u64> masks;
            for (u64 e = 0; e < (u64(1) << c.length()); ++e)
                if (u64(std::popcount(e)) <= radius) masks.push_back(e);
            for (int it = 0; it < 25; ++it) {
                const BitWord cw = rm_encode(c, random_message(c.dimension(), rng()));
                for (const u64 e : masks) {
                    BitWord y = cw;
                    for (std::size_t i = 0; i < c.length(); ++i)
                        if ((e >> i) & 1) y.flip(i);
                    CHECK(majority_decode(c, y) == cw);
                }
            }
        }
    }

    TEST_CASE("majority decoding on longer codes, sampled within radius") {
        std::mt19937_64 rng(63);
        for (const RmCode& c : {RmCode(2, 5), RmCode(3, 6), RmCode(4, 8), RmCode(5, 7)}) {
            const u64 radius = (u64(1) << (c.m - c.r - 1)) - 1;
            for (int it = 0; it < 150; ++it) {
                const BitWord cw = rm_encode(c, random_message(c.dimension(), rng()));
                BitWord y = cw;
                y.xor_with(weight_mask(c.length(), rng() % (radius + 1), rng()));
                CHECK(majority_decode(c, y) == cw);
            }
        }
    }

    TEST_CASE("majority output is always a codeword") {
        std::mt19937_64 rng(64);
        for (const RmCode& c : {RmCode(1, 4), RmCode(2, 5), RmCode(3, 6)}) {
            for (int it = 0; it < 100; ++it) {
                const BitWord w = random_message(c.length(), rng());
                const BitWord out = majority_decode(c, w);
                CHECK(rm_is_codeword(c, out));
                // decoding a codeword is the identity, so the map is idempotent
                CHECK(majority_decode(c, out) == out);
            }
        }
    }

    TEST_CASE("high-rate repair") {
        std::mt19937_64 rng(65);
        // membership short-circuit: codewords come back untouched
        const RmCode c57(5, 7);
        const RmMembership memb57(c57);
        for (int it = 0; it < 50; ++it) {
            const BitWord cw = rm_encode(c57, random_message(c57.dimension(), rng()));
            CHECK(highrate_decode(c57, cw) == cw);
            CHECK(highrate_decode(memb57, cw) == cw);
            // radius 2^(7-5-1) - 1 = 1: every single flip is repaired
            for (std::size_t i = 0; i < c57.length(); ++i) {
                BitWord y = cw;
                y.flip(i);
                CHECK(highrate_decode(memb57, y) == cw);
            }
        }
        // RM(4,8): radius 7 covers three random flips with room to spare
        const RmCode c48(4, 8);
        const RmMembership memb48(c48);
        for (int it = 0; it < 300; ++it) {
            const BitWord cw = rm_encode(c48, random_message(c48.dimension(), rng()));
            BitWord y = cw;
            y.xor_with(weight_mask(c48.length(), 3, rng()));
            CHECK(highrate_decode(c48, y) == cw);
            CHECK(highrate_decode(memb48, y) == cw);
        }
    }
}
