#include "trm/erasure.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace trm {
namespace {

// Bump allocator over a fixed block. The block is sized to the recursion's
// exact peak up front; growing it here would reallocate and dangle the
// pointers still held by outer frames.
struct Arena {
    std::vector<u64> buf;
    std::size_t top = 0;
    explicit Arena(std::size_t cap) : buf(cap) {}
    u64* alloc(std::size_t n) {
        assert(top + n <= buf.size());
        u64* p = buf.data() + top;
        top += n;
        return p;
    }
};

inline void bump(CompleteStats* st, u64 n) {
    if (st) st->word_ops += n;
}

// Word-sized case: bits [0, 2^m) of v (values) and e (erasure mask), with
// v & e == 0. Returns the completed word or nullopt.
std::optional<u64> complete_small(int r, int m, u64 v, u64 e, CompleteStats* st) {
    bump(st, 1);
    const u64 full = m == 6 ? ~u64(0) : (u64(1) << (1 << m)) - 1;
    if (r == 0) {
        const int ones = std::popcount(v);
        const int known = (1 << m) - std::popcount(e);
        const int zeros = known - ones;
        if (ones > 0 && zeros > 0) return std::nullopt;
        return ones > 0 ? full : 0;
    }
    if (r == m) {
        assert(e == 0);
        return v;
    }
    const int half = 1 << (m - 1);
    const u64 lowm = (u64(1) << half) - 1;
    const u64 v0 = v & lowm, v1 = v >> half;
    const u64 e0 = e & lowm, e1 = e >> half;
    const u64 esum = e0 | e1;
    const u64 vsum = (v0 ^ v1) & ~esum;
    const auto csum = complete_small(r - 1, m - 1, vsum, esum, st);
    if (!csum) return std::nullopt;
    u64 c;
    if (std::popcount(e0) <= std::popcount(e1)) {
        const auto c0 = complete_small(r, m - 1, v0, e0, st);
        if (!c0) return std::nullopt;
        c = *c0 | ((*c0 ^ *csum) << half);
    } else {
        const auto c1 = complete_small(r, m - 1, v1, e1, st);
        if (!c1) return std::nullopt;
        c = ((*c1 ^ *csum) & lowm) | (*c1 << half);
    }
    if ((c ^ v) & ~e) return std::nullopt;
    return c;
}

// General case on word spans of 2^m bits (m >= 6 word-aligned halves).
bool complete_rec(int r, int m, const u64* v, const u64* e, u64* out, Arena& ar,
                  CompleteStats* st) {
    if (m <= 6) {
        const auto c = complete_small(r, m, v[0], e[0], st);
        if (!c) return false;
        out[0] = *c;
        return true;
    }
    const auto& K = kern::ops();
    const std::size_t nw = std::size_t(1) << (m - 6);
    if (r == 0) {
        const u64 ones = K.popcount(v, nw);
        const u64 known = (u64(1) << m) - K.popcount(e, nw);
        bump(st, 2 * nw);
        if (ones > 0 && known > ones) return false;
        const u64 fillv = ones > 0 ? ~u64(0) : 0;
        for (std::size_t i = 0; i < nw; ++i) out[i] = fillv;
        return true;
    }
    if (r == m) {
        assert(K.is_zero(e, nw));
        std::copy(v, v + nw, out);
        bump(st, nw);
        return true;
    }
    const std::size_t hw = nw / 2;
    const std::size_t saved = ar.top;
    u64* vsum = ar.alloc(hw);
    u64* esum = ar.alloc(hw);
    K.tri_halves_sum(v, v + hw, e, e + hw, vsum, esum, hw);
    bump(st, 4 * hw);
    u64* csum = ar.alloc(hw);
    bool ok = complete_rec(r - 1, m - 1, vsum, esum, csum, ar, st);
    if (ok) {
        const u64 e0 = K.popcount(e, hw), e1 = K.popcount(e + hw, hw);
        bump(st, 2 * hw);
        if (e0 <= e1) {
            ok = complete_rec(r, m - 1, v, e, out, ar, st);
            if (ok) K.xor3(out + hw, out, csum, hw);
        } else {
            ok = complete_rec(r, m - 1, v + hw, e + hw, out + hw, ar, st);
            if (ok) K.xor3(out, out + hw, csum, hw);
        }
        if (ok) {
            bump(st, 2 * nw);
            ok = K.xor_andnot_is_zero(out, v, e, nw);
        }
    }
    ar.top = saved;
    return ok;
}

}  // namespace

ErasureOutcome rm_complete(const RmCode& code, const TriWord& y, CompleteStats* stats) {
    if (y.size() != code.length())
        throw std::invalid_argument("rm_complete: length mismatch");
    if (y.erasure_count() >= code.d_min())
        throw std::invalid_argument(
            "rm_complete: needs fewer than 2^(m-r) erasures");
    BitWord out(code.length());
    // Each split level holds 3 half-length scratch buffers while its children
    // run, so the peak is 3 * (2^(m-6) - 1) words along the deepest chain.
    Arena ar(out.words() > 1 ? 3 * (out.words() - 1) : 0);
    TriWord yc = y;
    yc.normalize();
    if (!complete_rec(code.r, code.m, yc.values.data(), yc.erased.data(), out.data(),
                      ar, stats))
        return std::nullopt;
    return out;
}

TriWord f_rm(const RmCode& code, const TriWord& y) {
    if (y.size() != code.length())
        throw std::invalid_argument("f_rm: length mismatch");
    if (y.erasure_count() >= code.d_min()) return TriWord::all_star(y.size());
    const auto c = rm_complete(code, y);
    if (!c) return TriWord::all_star(y.size());
    return TriWord::from_word(*c);
}

}  // namespace trm
