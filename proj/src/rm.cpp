#include "trm/rm.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace trm {

u64 binom_sum(int m, int r) {
    u64 sum = 0, c = 1;
    for (int i = 0; i <= r; ++i) {
        sum += c;
        c = c * u64(m - i) / u64(i + 1);
    }
    return sum;
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

RmCode::RmCode(int r_, int m_) : r(r_), m(m_) {
    if (r < 0 || m < 0 || r > m || m > 26)
        throw std::invalid_argument("RmCode: need 0 <= r <= m <= 26");
}

std::size_t point_index(std::span<const int> v) {
    std::size_t idx = 0;
    for (int b : v) idx = (idx << 1) | static_cast<std::size_t>(b & 1);
    return idx;
}

std::vector<u32> monomial_masks(const RmCode& code) {
    std::vector<u32> out;
    out.reserve(code.dimension());
    const int m = code.m;
    std::vector<int> vars;
    // combinations of {1..m} of size d in lexicographic order
    auto emit = [&]() {
        u32 msk = 0;
        for (int j : vars) msk |= u32(1) << (m - j);
        out.push_back(msk);
    };
    for (int d = 0; d <= code.r; ++d) {
        vars.assign(d, 0);
        for (int i = 0; i < d; ++i) vars[i] = i + 1;
        if (d == 0) { emit(); continue; }
        while (true) {
            emit();
            int i = d - 1;
            while (i >= 0 && vars[i] == m - (d - 1 - i)) --i;
            if (i < 0) break;
            ++vars[i];
            for (int j = i + 1; j < d; ++j) vars[j] = vars[j - 1] + 1;
        }
    }
    return out;
}

void subset_xor_axis(u64* w, int m, int j) {
    static constexpr u64 kLow[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    const auto& K = kern::ops();
    const std::size_t nw = words_for(std::size_t(1) << m);
    if (j < 6) {
        K.xor_shl_masked(w, nw, kLow[j], 1u << j);
    } else {
        const std::size_t half = std::size_t(1) << (j - 6);
        for (std::size_t blk = 0; blk < nw; blk += 2 * half)
            K.xor_into(w + blk + half, w + blk, half);
    }
}

void subset_xor_transform(u64* w, int m) {
    for (int j = 0; j < m; ++j) subset_xor_axis(w, m, j);
}

BitWord rm_encode(const RmCode& code, const BitWord& coeffs) {
    if (coeffs.size() != code.dimension())
        throw std::invalid_argument("rm_encode: coefficient length != dimension");
    const auto masks = monomial_masks(code);
    BitWord w(code.length());
    for (std::size_t j = 0; j < masks.size(); ++j)
        if (coeffs.get(j)) w.set(masks[j], true);
    subset_xor_transform(w.data(), code.m);
    return w;
}

RmMembership::RmMembership(const RmCode& code)
    : code_(code), allowed_(code.length()), scratch_(words_for(code.length())) {
    for (std::size_t i = 0; i < code_.length(); ++i)
        if (std::popcount(i) <= code_.r) allowed_.set(i, true);
}

bool RmMembership::check_words(const u64* w) const {
    std::memcpy(scratch_.data(), w, scratch_.size() * sizeof(u64));
    subset_xor_transform(scratch_.data(), code_.m);
    // member iff every ANF coefficient above degree r is zero
    return kern::ops().andnot_is_zero(scratch_.data(), allowed_.data(), scratch_.size());
}

bool RmMembership::check(const BitWord& w) const {
    if (w.size() != code_.length())
        throw std::invalid_argument("rm_is_codeword: length mismatch");
    return check_words(w.data());
}

bool rm_is_codeword(const RmCode& code, const BitWord& w) {
    return RmMembership(code).check(w);
}

}  // namespace trm
