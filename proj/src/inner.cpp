#include "trm/inner.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trm {
namespace {

// Single-word codeword of each generator row (length <= 64).
std::vector<u64> generator_row_words(const RmCode& code) {
    std::vector<u64> rows(code.dimension());
    BitWord coeffs(code.dimension());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        coeffs.set(i, true);
        rows[i] = rm_encode(code, coeffs).data()[0];
        coeffs.set(i, false);
    }
    return rows;
}

}  // namespace

MlTable::MlTable(RmCode code, std::vector<std::uint16_t> entries)
    : code_(code), entries_(std::move(entries)) {
    if (code_.length() > kMaxBits) throw std::invalid_argument("MlTable: code too long");
    if (entries_.size() != (std::size_t(1) << code_.length()))
        throw std::invalid_argument("MlTable: entry count != 2^length");
}

MlTable build_ml_table(const RmCode& code, unsigned cap_bits) {
    const std::size_t n = code.length();
    if (n > cap_bits || n > MlTable::kMaxBits)
        throw std::invalid_argument("build_ml_table: code length exceeds the table cap");
    const std::size_t k = code.dimension();
    const std::size_t nwords = std::size_t(1) << n;
    const std::size_t nmsgs = std::size_t(1) << k;

    // Codeword per message; message integer = coefficient vector read
    // big-endian, so integer bit b toggles coefficient k-1-b.
    const std::vector<u64> grow = generator_row_words(code);
    std::vector<std::uint16_t> cw(nmsgs, 0);
    for (std::size_t msg = 1; msg < nmsgs; ++msg) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(msg));
        cw[msg] = static_cast<std::uint16_t>(cw[msg ^ (std::size_t(1) << b)] ^ grow[k - 1 - b]);
    }

    // Pass 1: distance to the nearest codeword by multi-source BFS.
    std::vector<std::uint8_t> dist(nwords, 0xFF);
    std::vector<std::uint32_t> best(nwords, 0xFFFFFFFFu);
    std::vector<std::uint32_t> frontier, next;
    for (std::size_t msg = 0; msg < nmsgs; ++msg) {
        const std::size_t w = cw[msg];
        if (dist[w] != 0) {
            dist[w] = 0;
            best[w] = static_cast<std::uint32_t>(msg);
            frontier.push_back(static_cast<std::uint32_t>(w));
        }
    }
    std::uint8_t maxd = 0;
    for (std::uint8_t level = 1; !frontier.empty(); ++level) {
        next.clear();
        for (const std::uint32_t w : frontier)
            for (std::size_t b = 0; b < n; ++b) {
                const std::uint32_t w2 = w ^ (std::uint32_t(1) << b);
                if (dist[w2] == 0xFF) {
                    dist[w2] = level;
                    next.push_back(w2);
                }
            }
        frontier.swap(next);
        maxd = level;
    }

    // Pass 2: smallest message index among nearest codewords. Every nearest
    // codeword of a distance-(l-1) neighbor is nearest for w, and every
    // nearest codeword of w is reached through some such neighbor, so the
    // minimum over those neighbors is exact.
    for (std::uint8_t level = 1; level <= maxd; ++level)
        for (std::size_t w = 0; w < nwords; ++w) {
            if (dist[w] != level) continue;
            std::uint32_t b = 0xFFFFFFFFu;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t w2 = w ^ (std::size_t(1) << j);
                if (dist[w2] == level - 1) b = std::min(b, best[w2]);
            }
            best[w] = b;
        }

    std::vector<std::uint16_t> entries(nwords);
    for (std::size_t w = 0; w < nwords; ++w) entries[w] = cw[best[w]];
    return MlTable(code, std::move(entries));
}

BitWord ml_decode(const RmCode& code, const BitWord& w, const MlTable* table) {
    const std::size_t n = code.length();
    if (w.size() != n) throw std::invalid_argument("ml_decode: length mismatch");
    if (table && table->code() == code) {
        BitWord out(n);
        out.data()[0] = table->lookup(w.data()[0]);
        return out;
    }
    const std::size_t k = code.dimension();
    if (k > 26) throw std::invalid_argument("ml_decode: dimension too large for direct search");
    if (n <= 64) {
        const std::vector<u64> grow = generator_row_words(code);
        const u64 target = w.data()[0];
        u64 cur = 0, bestcw = 0;
        unsigned bestd = static_cast<unsigned>(std::popcount(target));
        u64 bestmsg = 0;
        for (u64 g = 1; g < (u64(1) << k); ++g) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(g));
            cur ^= grow[k - 1 - b];  // Gray step; gray = g ^ (g>>1) is the message integer
            const u64 gray = g ^ (g >> 1);
            const unsigned d = static_cast<unsigned>(std::popcount(cur ^ target));
            if (d < bestd || (d == bestd && gray < bestmsg)) {
                bestd = d;
                bestmsg = gray;
                bestcw = cur;
            }
        }
        BitWord out(n);
        out.data()[0] = bestcw;
        return out;
    }
    // Long codes: same Gray scan over multi-word codewords.
    std::vector<BitWord> rows(k, BitWord(0));
    {
        BitWord coeffs(k);
        for (std::size_t i = 0; i < k; ++i) {
            coeffs.set(i, true);
            rows[i] = rm_encode(code, coeffs);
            coeffs.set(i, false);
        }
    }
    BitWord cur(n), bestcw(n);
    u64 bestd = w.count_ones(), bestmsg = 0;
    for (u64 g = 1; g < (u64(1) << k); ++g) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(g));
        cur.xor_with(rows[k - 1 - b]);
        const u64 gray = g ^ (g >> 1);
        const u64 d = hamming(cur, w);
        if (d < bestd || (d == bestd && gray < bestmsg)) {
            bestd = d;
            bestmsg = gray;
            bestcw = cur;
        }
    }
    return bestcw;
}

BitWord majority_decode(const RmCode& code, const BitWord& w) {
    const std::size_t n = code.length();
    if (w.size() != n) throw std::invalid_argument("majority_decode: length mismatch");
    const int m = code.m;
    const std::size_t W = w.words();
    const u64 full = n - 1;  // all point-index bits
    const auto masks = monomial_masks(code);

    BitWord work = w;                 // residual after subtracting recovered layers
    BitWord layer(n);                 // ANF scatter of the current degree
    std::vector<u64> scratch(W);

    for (int s = code.r; s >= 0; --s) {
        std::fill(layer.data(), layer.data() + W, 0);
        bool any = false;
        for (const u32 mu : masks) {
            if (std::popcount(mu) != s) continue;
            // coset sums along the monomial's directions: after folding, the
            // vote for coset base b sits at position b | mu
            std::copy(work.data(), work.data() + W, scratch.begin());
            for (u32 dirs = mu; dirs;) {
                const int d = std::countr_zero(dirs);
                dirs &= dirs - 1;
                subset_xor_axis(scratch.data(), m, d);
            }
            const u64 nb = full & ~u64(mu);
            u64 ones = 0;
            for (u64 b = nb;;) {
                const u64 p = b | mu;
                ones += (scratch[p >> 6] >> (p & 63)) & 1;
                if (b == 0) break;
                b = (b - 1) & nb;
            }
            const u64 votes = u64(1) << (m - s);
            if (2 * ones > votes) {
                layer.set(mu, true);
                any = true;
            }
        }
        if (any) {
            subset_xor_transform(layer.data(), m);  // ANF layer -> evaluations
            kern::ops().xor_into(work.data(), layer.data(), W);
        }
    }
    BitWord out = w;
    out.xor_with(work);  // sum of the recovered layers
    return out;
}

BitWord highrate_decode(const RmCode& code, const BitWord& w) {
    return highrate_decode(RmMembership(code), w);
}

BitWord highrate_decode(const RmMembership& memb, const BitWord& w) {
    if (memb.check(w)) return w;
    return majority_decode(memb.code(), w);
}

}  // namespace trm
