#include "trm/tensor_decode.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace trm {
namespace {

u64 word_mask(std::size_t n) { return n >= 64 ? ~u64(0) : (u64(1) << n) - 1; }

struct BitWordHash {
    std::size_t operator()(const BitWord& b) const {
        u64 h = 0x9E3779B97F4A7C15ull ^ b.size();
        for (std::size_t i = 0; i < b.words(); ++i) {
            h ^= b.data()[i];
            h *= 0xBF58476D1CE4E5B9ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

// Solution template for one erasure mask: RREF of the generator restricted to
// the non-erased positions, with the same row operations mirrored on the full
// rows. Replaying a received vector against it yields feasibility plus the
// completing codeword in O(rank) row operations.
struct SmallTemplate {  // component length <= 64
    bool always_star = false;
    u64 ne = 0;  // non-erased mask
    std::vector<u64> sel, full;
    std::vector<unsigned> piv;  // pivot index in the compressed space
};

SmallTemplate build_small(const ComponentCode* code, u64 mask, std::size_t n) {
    SmallTemplate t;
    t.ne = ~mask & word_mask(n);
    if (static_cast<u64>(std::popcount(mask)) >= code->d_min()) {
        t.always_star = true;
        return t;
    }
    const GenMatrix& g = code->generator();
    struct Row {
        u64 sel, full;
    };
    std::vector<Row> rows(g.k);
    for (std::size_t i = 0; i < g.k; ++i) {
        rows[i].full = g.row(i)[0];
        rows[i].sel = compress_bits(rows[i].full, t.ne);
    }
    const unsigned s = static_cast<unsigned>(std::popcount(t.ne));
    std::size_t rank = 0;
    for (unsigned col = 0; col < s && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && !((rows[p].sel >> col) & 1)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t q = 0; q < rows.size(); ++q)
            if (q != rank && ((rows[q].sel >> col) & 1)) {
                rows[q].sel ^= rows[rank].sel;
                rows[q].full ^= rows[rank].full;
            }
        t.piv.push_back(col);
        t.sel.push_back(rows[rank].sel);
        t.full.push_back(rows[rank].full);
        ++rank;
    }
    // Unpivoted rows must be fully zero: with fewer erasures than d_min no
    // nonzero codeword vanishes on every non-erased position.
    for (std::size_t q = rank; q < rows.size(); ++q) assert(rows[q].full == 0);
    return t;
}

void replay_small(const SmallTemplate& t, u64& v, u64& e, std::size_t n) {
    if (t.always_star) {
        v = 0;
        e = word_mask(n);
        return;
    }
    u64 r = compress_bits(v, t.ne);
    u64 acc = 0;
    for (std::size_t i = 0; i < t.piv.size(); ++i)
        if ((r >> t.piv[i]) & 1) {
            r ^= t.sel[i];
            acc ^= t.full[i];
        }
    if (r) {
        v = 0;
        e = word_mask(n);
    } else {
        v = acc;
        e = 0;
    }
}

struct WideTemplate {  // 64 < component length <= cache_length_limit
    bool always_star = false;
    std::size_t s = 0, sw = 0, fw = 0, rank = 0;
    std::vector<u64> sel, full;  // rank rows of sw / fw words
    std::vector<u32> piv;
};

// Packs the bits of src selected by the non-erased mask into dst (s bits).
void gather_unerased(const u64* src, const BitWord& erased, u64* dst) {
    const std::size_t n = erased.size();
    std::size_t outpos = 0;
    for (std::size_t w = 0; w < erased.words(); ++w) {
        u64 nm = ~erased.data()[w];
        if (w == erased.words() - 1 && (n & 63)) nm &= (u64(1) << (n & 63)) - 1;
        const unsigned cnt = static_cast<unsigned>(std::popcount(nm));
        if (cnt) deposit_bits(dst, outpos, cnt, compress_bits(src[w], nm));
        outpos += cnt;
    }
}

WideTemplate build_wide(const ComponentCode* code, const BitWord& mask) {
    const std::size_t n = mask.size();
    WideTemplate t;
    if (mask.count_ones() >= code->d_min()) {
        t.always_star = true;
        return t;
    }
    t.s = n - mask.count_ones();
    t.sw = words_for(t.s);
    t.fw = words_for(n);
    const GenMatrix& g = code->generator();
    std::vector<u64> sel(g.k * t.sw, 0), full(g.k * t.fw, 0);
    for (std::size_t i = 0; i < g.k; ++i) {
        gather_unerased(g.row(i), mask, sel.data() + i * t.sw);
        std::copy(g.row(i), g.row(i) + t.fw, full.data() + i * t.fw);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < t.s && rank < g.k; ++col) {
        const std::size_t cw = col >> 6;
        const u64 cb = u64(1) << (col & 63);
        std::size_t p = rank;
        while (p < g.k && !(sel[p * t.sw + cw] & cb)) ++p;
        if (p == g.k) continue;
        if (p != rank) {
            std::swap_ranges(sel.begin() + p * t.sw, sel.begin() + (p + 1) * t.sw,
                             sel.begin() + rank * t.sw);
            std::swap_ranges(full.begin() + p * t.fw, full.begin() + (p + 1) * t.fw,
                             full.begin() + rank * t.fw);
        }
        for (std::size_t q = 0; q < g.k; ++q)
            if (q != rank && (sel[q * t.sw + cw] & cb)) {
                kern::ops().xor_into(sel.data() + q * t.sw, sel.data() + rank * t.sw, t.sw);
                kern::ops().xor_into(full.data() + q * t.fw, full.data() + rank * t.fw, t.fw);
            }
        t.piv.push_back(static_cast<u32>(col));
        ++rank;
    }
    t.rank = rank;
    sel.resize(rank * t.sw);
    full.resize(rank * t.fw);
    t.sel = std::move(sel);
    t.full = std::move(full);
    return t;
}

struct AxisCache {
    std::unordered_map<u64, SmallTemplate> small;
    std::unordered_map<BitWord, WideTemplate, BitWordHash> wide;
};

struct Ctx {
    std::span<const ComponentCode* const> codes;
    const TensorDecodeOptions* opts;
    TensorDecodeStats* stats;
    std::vector<AxisCache> axis;
    std::vector<u64> rs, acc;  // wide replay scratch
};

void run_all_star(u64* vals, u64* ers, std::size_t off, std::size_t n) {
    for (std::size_t k = 0; k < n; k += 64) {
        const unsigned c = static_cast<unsigned>(std::min<std::size_t>(64, n - k));
        deposit_bits(vals, off + k, c, 0);
        deposit_bits(ers, off + k, c, ~u64(0));
    }
}

void run_set_word(u64* vals, u64* ers, std::size_t off, std::size_t n, const u64* cw) {
    copy_bits(cw, 0, vals, off, n);
    for (std::size_t k = 0; k < n; k += 64) {
        const unsigned c = static_cast<unsigned>(std::min<std::size_t>(64, n - k));
        deposit_bits(ers, off + k, c, 0);
    }
}

// Apply f_C (axis component) to the contiguous run [off, off+n) of the planes.
void complete_run(Ctx& ctx, std::size_t axis, u64* vals, u64* ers, std::size_t off,
                  std::size_t n) {
    const ComponentCode* code = ctx.codes[axis];
    if (ctx.stats) ++ctx.stats->completions;

    if (n <= 64) {
        u64 v = extract_bits(vals, off, static_cast<unsigned>(n));
        u64 e = extract_bits(ers, off, static_cast<unsigned>(n));
        if (!ctx.opts->use_pattern_cache) {
            code->complete_word(v, e);
        } else {
            auto& cache = ctx.axis[axis].small;
            auto it = cache.find(e);
            if (it != cache.end()) {
                if (ctx.stats) ++ctx.stats->cache_hits;
                replay_small(it->second, v, e, n);
            } else if (cache.size() < ctx.opts->cache_max_entries) {
                if (ctx.stats) ++ctx.stats->cache_misses;
                it = cache.emplace(e, build_small(code, e, n)).first;
                replay_small(it->second, v, e, n);
            } else {
                code->complete_word(v, e);
            }
        }
        deposit_bits(vals, off, static_cast<unsigned>(n), v);
        deposit_bits(ers, off, static_cast<unsigned>(n), e);
        return;
    }

    BitWord rv(n), re(n);
    copy_bits(vals, off, rv.data(), 0, n);
    copy_bits(ers, off, re.data(), 0, n);

    const auto fallback = [&] {
        const TriWord out = code->complete(TriWord(std::move(rv), std::move(re)));
        copy_bits(out.values.data(), 0, vals, off, n);
        copy_bits(out.erased.data(), 0, ers, off, n);
    };

    if (!ctx.opts->use_pattern_cache) {
        fallback();
        return;
    }
    if (re.is_zero()) {
        if (ctx.stats) ++ctx.stats->member_checks;
        if (!code->is_member(rv)) run_all_star(vals, ers, off, n);
        return;
    }
    if (n > ctx.opts->cache_length_limit) {
        fallback();
        return;
    }
    auto& cache = ctx.axis[axis].wide;
    auto it = cache.find(re);
    if (it == cache.end()) {
        if (cache.size() >= ctx.opts->cache_max_entries) {
            fallback();
            return;
        }
        if (ctx.stats) ++ctx.stats->cache_misses;
        it = cache.emplace(re, build_wide(code, re)).first;
    } else if (ctx.stats) {
        ++ctx.stats->cache_hits;
    }
    const WideTemplate& t = it->second;
    if (t.always_star) {
        run_all_star(vals, ers, off, n);
        return;
    }
    ctx.rs.assign(t.sw, 0);
    ctx.acc.assign(t.fw, 0);
    gather_unerased(rv.data(), re, ctx.rs.data());
    for (std::size_t i = 0; i < t.rank; ++i) {
        const u32 p = t.piv[i];
        if ((ctx.rs[p >> 6] >> (p & 63)) & 1) {
            kern::ops().xor_into(ctx.rs.data(), t.sel.data() + i * t.sw, t.sw);
            kern::ops().xor_into(ctx.acc.data(), t.full.data() + i * t.fw, t.fw);
        }
    }
    if (kern::ops().is_zero(ctx.rs.data(), t.sw))
        run_set_word(vals, ers, off, n, ctx.acc.data());
    else
        run_all_star(vals, ers, off, n);
}

// One level of the recursion over the flat planes (axes dims[0..t), last axis
// fastest, nbits = prod dims).
void decode_level(Ctx& ctx, std::span<const u32> dims, u64* vals, u64* ers,
                  std::size_t nbits) {
    const std::size_t t = dims.size();
    if (t == 1) {
        complete_run(ctx, 0, vals, ers, 0, nbits);
        return;
    }
    const std::size_t W = words_for(nbits);
    const std::size_t C = dims[t - 1], R = nbits / C;

    const std::vector<u64> v0(vals, vals + W), e0(ers, ers + W);

    // rotate the last axis to the front so the n_t slices are contiguous
    std::vector<u64> tv(W), te(W);
    bit_transpose(vals, tv.data(), R, C);
    bit_transpose(ers, te.data(), R, C);
    if (R % 64 == 0) {
        const std::size_t sw = R / 64;
        for (std::size_t j = 0; j < C; ++j)
            decode_level(ctx, dims.first(t - 1), tv.data() + j * sw, te.data() + j * sw, R);
    } else {
        std::vector<u64> sv(words_for(R)), se(words_for(R));
        for (std::size_t j = 0; j < C; ++j) {
            std::fill(sv.begin(), sv.end(), 0);
            std::fill(se.begin(), se.end(), 0);
            copy_bits(tv.data(), j * R, sv.data(), 0, R);
            copy_bits(te.data(), j * R, se.data(), 0, R);
            decode_level(ctx, dims.first(t - 1), sv.data(), se.data(), R);
            copy_bits(sv.data(), 0, tv.data(), j * R, R);
            copy_bits(se.data(), 0, te.data(), j * R, R);
        }
    }
    bit_transpose(tv.data(), vals, C, R);
    bit_transpose(te.data(), ers, C, R);

    // complete every last-axis vector (contiguous runs of length C)
    for (std::size_t i = 0; i < R; ++i) complete_run(ctx, t - 1, vals, ers, i * C, C);

    // erase the whole level if any * remains or the result moved too far from
    // the level input (erased input positions excluded from the distance)
    bool star = !kern::ops().is_zero(ers, W);
    if (!star) {
        u64 dprod = 1;
        for (std::size_t i = 0; i < t; ++i) dprod *= ctx.codes[i]->d_min();
        const u64 dist = kern::ops().popcount_xor_andnot(vals, v0.data(), e0.data(), W);
        star = 2 * dist >= dprod;
    }
    if (star) {
        std::fill(vals, vals + W, 0);
        std::fill(ers, ers + W, ~u64(0));
        if (nbits & 63) ers[W - 1] = (u64(1) << (nbits & 63)) - 1;
    }
}

}  // namespace

TriTensor tensor_decode(std::span<const ComponentCode* const> codes, const TriTensor& a,
                        const TensorDecodeOptions& opts, TensorDecodeStats* stats) {
    const TensorShape& sh = a.shape();
    if (codes.empty() || codes.size() != sh.t())
        throw std::invalid_argument("tensor_decode: component count must match tensor rank");
    for (std::size_t i = 0; i < codes.size(); ++i)
        if (codes[i]->length() != sh.dims[i])
            throw std::invalid_argument("tensor_decode: axis length mismatch");
    TriTensor out = a;
    out.flat().normalize();
    Ctx ctx{codes, &opts, stats, {}, {}, {}};
    ctx.axis.resize(codes.size());
    decode_level(ctx, std::span<const u32>(sh.dims.data(), sh.dims.size()),
                 out.flat().values.data(), out.flat().erased.data(), sh.total());
    return out;
}

}  // namespace trm
