#include "trm/linear.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace trm {

GenMatrix GenMatrix::from_strings(const std::vector<std::string>& rs) {
    if (rs.empty()) throw std::invalid_argument("GenMatrix: no rows");
    GenMatrix g(rs.size(), rs[0].size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].size() != g.n) throw std::invalid_argument("GenMatrix: ragged rows");
        for (std::size_t j = 0; j < g.n; ++j) {
            if (rs[i][j] != '0' && rs[i][j] != '1')
                throw std::invalid_argument("GenMatrix: rows must be 0/1 strings");
            if (rs[i][j] == '1') g.set(i, j, true);
        }
    }
    return g;
}

std::vector<u32> gf2_rref(u64* rows, std::size_t nrows, std::size_t ncols,
                          std::size_t stride) {
    std::vector<u32> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        const std::size_t wi = col >> 6;
        const u64 bit = u64(1) << (col & 63);
        std::size_t pr = rank;
        while (pr < nrows && !(rows[pr * stride + wi] & bit)) ++pr;
        if (pr == nrows) continue;
        if (pr != rank)
            for (std::size_t w = 0; w < stride; ++w)
                std::swap(rows[pr * stride + w], rows[rank * stride + w]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            if (rows[r * stride + wi] & bit)
                kern::ops().xor_into(rows + r * stride, rows + rank * stride, stride);
        }
        pivots.push_back(static_cast<u32>(col));
        ++rank;
    }
    return pivots;
}

u64 gf2_rank(const GenMatrix& g) {
    std::vector<u64> copy = g.rows;
    return gf2_rref(copy.data(), g.k, g.n, g.stride).size();
}

u64 min_weight_rowspace(const GenMatrix& g, int cap_k) {
    if (g.k > static_cast<std::size_t>(cap_k))
        throw std::invalid_argument("min_weight_rowspace: dimension above cap");
    std::vector<u64> acc(g.stride, 0);
    u64 best = ~u64(0);
    const u64 total = u64(1) << g.k;
    u64 gray = 0;
    for (u64 i = 1; i < total; ++i) {
        const u64 ng = i ^ (i >> 1);
        const unsigned changed = std::countr_zero(gray ^ ng);
        gray = ng;
        kern::ops().xor_into(acc.data(), g.row(changed), g.stride);
        const u64 w = kern::ops().popcount(acc.data(), g.stride);
        if (w > 0 && w < best) best = w;
    }
    return best == ~u64(0) ? 0 : best;
}

LinearEraser::LinearEraser(const GenMatrix& g) : n_(g.n), stride_(words_for(g.n)) {
    std::vector<u64> rref = g.rows;
    const auto pivots = gf2_rref(rref.data(), g.k, g.n, g.stride);
    rank_ = pivots.size();
    checks_ = n_ - rank_;
    h_.assign(checks_ * stride_, 0);
    // One check per non-pivot column q: x_q + sum_i rref_i[q] * x_{pivot_i} = 0.
    std::vector<char> is_pivot(n_, 0);
    for (u32 p : pivots) is_pivot[p] = 1;
    std::size_t ci = 0;
    for (std::size_t q = 0; q < n_; ++q) {
        if (is_pivot[q]) continue;
        u64* h = h_.data() + ci * stride_;
        h[q >> 6] |= u64(1) << (q & 63);
        for (std::size_t i = 0; i < rank_; ++i)
            if ((rref[i * g.stride + (q >> 6)] >> (q & 63)) & 1)
                h[pivots[i] >> 6] |= u64(1) << (pivots[i] & 63);
        ++ci;
    }
}

bool LinearEraser::is_member(const BitWord& w) const {
    if (w.size() != n_) throw std::invalid_argument("is_member: length mismatch");
    for (std::size_t i = 0; i < checks_; ++i) {
        u64 acc = 0;
        const u64* h = check(i);
        for (std::size_t wd = 0; wd < stride_; ++wd) acc ^= h[wd] & w.data()[wd];
        if (std::popcount(acc) & 1) return false;
    }
    return true;
}

std::optional<BitWord> LinearEraser::complete(const TriWord& y) const {
    if (y.size() != n_) throw std::invalid_argument("linear_complete: length mismatch");
    TriWord yc = y;
    yc.normalize();
    std::vector<u32> erased;
    for (std::size_t j = 0; j < n_; ++j)
        if (yc.erased.get(j)) erased.push_back(static_cast<u32>(j));
    const std::size_t e = erased.size();

    // Equations over the erased unknowns; last column is the right-hand side.
    const std::size_t eqcols = e + 1;
    const std::size_t estride = words_for(eqcols);
    std::vector<u64> eq(checks_ * estride, 0);
    for (std::size_t i = 0; i < checks_; ++i) {
        const u64* h = check(i);
        u64* row = eq.data() + i * estride;
        for (std::size_t idx = 0; idx < e; ++idx)
            if ((h[erased[idx] >> 6] >> (erased[idx] & 63)) & 1)
                row[idx >> 6] |= u64(1) << (idx & 63);
        u64 acc = 0;
        for (std::size_t wd = 0; wd < stride_; ++wd) acc ^= h[wd] & yc.values.data()[wd];
        if (std::popcount(acc) & 1) row[e >> 6] |= u64(1) << (e & 63);
    }
    const auto pivots = gf2_rref(eq.data(), checks_, eqcols, estride);
    std::size_t unknown_pivots = 0;
    for (u32 p : pivots) {
        if (p == e) return std::nullopt;  // 0 = 1 row: no consistent codeword
        ++unknown_pivots;
    }
    if (unknown_pivots < e) return std::nullopt;  // underdetermined
    BitWord out = yc.values;
    // all e columns are pivots, so row i reads x_{erased[i]} = rhs_i
    for (std::size_t i = 0; i < e; ++i) {
        const u64* row = eq.data() + i * estride;
        out.set(erased[i], (row[e >> 6] >> (e & 63)) & 1);
    }
    return out;
}

std::optional<BitWord> linear_complete(const GenMatrix& g, const TriWord& y) {
    return LinearEraser(g).complete(y);
}

}  // namespace trm
