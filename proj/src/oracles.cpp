#include "trm/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trm::oracle {

namespace {

void check_rm_params(int r, int m) {
    if (m < 0 || m > 20 || r < 0 || r > m)
        throw std::invalid_argument("oracle: need 0 <= r <= m <= 20");
}

std::size_t cols_of(const Mat& g) {
    if (g.empty()) throw std::invalid_argument("oracle: empty matrix");
    const std::size_t n = g[0].size();
    for (const Vec& row : g)
        if (row.size() != n) throw std::invalid_argument("oracle: ragged matrix");
    return n;
}

}  // namespace

std::vector<std::uint64_t> monomial_masks_from_varlists(int r, int m) {
    check_rm_params(r, m);
    std::vector<std::uint64_t> masks;
    std::vector<int> vars;
    for (int d = 0; d <= r; ++d) {
        // Sorted d-subsets of {1..m} in lexicographic order.
        vars.resize(d);
        for (int i = 0; i < d; ++i) vars[i] = i + 1;
        while (true) {
            std::uint64_t mask = 0;
            for (int j : vars) mask |= std::uint64_t(1) << (m - j);
            masks.push_back(mask);
            if (d == 0) break;
            int i = d - 1;
            while (i >= 0 && vars[i] == m - (d - 1 - i)) --i;
            if (i < 0) break;
            ++vars[i];
            for (int j = i + 1; j < d; ++j) vars[j] = vars[j - 1] + 1;
        }
    }
    return masks;
}

Mat rm_generator(int r, int m) {
    const auto masks = monomial_masks_from_varlists(r, m);
    const std::size_t n = std::size_t(1) << m;
    Mat g(masks.size(), Vec(n, 0));
    for (std::size_t k = 0; k < masks.size(); ++k)
        for (std::size_t p = 0; p < n; ++p)
            g[k][p] = (p & masks[k]) == masks[k] ? 1 : 0;
    return g;
}

std::vector<Vec> enumerate_codewords(const Mat& gen) {
    const std::size_t n = cols_of(gen);
    const std::size_t k = gen.size();
    if (k > 20) throw std::invalid_argument("oracle: enumeration capped at dimension 20");
    std::vector<Vec> out(std::size_t(1) << k, Vec(n, 0));
    for (std::size_t i = 1; i < out.size(); ++i) {
        const int b = std::countr_zero(i);
        const Vec& prev = out[i & (i - 1)];
        const Vec& row = gen[k - 1 - std::size_t(b)];
        for (std::size_t p = 0; p < n; ++p) out[i][p] = prev[p] ^ row[p];
    }
    return out;
}

Vec combine_rows(const Mat& gen, const Vec& coeffs) {
    const std::size_t n = cols_of(gen);
    if (coeffs.size() != gen.size())
        throw std::invalid_argument("oracle: coefficient count != row count");
    Vec out(n, 0);
    for (std::size_t i = 0; i < gen.size(); ++i)
        if (coeffs[i])
            for (std::size_t p = 0; p < n; ++p) out[p] ^= gen[i][p];
    return out;
}

std::uint64_t hamming(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("oracle: length mismatch");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::uint64_t weight(const Vec& a) {
    std::uint64_t w = 0;
    for (std::uint8_t v : a) w += v != 0;
    return w;
}

Vec nearest_in(const std::vector<Vec>& codewords, const Vec& w) {
    if (codewords.empty()) throw std::invalid_argument("oracle: empty codeword list");
    std::size_t best = 0;
    std::uint64_t bestd = hamming(codewords[0], w);
    for (std::size_t i = 1; i < codewords.size(); ++i) {
        const std::uint64_t d = hamming(codewords[i], w);
        if (d < bestd) {
            bestd = d;
            best = i;
        }
    }
    return codewords[best];
}

Vec nearest_codeword(const Mat& gen, const Vec& w) {
    return nearest_in(enumerate_codewords(gen), w);
}

std::uint64_t min_distance_bruteforce(const Mat& gen) {
    const std::size_t n = cols_of(gen);
    const std::size_t k = gen.size();
    if (k > 20) throw std::invalid_argument("oracle: enumeration capped at dimension 20");
    // Gray-code walk: step i flips exactly one row, so memory stays O(n).
    Vec cur(n, 0);
    std::uint64_t best = n + 1;
    for (std::size_t i = 1; i < (std::size_t(1) << k); ++i) {
        const Vec& row = gen[k - 1 - std::size_t(std::countr_zero(i))];
        std::uint64_t w = 0;
        for (std::size_t p = 0; p < n; ++p) {
            cur[p] ^= row[p];
            w += cur[p];
        }
        // dependent rows can reproduce the zero word; it is not a distance
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

std::vector<Vec> consistent_codewords(const Mat& gen, const Vec& w) {
    const std::size_t n = cols_of(gen);
    if (w.size() != n) throw std::invalid_argument("oracle: length mismatch");
    std::vector<Vec> out;
    for (const Vec& c : enumerate_codewords(gen)) {
        bool ok = true;
        for (std::size_t p = 0; p < n && ok; ++p)
            if (w[p] != 2 && w[p] != c[p]) ok = false;
        if (ok) out.push_back(c);
    }
    // dependent rows make enumeration revisit words; report the set
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Vec> unique_consistent_codeword(const Mat& gen, const Vec& w) {
    const std::size_t n = cols_of(gen);
    const std::size_t k = gen.size();
    if (w.size() != n) throw std::invalid_argument("oracle: length mismatch");
    // One equation per unerased position p: sum_i x_i gen[i][p] = w[p], with
    // the observed value carried in an augmented column.
    std::vector<Vec> eq;
    for (std::size_t p = 0; p < n; ++p) {
        if (w[p] == 2) continue;
        Vec row(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) row[i] = gen[i][p];
        row[k] = w[p];
        eq.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_of;  // column of each eliminated row
    std::size_t rr = 0;
    for (std::size_t col = 0; col < k && rr < eq.size(); ++col) {
        std::size_t sel = rr;
        while (sel < eq.size() && !eq[sel][col]) ++sel;
        if (sel == eq.size()) continue;
        std::swap(eq[rr], eq[sel]);
        for (std::size_t i = 0; i < eq.size(); ++i)
            if (i != rr && eq[i][col])
                for (std::size_t j = col; j <= k; ++j) eq[i][j] ^= eq[rr][j];
        pivot_of.push_back(col);
        ++rr;
    }
    for (std::size_t i = rr; i < eq.size(); ++i)
        if (eq[i][k]) return std::nullopt;  // inconsistent
    // Free coefficients leave the codeword unique exactly when each of their
    // null-space directions combines to the zero word over the full length.
    std::vector<std::uint8_t> is_pivot(k, 0);
    for (const std::size_t c : pivot_of) is_pivot[c] = 1;
    for (std::size_t f = 0; f < k; ++f) {
        if (is_pivot[f]) continue;
        Vec null(k, 0);
        null[f] = 1;
        for (std::size_t i = 0; i < rr; ++i) null[pivot_of[i]] = eq[i][f];
        if (weight(combine_rows(gen, null)) > 0) return std::nullopt;
    }
    Vec x(k, 0);
    for (std::size_t i = 0; i < rr; ++i) x[pivot_of[i]] = eq[i][k];
    return combine_rows(gen, x);
}

std::uint64_t rank(const Mat& rows) {
    if (rows.empty()) return 0;
    const std::size_t n = cols_of(rows);
    const std::size_t nw = (n + 63) / 64;
    // Pack locally so elimination on wide matrices stays affordable.
    std::vector<std::vector<std::uint64_t>> p(rows.size(),
                                              std::vector<std::uint64_t>(nw, 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rows[i][j]) p[i][j / 64] |= std::uint64_t(1) << (j % 64);
    std::size_t rr = 0;
    for (std::size_t col = 0; col < n && rr < p.size(); ++col) {
        const std::size_t wi = col / 64;
        const std::uint64_t bit = std::uint64_t(1) << (col % 64);
        std::size_t sel = rr;
        while (sel < p.size() && !(p[sel][wi] & bit)) ++sel;
        if (sel == p.size()) continue;
        std::swap(p[rr], p[sel]);
        for (std::size_t i = rr + 1; i < p.size(); ++i)
            if (p[i][wi] & bit)
                for (std::size_t j = wi; j < nw; ++j) p[i][j] ^= p[rr][j];
        ++rr;
    }
    return rr;
}

bool in_rowspace(const Mat& gen, const Vec& w) {
    if (w.size() != cols_of(gen)) throw std::invalid_argument("oracle: length mismatch");
    Mat ext = gen;
    ext.push_back(w);
    return rank(ext) == rank(gen);
}

Vec coefficient_recovery(int r, int m, const Vec& evals) {
    check_rm_params(r, m);
    const std::size_t n = std::size_t(1) << m;
    if (evals.size() != n) throw std::invalid_argument("oracle: length mismatch");
    const auto masks = monomial_masks_from_varlists(r, m);
    Vec coeffs(masks.size(), 0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
        std::uint8_t acc = 0;
        for (std::size_t p = 0; p < n; ++p)
            if ((p & ~masks[i]) == 0) acc ^= evals[p] & 1;
        coeffs[i] = acc;
    }
    return coeffs;
}

bool rm_member_anf(int r, int m, const Vec& evals) {
    check_rm_params(r, m);
    const std::size_t n = std::size_t(1) << m;
    if (evals.size() != n) throw std::invalid_argument("oracle: length mismatch");
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        if (std::popcount(mask) <= r) continue;
        std::uint8_t acc = 0;
        for (std::size_t p = 0; p < n; ++p)
            if ((p & ~mask) == 0) acc ^= evals[p] & 1;
        if (acc) return false;
    }
    return true;
}

Mat kronecker_generator(const std::vector<Mat>& gens) {
    if (gens.empty()) throw std::invalid_argument("oracle: no factors");
    Mat acc{Vec{1}};
    for (const Mat& g : gens) {
        const std::size_t ng = cols_of(g);
        const std::size_t na = acc[0].size();
        Mat next(acc.size() * g.size(), Vec(na * ng, 0));
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b)
                for (std::size_t c = 0; c < na; ++c)
                    for (std::size_t d = 0; d < ng; ++d)
                        next[a * g.size() + b][c * ng + d] = acc[a][c] & g[b][d];
        acc = std::move(next);
    }
    return acc;
}

bool ssv_condition_holds(int m, int t, const Vec& z) {
    if (t < 0 || t > m) throw std::invalid_argument("oracle: need 0 <= t <= m");
    const std::size_t n = std::size_t(1) << m;
    if (z.size() != n) throw std::invalid_argument("oracle: length mismatch");
    const auto cws = enumerate_codewords(rm_generator(m - t, m));
    for (std::size_t i = 1; i < cws.size(); ++i) {
        bool covered = true;
        for (std::size_t p = 0; p < n && covered; ++p)
            if (cws[i][p] && !z[p]) covered = false;
        if (covered) return false;
    }
    return true;
}

bool tensor_member_axiswise(const std::vector<Mat>& gens,
                            const std::vector<std::size_t>& dims, const Vec& w) {
    if (gens.size() != dims.size() || gens.empty())
        throw std::invalid_argument("oracle: factor/axis count mismatch");
    std::size_t total = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] == 0 || cols_of(gens[i]) != dims[i])
            throw std::invalid_argument("oracle: axis length mismatch");
        total *= dims[i];
    }
    if (w.size() != total) throw std::invalid_argument("oracle: length mismatch");
    for (std::size_t axis = 0; axis < dims.size(); ++axis) {
        std::size_t stride = 1;
        for (std::size_t j = axis + 1; j < dims.size(); ++j) stride *= dims[j];
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % dims[axis] != 0) continue;  // not a fiber start
            Vec fiber(dims[axis]);
            for (std::size_t q = 0; q < dims[axis]; ++q) fiber[q] = w[base + q * stride];
            if (!in_rowspace(gens[axis], fiber)) return false;
        }
    }
    return true;
}

}  // namespace trm::oracle
