#pragma once
#include <optional>
#include <string>
#include <vector>

#include "trm/bits.hpp"

namespace trm {

// Generator matrix over GF(2): k rows of n bits, packed row-major.
struct GenMatrix {
    std::size_t k = 0, n = 0;
    std::size_t stride = 0;  // words per row
    std::vector<u64> rows;
    GenMatrix() = default;
    GenMatrix(std::size_t k_, std::size_t n_)
        : k(k_), n(n_), stride(words_for(n_)), rows(k_ * stride, 0) {}
    static GenMatrix from_strings(const std::vector<std::string>& rs);
    u64* row(std::size_t i) { return rows.data() + i * stride; }
    const u64* row(std::size_t i) const { return rows.data() + i * stride; }
    bool get(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    void set(std::size_t i, std::size_t j, bool b) {
        const u64 m = u64(1) << (j & 63);
        if (b) row(i)[j >> 6] |= m; else row(i)[j >> 6] &= ~m;
    }
};

// In-place reduced row echelon form; returns the pivot columns in ascending
// order (their count is the rank).
std::vector<u32> gf2_rref(u64* rows, std::size_t nrows, std::size_t ncols,
                          std::size_t stride);

u64 gf2_rank(const GenMatrix& g);

// Minimum nonzero weight of the row space, by enumeration (throws above cap).
u64 min_weight_rowspace(const GenMatrix& g, int cap_k = 24);

// Erasure solver for an arbitrary linear code given by a generator matrix.
// Construction row-reduces the generator and derives a full set of parity
// checks; complete() solves the checks for the erased positions.
class LinearEraser {
  public:
    explicit LinearEraser(const GenMatrix& g);

    std::size_t n() const { return n_; }
    u64 rank() const { return rank_; }
    // The unique consistent codeword, or empty if the checks are infeasible
    // or leave any erased position underdetermined.
    std::optional<BitWord> complete(const TriWord& y) const;
    bool is_member(const BitWord& w) const;

  private:
    std::size_t n_;
    u64 rank_;
    std::size_t checks_;        // n - rank
    std::size_t stride_;        // words per check row
    std::vector<u64> h_;        // parity checks, packed
    const u64* check(std::size_t i) const { return h_.data() + i * stride_; }
};

// One-shot convenience wrapper.
std::optional<BitWord> linear_complete(const GenMatrix& g, const TriWord& y);

}  // namespace trm
