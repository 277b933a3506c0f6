#pragma once
#include <span>
#include <vector>

#include "trm/bits.hpp"

namespace trm {

// Sum of binomials C(m,0..r): the dimension of RM(r,m).
u64 binom_sum(int m, int r);
// Binary entropy, log base 2. h(0) = h(1) = 0.
double binary_entropy(double p);

// Reed-Muller code RM(r,m): evaluations of degree-<=r polynomials in m
// variables over F_2, one coordinate per point of F_2^m. Points are ordered
// lexicographically with v_1 as the most significant bit, so coordinate 0 is
// the all-zeros point.
struct RmCode {
    int r = 0;
    int m = 0;
    RmCode() = default;
    RmCode(int r_, int m_);  // validates 0 <= r <= m <= 26
    std::size_t length() const { return std::size_t(1) << m; }
    u64 dimension() const { return binom_sum(m, r); }
    u64 d_min() const { return u64(1) << (m - r); }
    double rate() const { return double(dimension()) / double(length()); }
    friend bool operator==(const RmCode&, const RmCode&) = default;
};

// Index of an evaluation point given its coordinate bits (v_1 first).
std::size_t point_index(std::span<const int> v);

// Monomial masks in canonical order: degree ascending, then lexicographic on
// the sorted variable index lists. Variable j occupies bit (m-j) of the mask,
// matching the point indexing, so a monomial evaluates to 1 at point p iff
// (p & mask) == mask.
std::vector<u32> monomial_masks(const RmCode& code);

// In-place XOR-over-subsets (zeta) transform on 2^m packed bits. Over GF(2)
// this is an involution: it maps ANF coefficients to evaluations and back.
void subset_xor_transform(u64* w, int m);
// Single butterfly pass of the transform along point-index bit j (0 <= j < m):
// w[p | 2^j] ^= w[p] for every p with bit j clear.
void subset_xor_axis(u64* w, int m, int j);

// Evaluation vector of the polynomial with the given coefficients
// (coeffs.size() == dimension, indexed in canonical monomial order).
BitWord rm_encode(const RmCode& code, const BitWord& coeffs);

bool rm_is_codeword(const RmCode& code, const BitWord& w);

// Reusable membership context: caches the mask of ANF positions whose degree
// exceeds r and a scratch buffer. Not safe for concurrent use of one instance.
class RmMembership {
  public:
    explicit RmMembership(const RmCode& code);
    const RmCode& code() const { return code_; }
    bool check(const BitWord& w) const;
    // Raw variant for packed spans of length 2^m bits.
    bool check_words(const u64* w) const;

  private:
    RmCode code_;
    BitWord allowed_;                   // bits at masks with popcount <= r
    mutable std::vector<u64> scratch_;
};

}  // namespace trm
