#pragma once
// Brute-force reference implementations used to cross-check the library.
//
// Everything here works on plain byte-per-bit vectors and deliberately shares
// no code with the production paths: generators come from direct monomial
// evaluation, codeword sets from explicit enumeration, membership and
// completion from textbook Gaussian elimination.  Erased positions in a
// ternary vector are marked with the value 2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace trm::oracle {

using Vec = std::vector<std::uint8_t>;  // one entry per position, values 0/1 (2 = erased)
using Mat = std::vector<Vec>;           // list of rows, all the same length

// Monomial masks in degree-ascending order, ties broken lexicographically on
// the sorted variable lists; variable j occupies bit (m - j) of the mask.
std::vector<std::uint64_t> monomial_masks_from_varlists(int r, int m);

// Rows evaluate each monomial of degree <= r at every point: row for mask u
// has a 1 at point p exactly when (p & u) == u.
Mat rm_generator(int r, int m);

// All 2^k row combinations; index i selects rows by reading its bits
// big-endian, so bit 0 of i toggles the last row.  Enumeration is capped at
// dimension 20 and throws beyond it rather than sampling.
std::vector<Vec> enumerate_codewords(const Mat& gen);

// XOR of the rows whose coefficient byte is 1 (coeffs has one byte per row).
Vec combine_rows(const Mat& gen, const Vec& coeffs);

std::uint64_t hamming(const Vec& a, const Vec& b);
std::uint64_t weight(const Vec& a);

// First codeword at minimal Hamming distance in enumeration-index order.
Vec nearest_codeword(const Mat& gen, const Vec& w);
Vec nearest_in(const std::vector<Vec>& codewords, const Vec& w);

// Minimum weight over the nonzero codewords.
std::uint64_t min_distance_bruteforce(const Mat& gen);

// Distinct codewords agreeing with w on every position where w[i] != 2.
std::vector<Vec> consistent_codewords(const Mat& gen, const Vec& w);

// Solves for the consistent codeword by Gaussian elimination on the unerased
// positions; empty when the system is inconsistent or more than one codeword
// fits (free coefficients that alter the word).
std::optional<Vec> unique_consistent_codeword(const Mat& gen, const Vec& w);

// Rank over GF(2); also powers the row-space membership test below.
std::uint64_t rank(const Mat& rows);
bool in_rowspace(const Mat& gen, const Vec& w);

// ANF coefficients of the monomials of degree <= r, in the order above, each
// recovered as the parity of the evaluations over one subcube.
Vec coefficient_recovery(int r, int m, const Vec& evals);

// A word lies in the degree-r code exactly when every higher-degree
// coefficient vanishes.
bool rm_member_anf(int r, int m, const Vec& evals);

// Kronecker-product generator, first factor outermost: row (i_1,...,i_t) and
// column (p_1,...,p_t) are flattened with the last factor fastest.
Mat kronecker_generator(const std::vector<Mat>& gens);

// Tensor-product membership decided fiber by fiber: every axis-i fiber of the
// flat word (last axis fastest) must lie in the row space of gens[i].
bool tensor_member_axiswise(const std::vector<Mat>& gens,
                            const std::vector<std::size_t>& dims, const Vec& w);

// True when no nonzero codeword of the degree-(m-t) code has its support
// contained in the support of z; characterizes the error patterns the
// high-rate decoder contract covers.
bool ssv_condition_holds(int m, int t, const Vec& z);

}  // namespace trm::oracle
