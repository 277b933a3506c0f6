#pragma once
#include <cstdint>
#include <vector>

#include "trm/rm.hpp"

namespace trm {

// Exhaustive maximum-likelihood lookup table for short RM codes. entries[w]
// is a nearest codeword to w; ties go to the codeword whose coefficient
// vector, read as a big-endian integer in canonical monomial order, is
// smallest.
class MlTable {
  public:
    static constexpr unsigned kMaxBits = 16;

    MlTable() = default;
    MlTable(RmCode code, std::vector<std::uint16_t> entries);

    const RmCode& code() const { return code_; }
    u64 lookup(u64 w) const { return entries_[w]; }
    const std::vector<std::uint16_t>& entries() const { return entries_; }

  private:
    RmCode code_{};
    std::vector<std::uint16_t> entries_;
};

// Builds the full table by multi-source shortest-path sweep over the
// hypercube (throws when the code is longer than the cap).
MlTable build_ml_table(const RmCode& code, unsigned cap_bits = MlTable::kMaxBits);

// Nearest codeword under the canonical tie-break. Uses the table when one for
// this code is supplied; otherwise direct search over all messages.
BitWord ml_decode(const RmCode& code, const BitWord& w, const MlTable* table = nullptr);

// Classical majority-logic (Reed) decoding: for degree s = r down to 0,
// estimate each degree-s coefficient as the majority over the 2^(m-s) coset
// sums of the residual word, a tie counting as 0, and subtract the recovered
// layer. Output (input XOR final residual) is always a codeword; exact
// whenever the error weight is at most 2^(m-r-1) - 1.
BitWord majority_decode(const RmCode& code, const BitWord& w);

// Membership test, then majority repair for non-members. Intended for
// high-rate codes RM(m-t, m), whose majority radius 2^(t-1) - 1 covers the
// random-error workload at these block lengths.
BitWord highrate_decode(const RmCode& code, const BitWord& w);
BitWord highrate_decode(const RmMembership& memb, const BitWord& w);

}  // namespace trm
