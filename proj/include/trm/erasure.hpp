#pragma once
#include <optional>

#include "trm/rm.hpp"

namespace trm {

// Completion outcome: the unique consistent codeword, or empty (inconsistent).
using ErasureOutcome = std::optional<BitWord>;

// Optional instrumentation: deterministic count of packed words touched,
// used to assert the O(m 2^m) growth without timing flakiness.
struct CompleteStats {
    u64 word_ops = 0;
};

// Recursive erasure completion for RM(r,m). Requires strictly fewer than
// 2^(m-r) erasures (throws std::invalid_argument otherwise; this is a caller
// error, distinct from the Inconsistent outcome). Splits the word into
// halves along the first variable, completes the halves' sum at (r-1, m-1),
// recurses into whichever half carries fewer erasures (ties take the first
// half), and verifies the reassembled word against every non-erased input
// position at each level.
ErasureOutcome rm_complete(const RmCode& code, const TriWord& y,
                           CompleteStats* stats = nullptr);

// Erasure-only decoding rule: the unique consistent codeword when the word
// has fewer than d_min erasures and one exists, the all-* word otherwise.
// Never throws on well-formed input.
TriWord f_rm(const RmCode& code, const TriWord& y);

}  // namespace trm
