#pragma once
#include <span>

#include "trm/component.hpp"
#include "trm/tensor.hpp"

namespace trm {

struct TensorDecodeOptions {
    // Memoize, per distinct erasure mask on an axis, the row-reduced solution
    // template and replay it per vector. Off = plain per-vector f_C; both
    // paths are bit-identical (tested).
    bool use_pattern_cache = true;
    // Components longer than this never get templates (replay would cost more
    // than the component's own completion); membership fast path still applies.
    std::size_t cache_length_limit = 2048;
    std::size_t cache_max_entries = 1u << 16;
};

struct TensorDecodeStats {
    u64 completions = 0;  // f_C applications across all axes and levels
    u64 cache_hits = 0;
    u64 cache_misses = 0;
    u64 member_checks = 0;  // erasure-free fast-path membership tests
};

// Recursive adversarial decoder for C_1 ⊗ … ⊗ C_t. At each level: recurse on
// every last-axis slice, complete every last-axis vector with f_C, then erase
// everything if any * remains or the result moved >= (Π d_i)/2 from the level
// input (erased input positions excluded from the distance). Output is always
// a tensor codeword or all-*; any error pattern of weight <= adversarial_radius
// is corrected exactly.
TriTensor tensor_decode(std::span<const ComponentCode* const> codes, const TriTensor& a,
                        const TensorDecodeOptions& opts = {},
                        TensorDecodeStats* stats = nullptr);

}  // namespace trm
