#pragma once
#include <cstddef>
#include <cstdint>

// Bulk operations on packed GF(2) words. Every operation has a scalar
// reference implementation and may have SIMD variants; the active backend is
// chosen once at startup (overridable via set_backend or TRM_KERNELS=scalar|avx2).
// All variants are bit-exact equivalents; tests compare them on random buffers.

namespace trm::kern {

using u64 = std::uint64_t;

struct Ops {
    const char* name;
    void (*xor_into)(u64* dst, const u64* src, std::size_t n);
    void (*xor3)(u64* dst, const u64* a, const u64* b, std::size_t n);
    void (*or_into)(u64* dst, const u64* src, std::size_t n);
    void (*and_into)(u64* dst, const u64* src, std::size_t n);
    void (*andnot_into)(u64* dst, const u64* src, std::size_t n);  // dst &= ~src
    // a[i] ^= (a[i] & mask) << shift, per word; the subset-transform butterfly
    // for strides below the word size.
    void (*xor_shl_masked)(u64* a, std::size_t n, u64 mask, unsigned shift);
    // vsum = (vlo ^ vhi) & ~(elo | ehi); esum = elo | ehi  (tri-valued halves sum)
    void (*tri_halves_sum)(const u64* vlo, const u64* vhi, const u64* elo,
                           const u64* ehi, u64* vsum, u64* esum, std::size_t n);
    u64 (*popcount)(const u64* a, std::size_t n);
    u64 (*popcount_xor)(const u64* a, const u64* b, std::size_t n);
    // popcount((a ^ b) & ~mask): Hamming distance ignoring masked positions
    u64 (*popcount_xor_andnot)(const u64* a, const u64* b, const u64* mask,
                               std::size_t n);
    bool (*is_zero)(const u64* a, std::size_t n);
    bool (*xor_andnot_is_zero)(const u64* a, const u64* b, const u64* mask,
                               std::size_t n);
    bool (*andnot_is_zero)(const u64* a, const u64* mask, std::size_t n);  // a & ~mask == 0
};

enum class Backend { scalar, avx2 };

const Ops& scalar_ops();
bool backend_available(Backend b);
void set_backend(Backend b);  // throws std::invalid_argument if unavailable
Backend active_backend();
const Ops& ops();  // the active backend's table

}  // namespace trm::kern
