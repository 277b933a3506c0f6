#include "trm/kernels.hpp"

#include <bit>

namespace trm::kern {
namespace {

void s_xor_into(u64* dst, const u64* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}
void s_xor3(u64* dst, const u64* a, const u64* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}
void s_or_into(u64* dst, const u64* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}
void s_and_into(u64* dst, const u64* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}
void s_andnot_into(u64* dst, const u64* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}
void s_xor_shl_masked(u64* a, std::size_t n, u64 mask, unsigned shift) {
    for (std::size_t i = 0; i < n; ++i) a[i] ^= (a[i] & mask) << shift;
}
void s_tri_halves_sum(const u64* vlo, const u64* vhi, const u64* elo,
                      const u64* ehi, u64* vsum, u64* esum, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const u64 e = elo[i] | ehi[i];
        esum[i] = e;
        vsum[i] = (vlo[i] ^ vhi[i]) & ~e;
    }
}
u64 s_popcount(const u64* a, std::size_t n) {
    u64 c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
    return c;
}
u64 s_popcount_xor(const u64* a, const u64* b, std::size_t n) {
    u64 c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] ^ b[i]);
    return c;
}
u64 s_popcount_xor_andnot(const u64* a, const u64* b, const u64* mask,
                          std::size_t n) {
    u64 c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount((a[i] ^ b[i]) & ~mask[i]);
    return c;
}
bool s_is_zero(const u64* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i]) return false;
    return true;
}
bool s_xor_andnot_is_zero(const u64* a, const u64* b, const u64* mask,
                          std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if ((a[i] ^ b[i]) & ~mask[i]) return false;
    return true;
}
bool s_andnot_is_zero(const u64* a, const u64* mask, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~mask[i]) return false;
    return true;
}

const Ops kScalar = {
    "scalar",
    s_xor_into,
    s_xor3,
    s_or_into,
    s_and_into,
    s_andnot_into,
    s_xor_shl_masked,
    s_tri_halves_sum,
    s_popcount,
    s_popcount_xor,
    s_popcount_xor_andnot,
    s_is_zero,
    s_xor_andnot_is_zero,
    s_andnot_is_zero,
};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

}  // namespace trm::kern
