// AVX2 variants of the packed GF(2) kernels. Compiled with -mavx2 in its own
// TU; only reached through the dispatch table when the CPU reports AVX2.
#include "trm/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <bit>

namespace trm::kern {
namespace {

inline __m256i load(const u64* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(u64* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void a_xor_into(u64* dst, const u64* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] ^= src[i];
}
void a_xor3(u64* dst, const u64* a, const u64* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}
void a_or_into(u64* dst, const u64* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] |= src[i];
}
void a_and_into(u64* dst, const u64* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}
void a_andnot_into(u64* dst, const u64* src, std::size_t n) {
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) = ~a & b
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
    for (; i < n; ++i) dst[i] &= ~src[i];
}
void a_xor_shl_masked(u64* a, std::size_t n, u64 mask, unsigned shift) {
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = load(a + i);
        store(a + i, _mm256_xor_si256(v, _mm256_slli_epi64(_mm256_and_si256(v, m),
                                                           static_cast<int>(shift))));
    }
    for (; i < n; ++i) a[i] ^= (a[i] & mask) << shift;
}
void a_tri_halves_sum(const u64* vlo, const u64* vhi, const u64* elo,
                      const u64* ehi, u64* vsum, u64* esum, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i e = _mm256_or_si256(load(elo + i), load(ehi + i));
        const __m256i v = _mm256_xor_si256(load(vlo + i), load(vhi + i));
        store(esum + i, e);
        store(vsum + i, _mm256_andnot_si256(e, v));
    }
    for (; i < n; ++i) {
        const u64 e = elo[i] | ehi[i];
        esum[i] = e;
        vsum[i] = (vlo[i] ^ vhi[i]) & ~e;
    }
}

// Nibble-LUT popcount accumulated with psadbw.
inline __m256i pc_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}
inline u64 hsum_sad(__m256i acc) {
    __m128i lo = _mm256_castsi256_si128(acc);
    __m128i hi = _mm256_extracti128_si256(acc, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<u64>(_mm_cvtsi128_si64(s)) +
           static_cast<u64>(_mm_extract_epi64(s, 1));
}

u64 a_popcount(const u64* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(pc_bytes(load(a + i)),
                                                    _mm256_setzero_si256()));
    u64 c = hsum_sad(acc);
    for (; i < n; ++i) c += std::popcount(a[i]);
    return c;
}
u64 a_popcount_xor(const u64* a, const u64* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_xor_si256(load(a + i), load(b + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(pc_bytes(v), _mm256_setzero_si256()));
    }
    u64 c = hsum_sad(acc);
    for (; i < n; ++i) c += std::popcount(a[i] ^ b[i]);
    return c;
}
u64 a_popcount_xor_andnot(const u64* a, const u64* b, const u64* mask, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_andnot_si256(
            load(mask + i), _mm256_xor_si256(load(a + i), load(b + i)));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(pc_bytes(v), _mm256_setzero_si256()));
    }
    u64 c = hsum_sad(acc);
    for (; i < n; ++i) c += std::popcount((a[i] ^ b[i]) & ~mask[i]);
    return c;
}
bool a_is_zero(const u64* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testz_si256(load(a + i), load(a + i))) return false;
    for (; i < n; ++i)
        if (a[i]) return false;
    return true;
}
bool a_xor_andnot_is_zero(const u64* a, const u64* b, const u64* mask, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_andnot_si256(
            load(mask + i), _mm256_xor_si256(load(a + i), load(b + i)));
        if (!_mm256_testz_si256(v, v)) return false;
    }
    for (; i < n; ++i)
        if ((a[i] ^ b[i]) & ~mask[i]) return false;
    return true;
}
bool a_andnot_is_zero(const u64* a, const u64* mask, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_andnot_si256(load(mask + i), load(a + i));
        if (!_mm256_testz_si256(v, v)) return false;
    }
    for (; i < n; ++i)
        if (a[i] & ~mask[i]) return false;
    return true;
}

}  // namespace

const Ops* avx2_ops_table() {
    static const Ops kAvx2 = {
        "avx2",
        a_xor_into,
        a_xor3,
        a_or_into,
        a_and_into,
        a_andnot_into,
        a_xor_shl_masked,
        a_tri_halves_sum,
        a_popcount,
        a_popcount_xor,
        a_popcount_xor_andnot,
        a_is_zero,
        a_xor_andnot_is_zero,
        a_andnot_is_zero,
    };
    return &kAvx2;
}

}  // namespace trm::kern
#endif
