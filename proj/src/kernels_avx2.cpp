#include "y2p/kernels.hpp"

#if defined(Y2P_HAVE_AVX2)

#include <immintrin.h>

namespace y2p::kern {

namespace {

// Reduction of x in [0, p^2) by Barrett: q = floor(x * floor(2^32/p) / 2^32)
// leaves a remainder below 2p, fixed by one conditional subtract.

inline __m256i mulhi_epu32(__m256i a, __m256i b) {
    const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
    const __m256i odd =
        _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    const __m256i odd_hi =
        _mm256_and_si256(odd, _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ull)));
    return _mm256_blend_epi32(even, odd_hi, 0b10101010);
}

inline __m256i barrett(__m256i x, __m256i pvec, __m256i magic) {
    const __m256i q = mulhi_epu32(x, magic);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pvec));
    // r in [0, 2p): subtract p when possible (unsigned underflow makes the
    // wrong branch enormous, so min picks the reduced value)
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pvec));
}

inline uint32_t barrett_magic(uint32_t p) {
    return static_cast<uint32_t>((uint64_t(1) << 32) / p);
}

void add_avx2(uint32_t* dst, const uint32_t* src, size_t n, uint32_t p) {
    const __m256i pvec = _mm256_set1_epi32(static_cast<int>(p));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i t = _mm256_add_epi32(a, b);
        t = _mm256_min_epu32(t, _mm256_sub_epi32(t, pvec));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i) {
        uint32_t t = dst[i] + src[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void sub_avx2(uint32_t* dst, const uint32_t* src, size_t n, uint32_t p) {
    const __m256i pvec = _mm256_set1_epi32(static_cast<int>(p));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i t = _mm256_sub_epi32(_mm256_add_epi32(a, pvec), b);
        t = _mm256_min_epu32(t, _mm256_sub_epi32(t, pvec));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i) {
        uint32_t t = dst[i] + p - src[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
    const __m256i pvec = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i cvec = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i magic = _mm256_set1_epi32(static_cast<int>(barrett_magic(p)));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // c*src + dst < p^2 + p <= 2^32 - 1 for p < 2^16
        __m256i x = _mm256_add_epi32(_mm256_mullo_epi32(cvec, b), a);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(x, pvec, magic));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * src[i] + dst[i]) % p);
}

void scale_avx2(uint32_t* dst, uint32_t c, size_t n, uint32_t p) {
    const __m256i pvec = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i cvec = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i magic = _mm256_set1_epi32(static_cast<int>(barrett_magic(p)));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i x = _mm256_mullo_epi32(cvec, a);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(x, pvec, magic));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * dst[i]) % p);
}

const Ops g_avx2{add_avx2, sub_avx2, axpy_avx2, scale_avx2, "avx2"};

} // namespace

const Ops* avx2_ops() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") ? &g_avx2 : nullptr;
#else
    return nullptr;
#endif
}

} // namespace y2p::kern

#endif // Y2P_HAVE_AVX2
