#include "y2p/kernels.hpp"

#if defined(Y2P_HAVE_NEON)

#include <arm_neon.h>

namespace y2p::kern {

namespace {

// Same reduction scheme as the AVX2 variant: for x in [0, p^2) and
// magic = floor(2^32/p), q = mulhi(x, magic) leaves x - q*p below 2p.

inline uint32x4_t mulhi_u32(uint32x4_t a, uint32x4_t b) {
    const uint64x2_t lo = vmull_u32(vget_low_u32(a), vget_low_u32(b));
    const uint64x2_t hi = vmull_high_u32(a, b);
    return vuzp2q_u32(vreinterpretq_u32_u64(lo), vreinterpretq_u32_u64(hi));
}

inline uint32x4_t barrett(uint32x4_t x, uint32x4_t pvec, uint32x4_t magic) {
    const uint32x4_t q = mulhi_u32(x, magic);
    const uint32x4_t r = vsubq_u32(x, vmulq_u32(q, pvec));
    return vminq_u32(r, vsubq_u32(r, pvec));
}

inline uint32_t barrett_magic(uint32_t p) {
    return static_cast<uint32_t>((uint64_t(1) << 32) / p);
}

void add_neon(uint32_t* dst, const uint32_t* src, size_t n, uint32_t p) {
    const uint32x4_t pvec = vdupq_n_u32(p);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t t = vaddq_u32(vld1q_u32(dst + i), vld1q_u32(src + i));
        vst1q_u32(dst + i, vminq_u32(t, vsubq_u32(t, pvec)));
    }
    for (; i < n; ++i) {
        uint32_t t = dst[i] + src[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void sub_neon(uint32_t* dst, const uint32_t* src, size_t n, uint32_t p) {
    const uint32x4_t pvec = vdupq_n_u32(p);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t t =
            vsubq_u32(vaddq_u32(vld1q_u32(dst + i), pvec), vld1q_u32(src + i));
        vst1q_u32(dst + i, vminq_u32(t, vsubq_u32(t, pvec)));
    }
    for (; i < n; ++i) {
        uint32_t t = dst[i] + p - src[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void axpy_neon(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
    const uint32x4_t pvec = vdupq_n_u32(p);
    const uint32x4_t cvec = vdupq_n_u32(c);
    const uint32x4_t magic = vdupq_n_u32(barrett_magic(p));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t x =
            vaddq_u32(vmulq_u32(cvec, vld1q_u32(src + i)), vld1q_u32(dst + i));
        vst1q_u32(dst + i, barrett(x, pvec, magic));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * src[i] + dst[i]) % p);
}

void scale_neon(uint32_t* dst, uint32_t c, size_t n, uint32_t p) {
    const uint32x4_t pvec = vdupq_n_u32(p);
    const uint32x4_t cvec = vdupq_n_u32(c);
    const uint32x4_t magic = vdupq_n_u32(barrett_magic(p));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t x = vmulq_u32(cvec, vld1q_u32(dst + i));
        vst1q_u32(dst + i, barrett(x, pvec, magic));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * dst[i]) % p);
}

const Ops g_neon{add_neon, sub_neon, axpy_neon, scale_neon, "neon"};

} // namespace

// NEON is baseline on aarch64
const Ops* neon_ops() { return &g_neon; }

} // namespace y2p::kern

#endif // Y2P_HAVE_NEON
