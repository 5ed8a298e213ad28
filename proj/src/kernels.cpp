#include "y2p/kernels.hpp"

#include <cstdlib>

namespace y2p::kern {

namespace {

void add_scalar(uint32_t* dst, const uint32_t* src, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t t = dst[i] + src[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void sub_scalar(uint32_t* dst, const uint32_t* src, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t t = dst[i] + p - src[i];
        dst[i] = t >= p ? t - p : t;
    }
}

void axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * src[i] + dst[i]) % p);
    }
}

void scale_scalar(uint32_t* dst, uint32_t c, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * dst[i]) % p);
    }
}

const Ops g_scalar{add_scalar, sub_scalar, axpy_scalar, scale_scalar, "scalar"};

const Ops& select() {
    if (const char* env = std::getenv("Y2P_NO_SIMD"); env && env[0] == '1')
        return g_scalar;
    if (const Ops* a = avx2_ops())
        return *a;
    if (const Ops* n = neon_ops())
        return *n;
    return g_scalar;
}

} // namespace

const Ops& scalar_ops() { return g_scalar; }

const Ops& ops() {
    static const Ops& chosen = select();
    return chosen;
}

#if !defined(Y2P_HAVE_AVX2)
const Ops* avx2_ops() { return nullptr; }
#endif

#if !defined(Y2P_HAVE_NEON)
const Ops* neon_ops() { return nullptr; }
#endif

} // namespace y2p::kern
