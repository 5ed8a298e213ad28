#pragma once

#include <cstddef>
#include <cstdint>

// Mod-p vector kernels used by the dense linear algebra inner loops
// (row reduction, matrix products, spinning closures).
//
// All arrays hold residues already reduced into [0, p).  The scalar c must
// satisfy c < p, and p must be below 2^16 so that c*x + y fits in 32 bits.
// A scalar reference implementation always exists; on x86-64 an AVX2 variant
// is selected at runtime.  Set Y2P_NO_SIMD=1 in the environment to force the
// scalar path.

namespace y2p::kern {

struct Ops {
    // dst[i] = (dst[i] + src[i]) mod p
    void (*add)(uint32_t* dst, const uint32_t* src, size_t n, uint32_t p);
    // dst[i] = (dst[i] - src[i]) mod p
    void (*sub)(uint32_t* dst, const uint32_t* src, size_t n, uint32_t p);
    // dst[i] = (dst[i] + c*src[i]) mod p
    void (*axpy)(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p);
    // dst[i] = (c*dst[i]) mod p
    void (*scale)(uint32_t* dst, uint32_t c, size_t n, uint32_t p);
    const char* name;
};

// Reference implementation (portable scalar code).
const Ops& scalar_ops();

// AVX2 / NEON implementations, or nullptr when not compiled in or not
// supported by the machine.
const Ops* avx2_ops();
const Ops* neon_ops();

// The implementation selected at startup for this machine.
const Ops& ops();

// Largest prime modulus the kernels accept.
constexpr uint32_t max_modulus = 65521;

} // namespace y2p::kern
