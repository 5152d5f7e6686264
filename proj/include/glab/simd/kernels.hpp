#pragma once

#include <cstddef>
#include <cstdint>

#if defined(__x86_64__) || defined(_M_X64)
#define GLAB_X86 1
#else
#define GLAB_X86 0
#endif

namespace glab::simd {

// Scalar reference kernels. These define the semantics; the vector variants
// below must agree with them bit for bit (see tests/test_simd.cpp).

// carryless 64x64 -> 128 multiply
void clmul64_scalar(uint64_t a, uint64_t b, uint64_t* hi, uint64_t* lo);

// dst[i] ^= src[i]
void xor_words_scalar(uint64_t* dst, const uint64_t* src, std::size_t n);

// dst[i] += c * src[i] in GF(2^64) with modulus x^64 + mod_low
void gf2k64_axpy_scalar(uint64_t* dst, const uint64_t* src, std::size_t n,
                        uint64_t c, uint64_t mod_low);

bool cpu_has_pclmul();
bool cpu_has_avx2();

#if GLAB_X86
// Compiled with the matching -m flags; call only after the cpu probe passes.
void clmul64_pclmul(uint64_t a, uint64_t b, uint64_t* hi, uint64_t* lo);
void gf2k64_axpy_pclmul(uint64_t* dst, const uint64_t* src, std::size_t n,
                        uint64_t c, uint64_t mod_low);
void xor_words_avx2(uint64_t* dst, const uint64_t* src, std::size_t n);
#endif

struct Dispatch {
    void (*clmul64)(uint64_t, uint64_t, uint64_t*, uint64_t*);
    void (*xor_words)(uint64_t*, const uint64_t*, std::size_t);
    void (*gf2k64_axpy)(uint64_t*, const uint64_t*, std::size_t, uint64_t, uint64_t);
    const char* clmul_impl;
    const char* xor_impl;
    const char* axpy_impl;
};

// Best available implementation per slot, chosen once per process.
const Dispatch& dispatch();

// Force the scalar table (GLAB_NO_SIMD=1 in the environment does the same).
void select_scalar_only(bool on);

inline void clmul64(uint64_t a, uint64_t b, uint64_t* hi, uint64_t* lo) {
    dispatch().clmul64(a, b, hi, lo);
}
inline void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) {
    dispatch().xor_words(dst, src, n);
}
inline void gf2k64_axpy(uint64_t* dst, const uint64_t* src, std::size_t n,
                        uint64_t c, uint64_t mod_low) {
    dispatch().gf2k64_axpy(dst, src, n, c, mod_low);
}

} // namespace glab::simd
