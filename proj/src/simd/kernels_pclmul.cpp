#include "glab/simd/kernels.hpp"

#if GLAB_X86

#include <immintrin.h>
#include <wmmintrin.h>

namespace glab::simd {

void clmul64_pclmul(uint64_t a, uint64_t b, uint64_t* hi, uint64_t* lo) {
    __m128i va = _mm_set_epi64x(0, (long long)a);
    __m128i vb = _mm_set_epi64x(0, (long long)b);
    __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
    *lo = (uint64_t)_mm_cvtsi128_si64(p);
    *hi = (uint64_t)_mm_extract_epi64(p, 1);
}

namespace {

// one GF(2^64) product c*x reduced mod x^64 + mod_low, all in xmm registers
inline uint64_t mul_fold(__m128i vc, __m128i vm, uint64_t x) {
    __m128i vx = _mm_set_epi64x(0, (long long)x);
    __m128i p = _mm_clmulepi64_si128(vx, vc, 0x00);
    // fold bits 64..127
    __m128i t = _mm_clmulepi64_si128(p, vm, 0x01);
    p = _mm_xor_si128(p, t);
    // fold the short second carry (deg(mod_low) <= 32 keeps it in one step)
    t = _mm_clmulepi64_si128(t, vm, 0x01);
    p = _mm_xor_si128(p, t);
    return (uint64_t)_mm_cvtsi128_si64(p);
}

} // namespace

void gf2k64_axpy_pclmul(uint64_t* dst, const uint64_t* src, std::size_t n,
                        uint64_t c, uint64_t mod_low) {
    __m128i vc = _mm_set_epi64x(0, (long long)c);
    __m128i vm = _mm_set_epi64x(0, (long long)mod_low);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64_t r0 = mul_fold(vc, vm, src[i]);
        uint64_t r1 = mul_fold(vc, vm, src[i + 1]);
        dst[i] ^= r0;
        dst[i + 1] ^= r1;
    }
    if (i < n) dst[i] ^= mul_fold(vc, vm, src[i]);
}

} // namespace glab::simd

#endif // GLAB_X86
