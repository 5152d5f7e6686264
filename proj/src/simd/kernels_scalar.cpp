#include "glab/simd/kernels.hpp"

namespace glab::simd {

void clmul64_scalar(uint64_t a, uint64_t b, uint64_t* hi, uint64_t* lo) {
    uint64_t h = 0, l = 0;
    while (b) {
        int i = __builtin_ctzll(b);
        b &= b - 1;
        l ^= a << i;
        if (i) h ^= a >> (64 - i);
    }
    *hi = h;
    *lo = l;
}

void xor_words_scalar(uint64_t* dst, const uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

namespace {

// reduce hi*x^64 + lo mod x^64 + mod_low, deg(mod_low) <= 32
inline uint64_t fold64(uint64_t hi, uint64_t lo, uint64_t mod_low) {
    uint64_t h2, l2;
    clmul64_scalar(hi, mod_low, &h2, &l2);
    lo ^= l2;
    if (h2) {
        uint64_t h3, l3;
        clmul64_scalar(h2, mod_low, &h3, &l3);
        lo ^= l3;
    }
    return lo;
}

} // namespace

void gf2k64_axpy_scalar(uint64_t* dst, const uint64_t* src, std::size_t n,
                        uint64_t c, uint64_t mod_low) {
    for (std::size_t i = 0; i < n; ++i) {
        uint64_t hi, lo;
        clmul64_scalar(src[i], c, &hi, &lo);
        dst[i] ^= fold64(hi, lo, mod_low);
    }
}

} // namespace glab::simd
