#include "glab/simd/kernels.hpp"

#if GLAB_X86

#include <immintrin.h>

namespace glab::simd {

void xor_words_avx2(uint64_t* dst, const uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256((const __m256i*)(dst + i));
        __m256i s = _mm256_loadu_si256((const __m256i*)(src + i));
        _mm256_storeu_si256((__m256i*)(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

} // namespace glab::simd

#endif // GLAB_X86
