#include "glab/simd/kernels.hpp"

#include <cstdlib>

namespace glab::simd {

bool cpu_has_pclmul() {
#if GLAB_X86
    return __builtin_cpu_supports("pclmul");
#else
    return false;
#endif
}

bool cpu_has_avx2() {
#if GLAB_X86
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

bool scalar_only_flag = false;

Dispatch make_dispatch() {
    Dispatch d{clmul64_scalar, xor_words_scalar, gf2k64_axpy_scalar,
               "scalar", "scalar", "scalar"};
    if (scalar_only_flag) return d;
    const char* env = std::getenv("GLAB_NO_SIMD");
    if (env && env[0] == '1') return d;
#if GLAB_X86
    if (cpu_has_pclmul()) {
        d.clmul64 = clmul64_pclmul;
        d.gf2k64_axpy = gf2k64_axpy_pclmul;
        d.clmul_impl = "pclmul";
        d.axpy_impl = "pclmul";
    }
    if (cpu_has_avx2()) {
        d.xor_words = xor_words_avx2;
        d.xor_impl = "avx2";
    }
#endif
    return d;
}

Dispatch table = make_dispatch();
bool table_built = true;

} // namespace

const Dispatch& dispatch() {
    return table;
}

void select_scalar_only(bool on) {
    scalar_only_flag = on;
    table = make_dispatch();
    (void)table_built;
}

} // namespace glab::simd
