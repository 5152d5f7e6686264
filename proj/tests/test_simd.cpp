#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "glab/bitmatrix.hpp"
#include "glab/rng.hpp"
#include "glab/simd/kernels.hpp"

using namespace glab;

namespace {

// naive GF(2) elimination on a bool matrix, the packed rank's oracle
std::size_t rank_naive(std::vector<std::vector<bool>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] ^ m[r][j];
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("clmul64 variants agree") {
    Rng rng(1234);
    for (int i = 0; i < 20000; ++i) {
        uint64_t a = rng.next_u64();
        uint64_t b = rng.next_u64();
        uint64_t h0, l0;
        simd::clmul64_scalar(a, b, &h0, &l0);
#if GLAB_X86
        if (simd::cpu_has_pclmul()) {
            uint64_t h1, l1;
            simd::clmul64_pclmul(a, b, &h1, &l1);
            CHECK(h0 == h1);
            CHECK(l0 == l1);
        }
#endif
        uint64_t h2, l2;
        simd::clmul64(a, b, &h2, &l2);
        CHECK(h0 == h2);
        CHECK(l0 == l2);
    }
}

TEST_CASE("clmul64 basic identities") {
    uint64_t h, l;
    simd::clmul64_scalar(0, 0xdeadbeef, &h, &l);
    CHECK(h == 0);
    CHECK(l == 0);
    simd::clmul64_scalar(1, 0xdeadbeef, &h, &l);
    CHECK(h == 0);
    CHECK(l == 0xdeadbeef);
    // (x^63)*(x) = x^64
    simd::clmul64_scalar(1ULL << 63, 2, &h, &l);
    CHECK(h == 1);
    CHECK(l == 0);
}

TEST_CASE("xor_words variants agree") {
    Rng rng(99);
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(3), std::size_t(8),
                          std::size_t(17), std::size_t(100)}) {
        std::vector<uint64_t> dst(n), src(n);
        for (auto& w : dst) w = rng.next_u64();
        for (auto& w : src) w = rng.next_u64();
        auto d0 = dst;
        simd::xor_words_scalar(d0.data(), src.data(), n);
#if GLAB_X86
        if (simd::cpu_has_avx2()) {
            auto d1 = dst;
            simd::xor_words_avx2(d1.data(), src.data(), n);
            CHECK(d0 == d1);
        }
#endif
        auto d2 = dst;
        simd::xor_words(d2.data(), src.data(), n);
        CHECK(d0 == d2);
    }
}

TEST_CASE("gf2k64 axpy variants agree") {
    Rng rng(7);
    const uint64_t mod_low = 0x1B;
    for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(5), std::size_t(64),
                          std::size_t(129)}) {
        std::vector<uint64_t> dst(n), src(n);
        for (auto& w : dst) w = rng.next_u64();
        for (auto& w : src) w = rng.next_u64();
        uint64_t c = rng.next_u64();
        auto d0 = dst;
        simd::gf2k64_axpy_scalar(d0.data(), src.data(), n, c, mod_low);
#if GLAB_X86
        if (simd::cpu_has_pclmul()) {
            auto d1 = dst;
            simd::gf2k64_axpy_pclmul(d1.data(), src.data(), n, c, mod_low);
            CHECK(d0 == d1);
        }
#endif
        auto d2 = dst;
        simd::gf2k64_axpy(d2.data(), src.data(), n, c, mod_low);
        CHECK(d0 == d2);
    }
}

TEST_CASE("packed GF(2) rank matches the naive oracle") {
    Rng rng(2024);
    for (std::size_t cols : {std::size_t(1), std::size_t(7), std::size_t(63),
                             std::size_t(64), std::size_t(65), std::size_t(130)}) {
        for (int rep = 0; rep < 8; ++rep) {
            std::size_t rows = 1 + rng.below(40);
            BitMatrix bm(rows, cols);
            std::vector<std::vector<bool>> nv(rows, std::vector<bool>(cols, false));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    if (rng.next_u64() & 1) {
                        bm.set(i, j);
                        nv[i][j] = true;
                    }
            CHECK(bm.rank() == rank_naive(nv));
        }
    }
}

TEST_CASE("scalar-only switch") {
    simd::select_scalar_only(true);
    CHECK(std::string(simd::dispatch().clmul_impl) == "scalar");
    simd::select_scalar_only(false);
#if GLAB_X86
    if (simd::cpu_has_pclmul())
        CHECK(std::string(simd::dispatch().clmul_impl) == "pclmul");
#endif
}
