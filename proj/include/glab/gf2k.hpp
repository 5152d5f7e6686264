#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "glab/errors.hpp"
#include "glab/rng.hpp"
#include "glab/simd/kernels.hpp"

namespace glab {

namespace detail {

// reduce hi*x^64 + lo modulo x^K + mod_low for K <= 64, deg(mod_low) <= 32
inline uint64_t gf2x_mod(uint64_t hi, uint64_t lo, int K, uint64_t mod_low) {
    const uint64_t mask = (K == 64) ? ~0ULL : ((1ULL << K) - 1);
    while (hi != 0 || (lo & ~mask) != 0) {
        uint64_t top = (K == 64) ? hi : ((lo >> K) | (hi << (64 - K)));
        lo &= mask;
        hi = 0;
        uint64_t ph, pl;
        simd::clmul64(top, mod_low, &ph, &pl);
        lo ^= pl;
        hi ^= ph;
    }
    return lo;
}

constexpr uint64_t default_modulus_low(int K) {
    // low-weight irreducible x^K + low(x), one published choice per supported K
    switch (K) {
        case 2: return 0x3;    // x^2 + x + 1
        case 8: return 0x1B;   // x^8 + x^4 + x^3 + x + 1
        case 16: return 0x2B;  // x^16 + x^5 + x^3 + x + 1
        case 32: return 0x8D;  // x^32 + x^7 + x^3 + x^2 + 1
        case 64: return 0x1B;  // x^64 + x^4 + x^3 + x + 1
        case 128: return 0x87; // x^128 + x^7 + x^2 + x + 1
        default: return 0;
    }
}

} // namespace detail

// GF(2^K) for K <= 64, elements as K-bit words in canonical reduced form.
template <int K>
class Gf2k {
    static_assert(K >= 2 && K <= 64, "word-sized instantiations only");

public:
    // overridable before any arithmetic (config key: modulus hex override)
    static inline uint64_t modulus_low = detail::default_modulus_low(K);
    static constexpr int bits = K;

    constexpr Gf2k() : v_(0) {}
    constexpr explicit Gf2k(uint64_t v) : v_(v & mask()) {}

    static constexpr Gf2k zero() { return Gf2k(); }
    static constexpr Gf2k one() { return Gf2k(1); }
    static Gf2k random(Rng& rng) { return Gf2k(rng.next_u64() & mask()); }

    bool is_zero() const { return v_ == 0; }
    bool is_invertible() const { return v_ != 0; }
    uint64_t word() const { return v_; }

    Gf2k& operator+=(Gf2k o) {
        v_ ^= o.v_;
        return *this;
    }
    Gf2k operator+(Gf2k o) const { return Gf2k(v_ ^ o.v_); }
    // characteristic 2: subtraction is addition
    Gf2k operator-(Gf2k o) const { return *this + o; }
    Gf2k& operator-=(Gf2k o) { return *this += o; }

    Gf2k operator*(Gf2k o) const {
        uint64_t hi, lo;
        simd::clmul64(v_, o.v_, &hi, &lo);
        return Gf2k(detail::gf2x_mod(hi, lo, K, modulus_low));
    }
    Gf2k& operator*=(Gf2k o) { return *this = *this * o; }

    Gf2k squared() const { return *this * *this; }

    // a^(2^K - 2); zero has no inverse
    Gf2k inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero in GF(2^" + std::to_string(K) + ")");
        Gf2k acc = one();
        Gf2k p = *this;
        for (int i = 1; i < K; ++i) {
            p = p.squared();
            acc *= p;
        }
        return acc;
    }

    bool operator==(const Gf2k&) const = default;

    std::string to_hex() const {
        char buf[19];
        std::snprintf(buf, sizeof buf, "0x%llx", (unsigned long long)v_);
        return buf;
    }

private:
    static constexpr uint64_t mask() { return (K == 64) ? ~0ULL : ((1ULL << K) - 1); }
    uint64_t v_;
};

// GF(2^128) with two-word storage.
template <>
class Gf2k<128> {
public:
    static inline uint64_t modulus_low = detail::default_modulus_low(128);
    static constexpr int bits = 128;

    constexpr Gf2k() : lo_(0), hi_(0) {}
    constexpr explicit Gf2k(uint64_t lo, uint64_t hi = 0) : lo_(lo), hi_(hi) {}

    static constexpr Gf2k zero() { return Gf2k(); }
    static constexpr Gf2k one() { return Gf2k(1); }
    static Gf2k random(Rng& rng) {
        uint64_t a = rng.next_u64(), b = rng.next_u64();
        return Gf2k(a, b);
    }

    bool is_zero() const { return lo_ == 0 && hi_ == 0; }
    bool is_invertible() const { return !is_zero(); }
    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }

    Gf2k& operator+=(const Gf2k& o) {
        lo_ ^= o.lo_;
        hi_ ^= o.hi_;
        return *this;
    }
    Gf2k operator+(const Gf2k& o) const {
        Gf2k r = *this;
        return r += o;
    }
    Gf2k operator-(const Gf2k& o) const { return *this + o; }
    Gf2k& operator-=(const Gf2k& o) { return *this += o; }

    Gf2k operator*(const Gf2k& o) const {
        // schoolbook: 4 carryless products, then fold x^128 = mod_low
        uint64_t p0h, p0l, p1h, p1l, p2h, p2l, p3h, p3l;
        simd::clmul64(lo_, o.lo_, &p0h, &p0l);
        simd::clmul64(lo_, o.hi_, &p1h, &p1l);
        simd::clmul64(hi_, o.lo_, &p2h, &p2l);
        simd::clmul64(hi_, o.hi_, &p3h, &p3l);
        uint64_t w0 = p0l;
        uint64_t w1 = p0h ^ p1l ^ p2l;
        uint64_t w2 = p1h ^ p2h ^ p3l;
        uint64_t w3 = p3h;
        // w3*x^192 + w2*x^128 ≡ (w3*mod_low)*x^64 + w2*mod_low
        uint64_t dh, dl, eh, el, fh, fl;
        simd::clmul64(w3, modulus_low, &dh, &dl);
        simd::clmul64(w2, modulus_low, &eh, &el);
        simd::clmul64(dh, modulus_low, &fh, &fl);
        return Gf2k(w0 ^ el ^ fl, w1 ^ dl ^ eh);
    }
    Gf2k& operator*=(const Gf2k& o) { return *this = *this * o; }

    Gf2k squared() const { return *this * *this; }

    Gf2k inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero in GF(2^128)");
        Gf2k acc = one();
        Gf2k p = *this;
        for (int i = 1; i < 128; ++i) {
            p = p.squared();
            acc *= p;
        }
        return acc;
    }

    bool operator==(const Gf2k&) const = default;

    std::string to_hex() const {
        char buf[36];
        std::snprintf(buf, sizeof buf, "0x%llx:%llx", (unsigned long long)hi_,
                      (unsigned long long)lo_);
        return buf;
    }

private:
    uint64_t lo_, hi_;
};

template <class F>
F inv(const F& x) {
    return x.inverse();
}

template <class F>
bool is_zero(const F& x) {
    return x.is_zero();
}

// integer power with field inverse for negative exponents
template <class F>
F field_pow(const F& x, long e) {
    if (e < 0) return field_pow(x.inverse(), -e);
    F acc = F::one();
    F p = x;
    while (e) {
        if (e & 1) acc *= p;
        p = p.squared();
        e >>= 1;
    }
    return acc;
}

} // namespace glab
