#pragma once

#include <vector>

#include "glab/errors.hpp"

namespace glab {

// Truncated multi-dual numbers F[e_0,...,e_{m-1}] / (e_i^2): coefficient
// vector indexed by subsets of layers. Layer count is a runtime value; mixed
// arities broadcast by treating missing high layers as zero slopes. Squaring
// any element kills every slope (characteristic 2), which is exactly the
// "derivative of a square vanishes" rule the derivation checks lean on.
template <class F>
class MultiDual {
public:
    MultiDual() : c_(1, F::zero()) {}
    explicit MultiDual(int layers) : c_(std::size_t(1) << layers, F::zero()) {}

    static MultiDual zero() { return MultiDual(); }
    static MultiDual one() {
        MultiDual d;
        d.c_[0] = F::one();
        return d;
    }
    static MultiDual constant(F v) {
        MultiDual d;
        d.c_[0] = std::move(v);
        return d;
    }
    // value + slope * e_layer
    static MultiDual seeded(F value, F slope, int layer) {
        MultiDual d(layer + 1);
        d.c_[0] = std::move(value);
        d.c_[std::size_t(1) << layer] = std::move(slope);
        return d;
    }

    int layers() const {
        int m = 0;
        while ((std::size_t(1) << m) < c_.size()) ++m;
        return m;
    }
    const F& value() const { return c_[0]; }
    const F& coeff(std::size_t mask) const {
        static const F fzero = F::zero();
        return mask < c_.size() ? c_[mask] : fzero;
    }

    bool is_zero() const {
        for (auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_invertible() const { return !c_[0].is_zero(); }

    MultiDual operator+(const MultiDual& o) const {
        MultiDual r = c_.size() >= o.c_.size() ? *this : o;
        const MultiDual& small = c_.size() >= o.c_.size() ? o : *this;
        for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
        return r;
    }
    MultiDual& operator+=(const MultiDual& o) { return *this = *this + o; }
    MultiDual operator-(const MultiDual& o) const { return *this + o; }
    MultiDual& operator-=(const MultiDual& o) { return *this = *this + o; }

    MultiDual operator*(const MultiDual& o) const {
        MultiDual r;
        r.c_.assign(std::max(c_.size(), o.c_.size()), F::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (i & j) continue; // e_i^2 = 0
                if (o.c_[j].is_zero()) continue;
                r.c_[i | j] += c_[i] * o.c_[j];
            }
        }
        return r;
    }
    MultiDual& operator*=(const MultiDual& o) { return *this = *this * o; }

    MultiDual squared() const { return *this * *this; }

    // (u + v e)^-1 = u^-1 + u^-2 v e, recursively over the top layer
    MultiDual inverse() const {
        if (c_[0].is_zero())
            throw derivative_at_pole("dual inverse with vanishing value part");
        if (c_.size() == 1) return constant(c_[0].inverse());
        std::size_t half = c_.size() / 2;
        MultiDual u, v;
        u.c_.assign(c_.begin(), c_.begin() + half);
        v.c_.assign(c_.begin() + half, c_.end());
        MultiDual ui = u.inverse();
        MultiDual w = ui * ui * v;
        MultiDual r;
        r.c_ = ui.c_;
        r.c_.resize(c_.size(), F::zero());
        for (std::size_t i = 0; i < w.c_.size() && i < half; ++i) r.c_[half + i] = w.c_[i];
        return r;
    }

    bool operator==(const MultiDual& o) const {
        std::size_t n = std::max(c_.size(), o.c_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (!(coeff(i) == o.coeff(i))) return false;
        return true;
    }

private:
    std::vector<F> c_;
};

} // namespace glab
