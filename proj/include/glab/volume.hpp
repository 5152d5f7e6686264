#pragma once

#include <span>
#include <vector>

#include "glab/artinian.hpp"
#include "glab/complex.hpp"
#include "glab/frame.hpp"
#include "glab/monomial.hpp"

namespace glab {

// Brion-style facet sum for the degree functional: a monomial z of degree m
// contributes, for every facet sigma containing supp(z),
//   [sigma]^(d-1-m) * prod_{v in sigma} [sigma_v](y)^(exp_v - 1).
// For m = d the sum is independent of the point y; for m < d it vanishes.
template <class F>
struct VolumeEvaluator {
    const SimplicialComplex* cx;
    const Frame<F>* frame;
    std::vector<F> y;

    F monomial(const Monomial& z) const {
        const int d = frame->d;
        const int m = z.degree();
        const Face supp = z.support();
        F acc = F::zero();
        for (auto& sigma : cx->facets()) {
            if (!supp.subset_of(sigma)) continue;
            F br = bracket(*frame, sigma);
            if (!br.is_invertible())
                throw zero_bracket_collision("vanishing facet bracket " + sigma.to_string());
            F term = field_pow(br, (long)(d - 1 - m));
            const auto& vs = sigma.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i) {
                long e = z.exp(vs[i]) - 1;
                if (e == 0) continue;
                F bv = bracket_point(*frame, std::span<const VertexId>(vs), i,
                                     std::span<const F>(y));
                if (e < 0 && !bv.is_invertible())
                    throw pole_hit("auxiliary point on a bracket hyperplane");
                term *= field_pow(bv, e);
            }
            acc += term;
        }
        return acc;
    }

    F cls(const ChowClass<F>& a) const {
        F acc = F::zero();
        for (auto& [z, c] : a.coords) acc += c * monomial(z);
        return acc;
    }
};

// Courant function of v on the facet sigma, evaluated at the point y:
// [sigma_v](y)/[sigma] when v lies in sigma, 0 otherwise. Equals 1 at v
// itself and 0 at the other vertices of sigma.
template <class F>
F courant_value(const Frame<F>& frame, const Face& sigma, VertexId v,
                std::span<const F> y) {
    if (!sigma.contains(v)) return F::zero();
    const auto& vs = sigma.vertices();
    std::size_t pos = 0;
    while (vs[pos] != v) ++pos;
    F br = bracket(frame, sigma);
    if (!br.is_invertible())
        throw zero_bracket_collision("vanishing facet bracket " + sigma.to_string());
    return bracket_point(frame, std::span<const VertexId>(vs), pos, y) * br.inverse();
}

template <class K>
std::vector<K> random_point(int d, Rng& rng) {
    std::vector<K> y;
    y.reserve((std::size_t)d);
    for (int j = 0; j < d; ++j) y.push_back(K::random(rng));
    return y;
}

inline std::vector<RatFn> exact_point(int d) {
    std::vector<RatFn> y;
    for (int j = 1; j <= d; ++j) y.push_back(RatFn::var("y_" + std::to_string(j)));
    return y;
}

// retry with fresh auxiliary points until no pole is hit
template <class K, class Fn>
auto with_fresh_points(const Frame<K>& frame, Rng& rng, int max_resamples, Fn&& fn) {
    for (int attempt = 0;; ++attempt) {
        std::vector<K> y = random_point<K>(frame.d, rng);
        try {
            return fn(y);
        } catch (const pole_hit&) {
            if (attempt + 1 >= max_resamples) throw;
        } catch (const derivative_at_pole&) {
            if (attempt + 1 >= max_resamples) throw;
        }
    }
}

template <class K>
K vol_monomial(const SimplicialComplex& cx, const Frame<K>& frame, const Monomial& z,
               Rng& rng, int max_resamples = 8) {
    return with_fresh_points(frame, rng, max_resamples, [&](const std::vector<K>& y) {
        VolumeEvaluator<K> vol{&cx, &frame, y};
        return vol.monomial(z);
    });
}

template <class K>
K vol_class(const SimplicialComplex& cx, const Frame<K>& frame, const ChowClass<K>& a,
            Rng& rng, int max_resamples = 8) {
    return with_fresh_points(frame, rng, max_resamples, [&](const std::vector<K>& y) {
        VolumeEvaluator<K> vol{&cx, &frame, y};
        return vol.cls(a);
    });
}

// Vol(ell_j * z) over random degree-(d-1) monomials; true iff every trial is 0
template <class K>
bool vol_ideal_vanishing(const SimplicialComplex& cx, const Frame<K>& frame, int trials,
                         Rng& rng) {
    auto monos = monomials_of_degree(cx, frame.d - 1);
    if (monos.empty()) return true;
    for (int t = 0; t < trials; ++t) {
        const Monomial& z = monos[rng.below(monos.size())];
        int j = (int)rng.below((uint64_t)frame.d);
        ChowClass<K> zc = ChowClass<K>::of_monomial(z);
        std::map<VertexId, K> ell;
        for (VertexId v : cx.vertices()) ell[v] = frame.coeff(v, j);
        ChowClass<K> prod = multiply_by_form(cx, zc, ell);
        if (!vol_class(cx, frame, prod, rng).is_zero()) return false;
    }
    return true;
}

// coarse numerator/denominator degree bound of a Brion evaluation, used for
// the Schwartz-Zippel failure estimate that certificates log
inline long vol_degree_bound(const SimplicialComplex& cx, int d, int max_exp) {
    return 2L * d * (long)cx.facets().size() * (long)std::max(1, max_exp);
}

} // namespace glab
