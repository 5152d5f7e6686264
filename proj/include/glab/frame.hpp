#pragma once

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "glab/complex.hpp"
#include "glab/dual.hpp"
#include "glab/errors.hpp"
#include "glab/f2poly.hpp"
#include "glab/gf2k.hpp"
#include "glab/linalg.hpp"
#include "glab/rng.hpp"

namespace glab {

// Vertex coordinates a_{v,j}: column j of the coordinate matrix doubles as
// the linear form ell_j = sum_v a_{vj} x_v, so this one structure is both the
// embedding h and the parameter space it spans.
template <class F>
struct Frame {
    int d = 0;
    std::map<VertexId, std::vector<F>> coords;

    const std::vector<F>& at(VertexId v) const {
        auto it = coords.find(v);
        if (it == coords.end())
            throw std::out_of_range("no coordinates for vertex " + std::to_string(v));
        return it->second;
    }
    // e_v(ell_j)
    const F& coeff(VertexId v, int j) const { return at(v)[(std::size_t)j]; }
};

template <class K>
Frame<K> random_frame(const SimplicialComplex& cx, int d, Rng& rng) {
    Frame<K> f;
    f.d = d;
    for (VertexId v : cx.vertices()) {
        std::vector<K> c;
        c.reserve((std::size_t)d);
        for (int j = 0; j < d; ++j) c.push_back(K::random(rng));
        f.coords.emplace(v, std::move(c));
    }
    return f;
}

// indeterminate coordinates a_<v>_<j>; column j is named with index j+base
inline Frame<RatFn> exact_frame(const SimplicialComplex& cx, int d, int base = 1) {
    Frame<RatFn> f;
    f.d = d;
    for (VertexId v : cx.vertices()) {
        std::vector<RatFn> c;
        for (int j = 0; j < d; ++j)
            c.push_back(RatFn::var("a_" + std::to_string(v) + "_" +
                                   std::to_string(j + base)));
        f.coords.emplace(v, std::move(c));
    }
    return f;
}

namespace detail {

// determinant of a d x d matrix given by columns, over any commutative ring
// of characteristic 2 (no signs, no division): subset dp over columns
template <class F>
F det_char2(const std::vector<const std::vector<F>*>& columns) {
    std::size_t n = columns.size();
    std::vector<F> dp(std::size_t(1) << n, F::zero());
    dp[0] = F::one();
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        int row = __builtin_popcountll(mask) - 1;
        F acc = F::zero();
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            const F& entry = (*columns[j])[(std::size_t)row];
            if (entry.is_zero()) continue;
            acc += entry * dp[mask ^ (std::size_t(1) << j)];
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

} // namespace detail

// [T] = det of vertex coordinates; repeated vertices give 0
template <class F>
F bracket(const Frame<F>& frame, std::span<const VertexId> tuple) {
    if ((int)tuple.size() != frame.d)
        throw std::invalid_argument("bracket tuple length != d");
    std::vector<const std::vector<F>*> cols;
    cols.reserve(tuple.size());
    for (VertexId v : tuple) cols.push_back(&frame.at(v));
    return detail::det_char2(cols);
}

template <class F>
F bracket(const Frame<F>& frame, const Face& facet) {
    return bracket(frame, std::span<const VertexId>(facet.vertices()));
}

// [T_{v_i}^w]
template <class F>
F bracket_sub(const Frame<F>& frame, std::span<const VertexId> tuple, std::size_t pos,
              VertexId w) {
    std::vector<VertexId> t(tuple.begin(), tuple.end());
    t.at(pos) = w;
    return bracket(frame, std::span<const VertexId>(t));
}

// [sigma_v](y): column at pos replaced by the point y
template <class F>
F bracket_point(const Frame<F>& frame, std::span<const VertexId> tuple, std::size_t pos,
                std::span<const F> y) {
    if ((int)tuple.size() != frame.d || y.size() != tuple.size())
        throw std::invalid_argument("bracket_point arity");
    std::vector<F> ycol(y.begin(), y.end());
    std::vector<const std::vector<F>*> cols;
    for (std::size_t j = 0; j < tuple.size(); ++j)
        cols.push_back(j == pos ? &ycol : &frame.at(tuple[j]));
    return detail::det_char2(cols);
}

// symbolic d_v^w = sum_j a_{wj} d/d a_{vj} on the exact backend, the
// independent route the dual-lift evaluations are checked against
inline RatFn exact_derive(const RatFn& f, VertexId v, VertexId w, int d, int base = 1) {
    RatFn acc = RatFn::zero();
    for (int j = 0; j < d; ++j) {
        std::string suffix = "_" + std::to_string(j + base);
        uint32_t vid = VarTable::id_of("a_" + std::to_string(v) + suffix);
        RatFn aw = RatFn::var("a_" + std::to_string(w) + suffix);
        acc += aw * f.derivative(vid);
    }
    return acc;
}

// derivation pairs (v_i, w_i): moves v_i toward w_i in one dual layer each
using DerivationPairs = std::vector<std::pair<VertexId, VertexId>>;

template <class F>
Frame<MultiDual<F>> lift_frame(const Frame<F>& frame, const DerivationPairs& pairs) {
    Frame<MultiDual<F>> out;
    out.d = frame.d;
    for (auto& [v, c] : frame.coords) {
        int layer = -1;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == v) layer = (int)i;
        std::vector<MultiDual<F>> lc;
        lc.reserve(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (layer < 0)
                lc.push_back(MultiDual<F>::constant(c[j]));
            else
                lc.push_back(MultiDual<F>::seeded(c[j], frame.at(pairs[(std::size_t)layer].second)[j],
                                                  layer));
        }
        out.coords.emplace(v, std::move(lc));
    }
    return out;
}

template <class F>
std::vector<MultiDual<F>> lift_constants(std::span<const F> xs) {
    std::vector<MultiDual<F>> out;
    out.reserve(xs.size());
    for (auto& x : xs) out.push_back(MultiDual<F>::constant(x));
    return out;
}

// iterated mixed derivative of a pure evaluation of the frame: the
// coefficient of e_0...e_{k-1} in fn over the lifted frame
template <class F, class Fn>
F derive_eval(const Frame<F>& frame, const DerivationPairs& pairs, Fn&& fn) {
    if ((int)pairs.size() > frame.d / 2)
        throw std::invalid_argument("more derivation layers than d/2");
    // sources distinct, and no target may be a source: the constant-slope
    // lift computes the operator composition only on that domain
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first == pairs[i].second)
            throw std::invalid_argument("derivation needs distinct vertices");
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (i != j && pairs[i].first == pairs[j].first)
                throw std::invalid_argument("derivation sources must be distinct");
            if (pairs[i].second == pairs[j].first)
                throw std::invalid_argument("derivation targets must avoid sources");
        }
    }
    auto lifted = lift_frame(frame, pairs);
    MultiDual<F> r = fn(lifted);
    return r.coeff((std::size_t(1) << pairs.size()) - 1);
}

} // namespace glab
