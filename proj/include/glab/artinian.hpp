#pragma once

#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "glab/complex.hpp"
#include "glab/frame.hpp"
#include "glab/linalg.hpp"
#include "glab/monomial.hpp"

namespace glab {

// element of the graded quotient, kept as a monomial combination
template <class F>
struct ChowClass {
    int degree = 0;
    std::map<Monomial, F> coords;

    static ChowClass zero(int degree) { return ChowClass{degree, {}}; }
    static ChowClass of_monomial(const Monomial& z, F c = F::one()) {
        ChowClass r{z.degree(), {}};
        if (!c.is_zero()) r.coords.emplace(z, std::move(c));
        return r;
    }

    void add(const Monomial& z, const F& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coords.emplace(z, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coords.erase(it);
        }
    }
    bool is_zero() const { return coords.empty(); }

    template <class G, class Fn>
    ChowClass<G> map_coeffs(Fn&& fn) const {
        ChowClass<G> r{degree, {}};
        for (auto& [z, c] : coords) r.add(z, fn(c));
        return r;
    }
};

// product in K[Sigma]: expand and delete non-face monomials
template <class F>
ChowClass<F> multiply(const SimplicialComplex& cx, const ChowClass<F>& a,
                      const ChowClass<F>& b) {
    ChowClass<F> r{a.degree + b.degree, {}};
    for (auto& [za, ca] : a.coords) {
        for (auto& [zb, cb] : b.coords) {
            Monomial z = za.times(zb);
            if (!cx.has_face(z.support())) continue;
            r.add(z, ca * cb);
        }
    }
    return r;
}

template <class F>
ChowClass<F> multiply_by_vertex(const SimplicialComplex& cx, const ChowClass<F>& a,
                                VertexId v, const F& coeff) {
    ChowClass<F> r{a.degree + 1, {}};
    for (auto& [z, c] : a.coords) {
        Monomial zz = z.times_vertex(v);
        if (!cx.has_face(zz.support())) continue;
        r.add(zz, c * coeff);
    }
    return r;
}

// multiply by a degree-1 form given by vertex coefficients
template <class F>
ChowClass<F> multiply_by_form(const SimplicialComplex& cx, const ChowClass<F>& a,
                              const std::map<VertexId, F>& form) {
    ChowClass<F> r{a.degree + 1, {}};
    for (auto& [v, fv] : form) {
        if (fv.is_zero()) continue;
        auto t = multiply_by_vertex(cx, a, v, fv);
        for (auto& [z, c] : t.coords) r.add(z, c);
    }
    return r;
}

// A^m as spanning monomials + elimination normal form for the relation
// subspace spanned by ell_j * (degree m-1 monomials)
template <class F>
struct GradedPiece {
    int degree = 0;
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    Rref<F> relations;
    std::vector<std::size_t> basis_cols;

    std::size_t dim() const { return basis_cols.size(); }

    std::vector<F> to_vector(const ChowClass<F>& a) const {
        std::vector<F> v(monomials.size(), F::zero());
        for (auto& [z, c] : a.coords) {
            auto it = index.find(z);
            if (it == index.end())
                throw std::invalid_argument("monomial outside the graded piece: " +
                                            z.to_string());
            v[it->second] += c;
        }
        return v;
    }

    void reduce_vector(std::vector<F>& v) const {
        for (std::size_t r = 0; r < relations.rows.size(); ++r) {
            const F& c = v[relations.pivot_cols[r]];
            if (!c.is_zero()) row_axpy(v, relations.rows[r], c);
        }
    }

    ChowClass<F> reduce(const ChowClass<F>& a) const {
        auto v = to_vector(a);
        reduce_vector(v);
        ChowClass<F> r{degree, {}};
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) r.add(monomials[i], v[i]);
        return r;
    }

    // coordinates on the reduced basis
    std::vector<F> basis_coords(const ChowClass<F>& a) const {
        auto v = to_vector(a);
        reduce_vector(v);
        std::vector<F> out;
        out.reserve(basis_cols.size());
        for (std::size_t c : basis_cols) out.push_back(v[c]);
        return out;
    }
};

template <class F>
GradedPiece<F> build_graded_piece(const SimplicialComplex& cx, const Frame<F>& frame,
                                  int m) {
    GradedPiece<F> p;
    p.degree = m;
    p.monomials = monomials_of_degree(cx, m);
    for (std::size_t i = 0; i < p.monomials.size(); ++i) p.index[p.monomials[i]] = i;
    if (m > 0 && !p.monomials.empty()) {
        auto prev = monomials_of_degree(cx, m - 1);
        std::vector<std::vector<F>> rows;
        rows.reserve(prev.size() * (std::size_t)frame.d);
        for (auto& alpha : prev) {
            for (int j = 0; j < frame.d; ++j) {
                std::vector<F> row(p.monomials.size(), F::zero());
                bool any = false;
                for (VertexId v : cx.vertices()) {
                    Monomial z = alpha.times_vertex(v);
                    if (!cx.has_face(z.support())) continue;
                    row[p.index.at(z)] += frame.coeff(v, j);
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
        }
        p.relations = rref(std::move(rows));
    }
    std::vector<bool> is_pivot(p.monomials.size(), false);
    for (std::size_t c : p.relations.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < p.monomials.size(); ++c)
        if (!is_pivot[c]) p.basis_cols.push_back(c);
    return p;
}

// caches the graded pieces of K[Sigma]/(M) per degree
template <class F>
class ArtinianRing {
public:
    ArtinianRing(const SimplicialComplex& cx, Frame<F> frame)
        : cx_(&cx), frame_(std::move(frame)) {}

    const SimplicialComplex& complex() const { return *cx_; }
    const Frame<F>& frame() const { return frame_; }
    int d() const { return frame_.d; }

    const GradedPiece<F>& piece(int m) const {
        auto it = pieces_.find(m);
        if (it == pieces_.end())
            it = pieces_.emplace(m, build_graded_piece(*cx_, frame_, m)).first;
        return it->second;
    }
    std::size_t dim(int m) const {
        if (m < 0) return 0;
        return piece(m).dim();
    }

    ChowClass<F> reduce(const ChowClass<F>& a) const { return piece(a.degree).reduce(a); }

    ChowClass<F> mul(const ChowClass<F>& a, const ChowClass<F>& b) const {
        return reduce(multiply(*cx_, a, b));
    }

    // random coefficients on the spanning monomials of degree m (coordinates
    // are constants, so the same class makes sense for every specialization)
    template <class Draw>
    ChowClass<F> random_class(int m, Draw&& draw) const {
        ChowClass<F> r{m, {}};
        for (auto& z : piece(m).monomials) r.add(z, draw());
        return r;
    }

private:
    const SimplicialComplex* cx_;
    Frame<F> frame_;
    mutable std::map<int, GradedPiece<F>> pieces_;
};

// the ell in M with e_v(ell) = 1 and e_u(ell) = 0 on rest, coordinates past
// the constraint block zeroed; returned as the ell-basis coefficient vector
template <class F>
std::vector<F> solve_form(const Frame<F>& frame, VertexId v, const Face& constraints) {
    std::size_t t = constraints.size();
    if ((int)t > frame.d) throw singular_solve("too many constraints for the frame");
    if (!constraints.contains(v))
        throw std::invalid_argument("target vertex outside the constraint block");
    std::vector<std::vector<F>> a(t, std::vector<F>(t, F::zero()));
    std::vector<F> b(t, F::zero());
    const auto& vs = constraints.vertices();
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) a[i][j] = frame.coeff(vs[i], (int)j);
        if (vs[i] == v) b[i] = F::one();
    }
    auto c = solve_square(std::move(a), std::move(b));
    c.resize((std::size_t)frame.d, F::zero());
    return c;
}

template <class F>
F form_coeff(const Frame<F>& frame, const std::vector<F>& c, VertexId u) {
    F acc = F::zero();
    const auto& cu = frame.at(u);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        acc += c[j] * cu[j];
    }
    return acc;
}

namespace detail {

// distance-decreasing next step toward target in the dual graph of the
// pure complex lk (facets adjacent when they share all but one vertex)
inline std::map<Face, Face> face_path_tree(const SimplicialComplex& lk, const Face& target) {
    std::map<Face, Face> next;
    std::queue<Face> q;
    q.push(target);
    next[target] = target;
    const auto facets = lk.facets();
    while (!q.empty()) {
        Face cur = q.front();
        q.pop();
        for (auto& g : facets) {
            if (next.count(g)) continue;
            if (g.intersect(cur).size() + 1 == g.size()) {
                next[g] = cur;
                q.push(g);
            }
        }
    }
    return next;
}

} // namespace detail

// Rewrites x as a combination of square-free monomials with support disjoint
// from gamma; with tau given, tau is the only face of lk(gamma) left in the
// sum. The measure sum(exp_v - 1) + |supp ∩ gamma| strictly decreases, then a
// face path in lk(gamma) clears the remaining lk-facets.
template <class F>
ChowClass<F> displace(const SimplicialComplex& cx, const Frame<F>& frame,
                      const ChowClass<F>& x, const Face& gamma,
                      const std::optional<Face>& tau = std::nullopt) {
    int m = x.degree;
    auto delta = [&](const Monomial& z) {
        int s = 0;
        for (auto& [v, e] : z.exponents()) s += e - 1;
        return s + (int)z.support().intersect(gamma).size();
    };
    std::map<Monomial, F> work = x.coords;

    // phase 1: clear repeated exponents and gamma overlaps
    for (;;) {
        auto it = std::find_if(work.begin(), work.end(),
                               [&](auto& kv) { return delta(kv.first) > 0; });
        if (it == work.end()) break;
        Monomial z = it->first;
        F c = it->second;
        work.erase(it);
        VertexId v = -1;
        for (auto& [u, e] : z.exponents()) {
            if (e >= 2 || gamma.contains(u)) {
                v = u;
                break;
            }
        }
        Face s = z.support().unite(gamma);
        auto form = solve_form(frame, v, s);
        Monomial base = z.div_vertex(v);
        for (VertexId u : cx.vertices()) {
            if (s.contains(u)) continue;
            F cu = form_coeff(frame, form, u);
            if (cu.is_zero()) continue;
            Monomial zz = base.times_vertex(u);
            if (!cx.has_face(zz.support())) continue;
            F add = c * cu;
            auto [jt, fresh] = work.emplace(zz, add);
            if (!fresh) {
                jt->second += add;
                if (jt->second.is_zero()) work.erase(jt);
            }
        }
    }

    // phase 2: walk lk(gamma) facets into tau along face paths
    if (tau && m > 0) {
        SimplicialComplex lk = link(cx, gamma);
        if (lk.dim() != m - 1)
            throw not_normal_pseudomanifold("link dimension mismatch in displacement");
        if ((int)tau->size() != m || !lk.has_face(*tau))
            throw std::invalid_argument("tau is not a top face of lk(gamma)");
        auto next = detail::face_path_tree(lk, *tau);
        long guard = 1000 + 1000L * (long)lk.facets().size() * (long)lk.facets().size();
        for (;;) {
            if (--guard < 0)
                throw not_normal_pseudomanifold("face-path rewriting does not settle");
            auto it = std::find_if(work.begin(), work.end(), [&](auto& kv) {
                const Face f = kv.first.support();
                return (int)f.size() == m && f != *tau && lk.has_face(f);
            });
            if (it == work.end()) break;
            Face eta = it->first.support();
            F c = it->second;
            work.erase(it);
            auto nx = next.find(eta);
            if (nx == next.end())
                throw not_normal_pseudomanifold("no face path to tau in lk(gamma)");
            Face eta_plus = nx->second;
            Face kappa = eta.intersect(eta_plus);
            VertexId v_minus = eta.minus(kappa)[0];
            Face block = kappa.unite(gamma).with(v_minus);
            auto form = solve_form(frame, v_minus, block);
            for (VertexId u : cx.vertices()) {
                if (block.contains(u)) continue;
                F cu = form_coeff(frame, form, u);
                if (cu.is_zero()) continue;
                Face supp = kappa.with(u);
                if (!cx.has_face(supp)) continue;
                Monomial zz = Monomial::of_face(supp);
                F add = c * cu;
                auto [jt, fresh] = work.emplace(zz, add);
                if (!fresh) {
                    jt->second += add;
                    if (jt->second.is_zero()) work.erase(jt);
                }
            }
        }
    }

    ChowClass<F> out{m, std::move(work)};
    return out;
}

// Vol(b_i c_j) over the reduced bases of A^m and A^{d-m}; vol_fn evaluates a
// degree-d monomial (0 when the product support is a non-face)
template <class F, class VolFn>
std::vector<std::vector<F>> pairing_matrix(const ArtinianRing<F>& ring, int m,
                                           VolFn&& vol_fn) {
    const auto& pa = ring.piece(m);
    const auto& pb = ring.piece(ring.d() - m);
    std::vector<std::vector<F>> mat(pa.dim(), std::vector<F>(pb.dim(), F::zero()));
    for (std::size_t i = 0; i < pa.dim(); ++i) {
        const Monomial& zi = pa.monomials[pa.basis_cols[i]];
        for (std::size_t j = 0; j < pb.dim(); ++j) {
            const Monomial& zj = pb.monomials[pb.basis_cols[j]];
            Monomial z = zi.times(zj);
            if (!ring.complex().has_face(z.support())) continue;
            mat[i][j] = vol_fn(z);
        }
    }
    return mat;
}

template <class F, class VolFn>
bool pairing_nondegenerate(const ArtinianRing<F>& ring, int m, VolFn&& vol_fn) {
    auto mat = pairing_matrix(ring, m, vol_fn);
    if (ring.dim(m) != ring.dim(ring.d() - m)) return false;
    if (mat.empty()) return ring.dim(m) == 0;
    return matrix_rank(std::move(mat)) == ring.dim(m);
}

} // namespace glab
