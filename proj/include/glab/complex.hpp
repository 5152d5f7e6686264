#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glab/errors.hpp"

namespace glab {

using VertexId = int;

// sorted, duplicate-free vertex set; the empty face is allowed
class Face {
public:
    Face() = default;
    Face(std::initializer_list<VertexId> vs) : v_(vs) { normalize(); }
    explicit Face(std::vector<VertexId> vs) : v_(std::move(vs)) { normalize(); }

    static Face empty() { return Face(); }

    int dim() const { return (int)v_.size() - 1; }
    std::size_t size() const { return v_.size(); }
    bool is_empty() const { return v_.empty(); }
    const std::vector<VertexId>& vertices() const { return v_; }
    VertexId operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(VertexId v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }
    bool subset_of(const Face& o) const {
        return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
    }
    bool disjoint_from(const Face& o) const {
        std::vector<VertexId> tmp;
        std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                              std::back_inserter(tmp));
        return tmp.empty();
    }

    Face unite(const Face& o) const {
        std::vector<VertexId> r;
        std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                       std::back_inserter(r));
        Face f;
        f.v_ = std::move(r);
        return f;
    }
    Face intersect(const Face& o) const {
        std::vector<VertexId> r;
        std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                              std::back_inserter(r));
        Face f;
        f.v_ = std::move(r);
        return f;
    }
    Face minus(const Face& o) const {
        std::vector<VertexId> r;
        std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                            std::back_inserter(r));
        Face f;
        f.v_ = std::move(r);
        return f;
    }
    Face with(VertexId v) const { return unite(Face({v})); }
    Face without(VertexId v) const { return minus(Face({v})); }

    auto operator<=>(const Face&) const = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + "}";
    }

private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }
    std::vector<VertexId> v_;
};

// Facet-encoded complex; downward closure is implicit, faces are enumerated
// on demand per dimension.
class SimplicialComplex {
public:
    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    int dim() const { return dim_; }
    bool is_pure() const { return pure_; }
    int absorbed_nonmaximal() const { return absorbed_; }

    // number of vertices of a facet when pure
    int facet_size() const { return dim_ + 1; }

    bool has_face(const Face& f) const {
        for (auto& fac : facets_)
            if (f.subset_of(fac)) return true;
        return false;
    }

    std::vector<Face> faces_of_dim(int k) const {
        if (k < -1) return {};
        if (k == -1) return {Face::empty()};
        std::set<Face> out;
        std::vector<VertexId> pick((std::size_t)k + 1);
        for (auto& fac : facets_) {
            if (fac.dim() < k) continue;
            enumerate_subsets(fac.vertices(), (std::size_t)k + 1, pick, 0, 0, out);
        }
        return {out.begin(), out.end()};
    }

    std::vector<Face> all_faces() const {
        std::vector<Face> out = {Face::empty()};
        for (int k = 0; k <= dim_; ++k) {
            auto fk = faces_of_dim(k);
            out.insert(out.end(), fk.begin(), fk.end());
        }
        return out;
    }

    friend SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>&);
    friend SimplicialComplex complex_from_faces(const std::vector<Face>&);

private:
    static void enumerate_subsets(const std::vector<VertexId>& vs, std::size_t want,
                                  std::vector<VertexId>& pick, std::size_t at,
                                  std::size_t from, std::set<Face>& out) {
        if (at == want) {
            out.insert(Face(std::vector<VertexId>(pick.begin(), pick.end())));
            return;
        }
        for (std::size_t i = from; i + (want - at) <= vs.size(); ++i) {
            pick[at] = vs[i];
            enumerate_subsets(vs, want, pick, at + 1, i + 1, out);
        }
    }

    std::vector<Face> facets_;
    std::vector<VertexId> vertices_;
    int dim_ = -1;
    bool pure_ = true;
    int absorbed_ = 0;
};

inline SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& facet_lists) {
    if (facet_lists.empty()) throw empty_complex("no facets given");
    std::vector<Face> fs;
    for (auto& list : facet_lists) {
        std::set<VertexId> seen(list.begin(), list.end());
        if (seen.size() != list.size()) {
            throw invalid_facet("duplicate vertex within a facet");
        }
        for (VertexId v : list)
            if (v < 0) throw invalid_facet("negative vertex label");
        fs.emplace_back(list);
    }
    // keep inclusion-maximal facets only
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    SimplicialComplex cx;
    for (auto& f : fs) {
        bool maximal = true;
        for (auto& g : fs) {
            if (f != g && f.subset_of(g)) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            cx.facets_.push_back(f);
        else
            cx.absorbed_++;
    }
    std::set<VertexId> vs;
    int lo = 1 << 30, hi = -2;
    for (auto& f : cx.facets_) {
        vs.insert(f.begin(), f.end());
        lo = std::min(lo, f.dim());
        hi = std::max(hi, f.dim());
    }
    cx.vertices_.assign(vs.begin(), vs.end());
    cx.dim_ = hi;
    cx.pure_ = (lo == hi);
    return cx;
}

// rebuild from an explicit face list (maximal members become the facets)
inline SimplicialComplex complex_from_faces(const std::vector<Face>& faces) {
    std::vector<std::vector<VertexId>> lists;
    for (auto& f : faces)
        if (!f.is_empty()) lists.push_back(f.vertices());
    if (lists.empty()) {
        // the complex {∅}
        SimplicialComplex cx;
        cx.dim_ = -1;
        cx.pure_ = true;
        return cx;
    }
    return build_complex(lists);
}

inline SimplicialComplex link(const SimplicialComplex& cx, const Face& sigma) {
    if (!cx.has_face(sigma)) throw not_a_face("link of " + sigma.to_string());
    std::vector<Face> faces;
    for (auto& fac : cx.facets()) {
        if (!sigma.subset_of(fac)) continue;
        faces.push_back(fac.minus(sigma));
    }
    return complex_from_faces(faces);
}

inline SimplicialComplex star(const SimplicialComplex& cx, const Face& sigma) {
    if (!cx.has_face(sigma)) throw not_a_face("star of " + sigma.to_string());
    std::vector<Face> faces;
    for (auto& fac : cx.facets())
        if (sigma.subset_of(fac)) faces.push_back(fac);
    return complex_from_faces(faces);
}

inline SimplicialComplex cone(const SimplicialComplex& cx, VertexId apex) {
    for (VertexId v : cx.vertices())
        if (v == apex) throw apex_in_complex("apex " + std::to_string(apex));
    std::vector<Face> faces;
    for (auto& fac : cx.facets()) faces.push_back(fac.with(apex));
    return complex_from_faces(faces);
}

inline SimplicialComplex suspension(const SimplicialComplex& cx, VertexId v_plus,
                                    VertexId v_minus) {
    if (v_plus == v_minus) throw apex_in_complex("coincident poles");
    for (VertexId v : cx.vertices())
        if (v == v_plus || v == v_minus)
            throw apex_in_complex("pole already a vertex");
    std::vector<Face> faces;
    for (auto& fac : cx.facets()) {
        faces.push_back(fac.with(v_plus));
        faces.push_back(fac.with(v_minus));
    }
    return complex_from_faces(faces);
}

// f_{-1..d-1}; requires purity
inline std::vector<long long> f_vector(const SimplicialComplex& cx) {
    if (!cx.is_pure()) throw not_pure("f-vector of a non-pure complex");
    std::vector<long long> f;
    f.push_back(1);
    for (int k = 0; k <= cx.dim(); ++k)
        f.push_back((long long)cx.faces_of_dim(k).size());
    return f;
}

inline long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}
inline std::vector<long long> h_from_f(const std::vector<long long>& f) {
    int d = (int)f.size() - 1;
    std::vector<long long> h((std::size_t)d + 1, 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i) {
            long long c = binom(d - i, k - i) * f[(std::size_t)i];
            h[(std::size_t)k] += ((k - i) % 2 == 0) ? c : -c;
        }
    return h;
}

// inverse transform: f_{k-1} = sum_i C(d-i, k-i) h_i
inline std::vector<long long> f_from_h(const std::vector<long long>& h) {
    int d = (int)h.size() - 1;
    std::vector<long long> f((std::size_t)d + 1, 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i)
            f[(std::size_t)k] += binom(d - i, k - i) * h[(std::size_t)i];
    return f;
}

inline std::vector<long long> h_vector(const SimplicialComplex& cx) {
    return h_from_f(f_vector(cx));
}

inline bool is_palindromic(const std::vector<long long>& h) {
    for (std::size_t i = 0, j = h.size() - 1; i < j; ++i, --j)
        if (h[i] != h[j]) return false;
    return true;
}

} // namespace glab
