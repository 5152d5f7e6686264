#pragma once

#include <map>
#include <queue>
#include <vector>

#include "glab/bitmatrix.hpp"
#include "glab/complex.hpp"

namespace glab {

struct TopologyReport {
    bool is_pure = false;
    bool is_pseudomanifold = false;
    bool is_normal = false;
    bool normal_including_empty_face = false;
    bool is_orientable_over_f2 = false; // structural in characteristic 2
    std::vector<long long> betti_f2;
    bool is_homology_sphere_f2 = false;
    int absorbed_nonmaximal_facets = 0;
};

// GF(2) Betti numbers from boundary-matrix ranks of the chain complex
inline std::vector<long long> betti_f2(const SimplicialComplex& cx) {
    int d = cx.dim();
    if (d < 0) return {};
    std::vector<std::vector<Face>> faces((std::size_t)d + 1);
    std::vector<std::map<Face, std::size_t>> index((std::size_t)d + 1);
    for (int k = 0; k <= d; ++k) {
        faces[(std::size_t)k] = cx.faces_of_dim(k);
        for (std::size_t i = 0; i < faces[(std::size_t)k].size(); ++i)
            index[(std::size_t)k][faces[(std::size_t)k][i]] = i;
    }
    // rank of boundary map C_k -> C_{k-1}
    std::vector<std::size_t> ranks((std::size_t)d + 1, 0);
    for (int k = 1; k <= d; ++k) {
        BitMatrix m(faces[(std::size_t)k].size(), faces[(std::size_t)k - 1].size());
        for (std::size_t i = 0; i < faces[(std::size_t)k].size(); ++i) {
            const Face& f = faces[(std::size_t)k][i];
            for (VertexId v : f) {
                m.set(i, index[(std::size_t)k - 1].at(f.without(v)));
            }
        }
        ranks[(std::size_t)k] = m.rank();
    }
    std::vector<long long> betti((std::size_t)d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long dim_ck = (long long)faces[(std::size_t)k].size();
        long long out = (long long)ranks[(std::size_t)k]; // rank ∂_k (0 for k=0)
        long long in = (k < d) ? (long long)ranks[(std::size_t)k + 1] : 0;
        betti[(std::size_t)k] = dim_ck - out - in;
    }
    return betti;
}

inline std::vector<long long> sphere_betti_profile(int dim) {
    if (dim < 0) return {};
    if (dim == 0) return {2};
    std::vector<long long> b((std::size_t)dim + 1, 0);
    b[0] = 1;
    b[(std::size_t)dim] = 1;
    return b;
}

// connectivity of the 1-skeleton (plus isolated vertices)
inline bool is_connected(const SimplicialComplex& cx) {
    const auto& vs = cx.vertices();
    if (vs.empty()) return true;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : vs) adj[v] = {};
    for (auto& e : cx.faces_of_dim(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::set<VertexId> seen;
    std::queue<VertexId> q;
    q.push(vs[0]);
    seen.insert(vs[0]);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : adj[v])
            if (seen.insert(w).second) q.push(w);
    }
    return seen.size() == vs.size();
}

// ridge degree 2 everywhere plus strong connectivity of the dual graph
inline bool is_pseudomanifold(const SimplicialComplex& cx) {
    if (!cx.is_pure() || cx.dim() < 0) return false;
    const auto& facets = cx.facets();
    std::map<Face, std::vector<std::size_t>> by_ridge;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (VertexId v : facets[i]) by_ridge[facets[i].without(v)].push_back(i);
    for (auto& [ridge, fs] : by_ridge)
        if (fs.size() != 2) return false;
    // breadth-first search over ridge adjacency
    std::vector<bool> seen(facets.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        for (VertexId v : facets[i]) {
            for (std::size_t j : by_ridge[facets[i].without(v)]) {
                if (!seen[j]) {
                    seen[j] = true;
                    ++count;
                    q.push(j);
                }
            }
        }
    }
    return count == facets.size();
}

// links of faces of codimension >= 2 are connected
inline bool is_normal(const SimplicialComplex& cx, bool include_empty_face) {
    int d = cx.dim() + 1;
    int from = include_empty_face ? -1 : 0;
    for (int k = from; k <= d - 3; ++k) {
        for (auto& f : cx.faces_of_dim(k)) {
            if (!is_connected(link(cx, f))) return false;
        }
    }
    return true;
}

// homology-manifold test plus total sphere homology, all over GF(2)
inline bool is_homology_sphere_f2(const SimplicialComplex& cx) {
    if (!cx.is_pure() || cx.dim() < 0) return false;
    if (betti_f2(cx) != sphere_betti_profile(cx.dim())) return false;
    for (int k = 0; k <= cx.dim(); ++k) {
        for (auto& f : cx.faces_of_dim(k)) {
            SimplicialComplex lk = link(cx, f);
            if (lk.dim() != cx.dim() - k - 1) return false;
            if (lk.dim() < 0) continue; // link of a facet is {∅}
            if (betti_f2(lk) != sphere_betti_profile(lk.dim())) return false;
        }
    }
    return true;
}

inline TopologyReport topology_report(const SimplicialComplex& cx) {
    TopologyReport r;
    r.is_pure = cx.is_pure();
    r.absorbed_nonmaximal_facets = cx.absorbed_nonmaximal();
    r.is_pseudomanifold = is_pseudomanifold(cx);
    r.is_normal = r.is_pseudomanifold && is_normal(cx, false);
    r.normal_including_empty_face = r.is_pseudomanifold && is_normal(cx, true);
    r.is_orientable_over_f2 = r.is_pseudomanifold;
    r.betti_f2 = betti_f2(cx);
    r.is_homology_sphere_f2 = is_homology_sphere_f2(cx);
    return r;
}

inline long long euler_characteristic(const std::vector<long long>& f) {
    long long chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
        chi += (i % 2) ? f[i] : -f[i];
    return chi;
}

} // namespace glab
