#pragma once

#include <stdexcept>
#include <string>

#include "glab/complex.hpp"

namespace glab {

// cycle:p — the p-gon, vertices 1..p
inline SimplicialComplex make_cycle(int p) {
    if (p < 3 || p > 64) throw std::invalid_argument("cycle:p needs 3 <= p <= 64");
    std::vector<std::vector<VertexId>> fs;
    for (int j = 1; j <= p; ++j) fs.push_back({j, j % p + 1});
    return build_complex(fs);
}

// boundary-simplex:d — boundary of the d-simplex on d+1 vertices
inline SimplicialComplex make_boundary_simplex(int d) {
    if (d < 2 || d > 8) throw std::invalid_argument("boundary-simplex:d needs 2 <= d <= 8");
    std::vector<std::vector<VertexId>> fs;
    for (int skip = 1; skip <= d + 1; ++skip) {
        std::vector<VertexId> f;
        for (int v = 1; v <= d + 1; ++v)
            if (v != skip) f.push_back(v);
        fs.push_back(f);
    }
    return build_complex(fs);
}

// cross-polytope:d — boundary of the d-dimensional cross-polytope;
// antipodal pairs are (2i-1, 2i)
inline SimplicialComplex make_cross_polytope(int d) {
    if (d < 2 || d > 6) throw std::invalid_argument("cross-polytope:d needs 2 <= d <= 6");
    std::vector<std::vector<VertexId>> fs;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<VertexId> f;
        for (int i = 0; i < d; ++i) f.push_back(2 * i + 1 + ((mask >> i) & 1));
        fs.push_back(f);
    }
    return build_complex(fs);
}

inline SimplicialComplex make_icosahedron() {
    return build_complex({{1, 2, 3},   {1, 3, 4},   {1, 4, 5},   {1, 5, 6},
                          {1, 6, 2},   {2, 7, 3},   {3, 7, 8},   {3, 8, 4},
                          {4, 8, 9},   {4, 9, 5},   {5, 9, 10},  {5, 10, 6},
                          {6, 10, 11}, {6, 11, 2},  {2, 11, 7},  {7, 12, 8},
                          {8, 12, 9},  {9, 12, 10}, {10, 12, 11}, {11, 12, 7}});
}

inline VertexId max_vertex(const SimplicialComplex& cx) {
    VertexId m = 0;
    for (VertexId v : cx.vertices()) m = std::max(m, v);
    return m;
}

// join: second factor's labels shifted above the first's
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    VertexId off = max_vertex(a);
    std::vector<std::vector<VertexId>> fs;
    for (auto& fa : a.facets()) {
        for (auto& fb : b.facets()) {
            std::vector<VertexId> f = fa.vertices();
            for (VertexId v : fb) f.push_back(v + off);
            fs.push_back(f);
        }
    }
    return build_complex(fs);
}

inline SimplicialComplex suspend_fresh(const SimplicialComplex& cx) {
    VertexId m = max_vertex(cx);
    return suspension(cx, m + 1, m + 2);
}

// builtin names: cycle:p | boundary-simplex:d | cross-polytope:d |
// icosahedron | suspension:<name> | join:<name>,<name>
inline SimplicialComplex make_builtin(const std::string& name) {
    auto num_after = [&](std::size_t pos) { return std::stoi(name.substr(pos)); };
    if (name.rfind("cycle:", 0) == 0) return make_cycle(num_after(6));
    if (name.rfind("boundary-simplex:", 0) == 0) return make_boundary_simplex(num_after(17));
    if (name.rfind("cross-polytope:", 0) == 0) return make_cross_polytope(num_after(15));
    if (name == "icosahedron") return make_icosahedron();
    if (name.rfind("suspension:", 0) == 0)
        return suspend_fresh(make_builtin(name.substr(11)));
    if (name.rfind("join:", 0) == 0) {
        std::string rest = name.substr(5);
        // split on the top-level comma (nested joins carry their own commas)
        int depth = 0;
        std::size_t cut = std::string::npos;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest.compare(i, 5, "join:") == 0) ++depth;
            if (rest[i] == ',') {
                if (depth == 0) {
                    cut = i;
                    break;
                }
                --depth;
            }
        }
        if (cut == std::string::npos)
            throw std::invalid_argument("join needs two operands: " + name);
        return join(make_builtin(rest.substr(0, cut)), make_builtin(rest.substr(cut + 1)));
    }
    throw std::invalid_argument("unknown builtin: " + name);
}

inline std::vector<std::string> builtin_examples() {
    return {"cycle:5",
            "cycle:6",
            "boundary-simplex:3",
            "boundary-simplex:4",
            "cross-polytope:3",
            "cross-polytope:4",
            "suspension:cycle:4",
            "join:cycle:3,cycle:3",
            "icosahedron"};
}

} // namespace glab
