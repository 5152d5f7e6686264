#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glab/builtins.hpp"
#include "glab/complex.hpp"
#include "glab/io.hpp"
#include "glab/topology.hpp"

using namespace glab;

namespace {

// independent oracle: enumerate all vertex subsets and test membership
std::size_t count_faces_brute(const SimplicialComplex& cx, int k) {
    const auto& vs = cx.vertices();
    std::size_t n = vs.size(), count = 0;
    for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (__builtin_popcountll(mask) != k + 1) continue;
        std::vector<VertexId> pick;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ULL << i)) pick.push_back(vs[i]);
        if (cx.has_face(Face(pick))) ++count;
    }
    return count;
}

SimplicialComplex torus7() {
    // 7-vertex triangulation of the 2-torus
    std::vector<std::vector<VertexId>> fs;
    for (int i = 0; i < 7; ++i) {
        fs.push_back({i, (i + 1) % 7, (i + 3) % 7});
        fs.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return build_complex(fs);
}

} // namespace

TEST_CASE("build_complex") {
    auto c4 = build_complex({{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(c4.facets().size() == 4);
    CHECK(c4.vertices().size() == 4);
    CHECK(c4.dim() == 1);

    auto bd3 = build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(bd3.dim() == 2);
    CHECK(bd3.facets().size() == 4);
    CHECK(bd3.is_pure());

    CHECK_THROWS_AS(build_complex({{1, 1, 2}}), invalid_facet);
    CHECK_THROWS_AS(build_complex({}), empty_complex);
    CHECK_THROWS_AS(build_complex({{-1, 2}}), invalid_facet);

    // labels need not be contiguous
    auto sparse_labels = build_complex({{10, 500}, {500, 90000}, {90000, 10}});
    CHECK(sparse_labels.vertices() == std::vector<VertexId>{10, 500, 90000});
    CHECK(h_vector(sparse_labels) == std::vector<long long>{1, 1, 1});
    CHECK(is_homology_sphere_f2(sparse_labels));

    // non-maximal facets are absorbed with a count
    auto absorbed = build_complex({{1, 2, 3}, {1, 2}});
    CHECK(absorbed.facets().size() == 1);
    CHECK(absorbed.absorbed_nonmaximal() == 1);
}

TEST_CASE("faces_of_dim") {
    auto c4 = make_cycle(4);
    auto verts = c4.faces_of_dim(0);
    CHECK(verts.size() == 4);
    auto empt = c4.faces_of_dim(-1);
    REQUIRE(empt.size() == 1);
    CHECK(empt[0].is_empty());
    CHECK(c4.faces_of_dim(5).empty());

    auto bd3 = make_boundary_simplex(3);
    CHECK(bd3.faces_of_dim(1).size() == 6);
    CHECK(bd3.faces_of_dim(1).size() == count_faces_brute(bd3, 1));
}

TEST_CASE("downward closure") {
    auto oct = make_cross_polytope(3);
    for (auto& fac : oct.facets()) {
        for (VertexId v : fac) {
            CHECK(oct.has_face(fac.without(v)));
        }
    }
    CHECK(!oct.has_face(Face({1, 2}))); // antipodal pair is a non-face
    CHECK(oct.has_face(Face::empty()));
}

TEST_CASE("f and h vectors") {
    for (int p = 3; p <= 9; ++p) {
        auto h = h_vector(make_cycle(p));
        CHECK(h == std::vector<long long>{1, p - 2, 1});
    }
    auto oct = suspend_fresh(make_cycle(4));
    CHECK(f_vector(oct) == std::vector<long long>{1, 6, 12, 8});
    CHECK(h_vector(oct) == std::vector<long long>{1, 3, 3, 1});
    for (int d = 2; d <= 6; ++d) {
        auto h = h_vector(make_boundary_simplex(d));
        CHECK(h == std::vector<long long>((std::size_t)d + 1, 1));
    }
    CHECK(h_vector(make_icosahedron()) == std::vector<long long>{1, 9, 9, 1});
    CHECK(h_vector(join(make_cycle(3), make_cycle(3))) ==
          std::vector<long long>{1, 2, 3, 2, 1});

    CHECK_THROWS_AS(f_vector(build_complex({{1, 2, 3}, {4, 5}})), not_pure);
}

TEST_CASE("f<->h round trip and palindromicity") {
    std::vector<SimplicialComplex> corpus;
    corpus.push_back(make_cycle(6));
    corpus.push_back(make_cross_polytope(3));
    corpus.push_back(make_cross_polytope(4));
    corpus.push_back(make_icosahedron());
    corpus.push_back(join(make_cycle(3), make_cycle(3)));
    corpus.push_back(make_boundary_simplex(4));
    for (auto& cx : corpus) {
        auto f = f_vector(cx);
        auto h = h_from_f(f);
        CHECK(f_from_h(h) == f);
        CHECK(is_palindromic(h));
    }
    // non-sphere: the path graph's h is not palindromic
    CHECK(!is_palindromic(h_vector(build_complex({{1, 2}, {2, 3}}))));
}

TEST_CASE("link and star") {
    auto c5 = make_cycle(5);
    auto lk = link(c5, Face({2}));
    CHECK(lk.dim() == 0);
    CHECK(lk.vertices() == std::vector<VertexId>{1, 3});

    auto oct = make_cross_polytope(3);
    auto st = star(oct, Face::empty());
    CHECK(st.facets() == oct.facets());

    auto lkf = link(oct, oct.facets()[0]);
    CHECK(lkf.dim() == -1); // the complex {∅}

    CHECK_THROWS_AS(link(oct, Face({1, 2})), not_a_face);

    // link of a vertex in the octahedron is a 4-cycle
    auto lkv = link(oct, Face({1}));
    CHECK(lkv.facets().size() == 4);
    CHECK(h_vector(lkv) == std::vector<long long>{1, 2, 1});
}

TEST_CASE("cone and suspension") {
    auto pt = build_complex({{1}});
    auto edge = cone(pt, 2);
    CHECK(edge.facets() == std::vector<Face>{Face({1, 2})});

    auto oct = suspension(make_cycle(4), 5, 6);
    CHECK(oct.facets().size() == 8);
    // facet-set comparison with the cross-polytope boundary
    auto cross = make_cross_polytope(3);
    CHECK(oct.facets().size() == cross.facets().size());
    CHECK(h_vector(oct) == h_vector(cross));
    CHECK(is_homology_sphere_f2(oct));

    CHECK_THROWS_AS(suspension(make_cycle(4), 5, 5), apex_in_complex);
    CHECK_THROWS_AS(cone(make_cycle(4), 1), apex_in_complex);

    // lk_{S}(v_+) recovers the base as a face set
    auto lkp = link(oct, Face({5}));
    CHECK(lkp.facets() == make_cycle(4).facets());
}

TEST_CASE("topology_report positives") {
    auto oct = make_cross_polytope(3);
    auto r = topology_report(oct);
    CHECK(r.is_pure);
    CHECK(r.is_pseudomanifold);
    CHECK(r.is_normal);
    CHECK(r.normal_including_empty_face);
    CHECK(r.is_orientable_over_f2);
    CHECK(r.betti_f2 == std::vector<long long>{1, 0, 1});
    CHECK(r.is_homology_sphere_f2);

    auto rc = topology_report(make_cycle(7));
    CHECK(rc.betti_f2 == std::vector<long long>{1, 1});
    CHECK(rc.is_homology_sphere_f2);

    CHECK(is_homology_sphere_f2(make_boundary_simplex(5)));
    CHECK(is_homology_sphere_f2(join(make_cycle(3), make_cycle(3))));
    CHECK(is_homology_sphere_f2(make_icosahedron()));

    // S^0: two points
    auto s0 = build_complex({{1}, {2}});
    CHECK(topology_report(s0).is_pseudomanifold);
    CHECK(betti_f2(s0) == std::vector<long long>{2});
    CHECK(is_homology_sphere_f2(s0));
}

TEST_CASE("topology_report negatives") {
    auto path = build_complex({{1, 2}, {2, 3}});
    auto r = topology_report(path);
    CHECK(r.is_pure);
    CHECK(!r.is_pseudomanifold);
    CHECK(!r.is_homology_sphere_f2);

    // two triangles glued at a vertex: ridge degree 1, disconnected vertex link
    auto wedge = build_complex({{1, 2, 3}, {3, 4, 5}});
    auto rw = topology_report(wedge);
    CHECK(!rw.is_pseudomanifold);
    CHECK(!rw.is_homology_sphere_f2);
    CHECK(!is_normal(wedge, false));

    // torus: pseudomanifold and normal, but not a sphere
    auto t = torus7();
    auto rt = topology_report(t);
    CHECK(rt.is_pure);
    CHECK(rt.is_pseudomanifold);
    CHECK(rt.is_normal);
    CHECK(rt.betti_f2 == std::vector<long long>{1, 2, 1});
    CHECK(!rt.is_homology_sphere_f2);
}

TEST_CASE("homology sphere implies pseudomanifold and normal") {
    std::vector<SimplicialComplex> corpus;
    corpus.push_back(make_cycle(6));
    corpus.push_back(make_cross_polytope(4));
    corpus.push_back(make_icosahedron());
    corpus.push_back(join(make_cycle(3), make_cycle(3)));
    for (auto& cx : corpus) {
        auto r = topology_report(cx);
        REQUIRE(r.is_homology_sphere_f2);
        CHECK(r.is_pseudomanifold);
        CHECK(r.is_normal);
    }
}

TEST_CASE("euler characteristic equals alternating betti sum") {
    std::vector<SimplicialComplex> corpus;
    corpus.push_back(make_cycle(5));
    corpus.push_back(make_cross_polytope(3));
    corpus.push_back(make_cross_polytope(4));
    corpus.push_back(make_icosahedron());
    corpus.push_back(torus7());
    corpus.push_back(make_boundary_simplex(4));
    for (auto& cx : corpus) {
        auto f = f_vector(cx);
        auto b = betti_f2(cx);
        long long chi_b = 0;
        for (std::size_t i = 0; i < b.size(); ++i) chi_b += (i % 2) ? -b[i] : b[i];
        CHECK(euler_characteristic(f) == chi_b);
    }
}

TEST_CASE("input formats") {
    auto a = parse_complex_text("{\"facets\": [[1,2],[2,3],[3,4],[4,1]]}");
    CHECK(a.facets() == make_cycle(4).facets());
    auto b = parse_complex_text("1 2\n2 3\n3 4\n4 1\n");
    CHECK(b.facets() == make_cycle(4).facets());

    CHECK(parse_monomial("1:2,3:1").degree() == 3);
    CHECK(parse_face("2,4,6") == Face({2, 4, 6}));
}

TEST_CASE("builtin names") {
    CHECK(make_builtin("cycle:6").facets().size() == 6);
    CHECK(make_builtin("cross-polytope:4").facets().size() == 16);
    CHECK(make_builtin("suspension:cycle:4").facets().size() == 8);
    CHECK(make_builtin("join:cycle:3,cycle:3").facets().size() == 9);
    CHECK(make_builtin("icosahedron").facets().size() == 20);
    CHECK_THROWS(make_builtin("klein-bottle"));
    CHECK_THROWS(make_builtin("cycle:2"));
}
