#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glab/builtins.hpp"
#include "glab/lefschetz.hpp"

using namespace glab;
using F = Gf2k<64>;

TEST_CASE("cone transfer round trips") {
    auto c4 = make_cycle(4);
    Rng rng(3);
    auto ccx = cone(c4, 9);
    auto setup = make_cone_setup(c4, 9, random_frame<F>(ccx, 3, rng));
    ArtinianRing<F> ring_base(c4, setup.frame_base);
    ArtinianRing<F> ring_cone(setup.ccx, setup.frame_cone);

    // i_v(1) = 1
    auto one = ChowClass<F>::of_monomial(Monomial::unit());
    CHECK(cone_transfer_in(one).coords == one.coords);

    // dimension agreement through the isomorphism
    for (int m = 0; m <= 2; ++m) CHECK(ring_base.dim(m) == ring_cone.dim(m));

    // j_v . i_v = id on reduced classes of the base
    for (int rep = 0; rep < 10; ++rep) {
        auto u = ring_base.random_class(1, [&] { return F::random(rng); });
        auto back = cone_transfer_out(c4, setup, cone_transfer_in(u));
        CHECK(ring_base.reduce(u).coords == ring_base.reduce(back).coords);
    }
    // i_v . j_v = id on reduced classes of the cone (x_apex involved)
    for (int rep = 0; rep < 10; ++rep) {
        auto u = ring_cone.random_class(2, [&] { return F::random(rng); });
        auto out = cone_transfer_out(c4, setup, u);
        // out lives on base monomials; mapping back into the cone is verbatim
        CHECK(ring_cone.reduce(u).coords == ring_cone.reduce(out).coords);
    }
}

TEST_CASE("cone parameter degeneracy is reported") {
    auto c4 = make_cycle(4);
    Rng rng(5);
    auto ccx = cone(c4, 9);
    auto frame = random_frame<F>(ccx, 3, rng);
    for (int j = 0; j < 3; ++j) frame.coords.at(9)[(std::size_t)j] = F::zero();
    CHECK_THROWS_AS(make_cone_setup(c4, 9, std::move(frame)), cone_parameter_degenerate);
}

TEST_CASE("star multiplication is injective on the octahedron") {
    auto oct = make_cross_polytope(3);
    Rng rng(7);
    auto frame = random_frame<F>(oct, 3, rng);
    auto rep = star_multiplication(oct, frame, 1);
    CHECK(rep.injective_all);
    // lk(v) = C_4, so the star dims follow h(C_4) = (1,2,1)
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].dim_from == 1);
    CHECK(rep.rows[1].dim_from == 2);
    CHECK(rep.rows[1].rank == 2);
    CHECK(rep.rows[2].dim_from == 1);

    // iota(x_tau) = x_sigma is nonzero in top degree
    ArtinianRing<F> ring(oct, frame);
    Face tau = link(oct, Face({1})).facets()[0];
    auto xt = ChowClass<F>::of_monomial(Monomial::of_face(tau));
    auto im = ring.reduce(multiply_by_vertex(oct, xt, 1, F::one()));
    CHECK(!im.is_zero());

    // iota(0) = 0
    CHECK(multiply_by_vertex(oct, ChowClass<F>::zero(1), 1, F::one()).is_zero());
}

TEST_CASE("main identity on polygons") {
    for (int p = 4; p <= 7; ++p) {
        auto cx = make_cycle(p);
        CheckConfig cfg{uint64_t(100 + p), 3, 16};
        auto check =
            check_main_identity<F>(cx, Face({1, 2}), Face({1}), Face({2}), std::nullopt, cfg);
        CHECK(check.passed);
        CHECK(check.kind == "odd");
        for (auto& t : check.trials) CHECK(t.nonzero);
        REQUIRE(check.eta.has_value()); // polygons with p >= 4 have a far vertex
        for (auto& t : check.vanishing_trials) CHECK(t.equal);
    }
}

TEST_CASE("main identity matches the exact polygon identity") {
    // symbolic check of d_{v1}^{v2} Vol(x_{v2}^2) = [v1 v2] Vol(x_{v1} x_{v2})^2 on C_5
    auto c5 = make_cycle(5);
    auto frame = exact_frame(c5, 2);
    auto y = exact_point(2);
    auto [lhs, rhs] = main_identity_once(c5, frame, Face({1, 2}), Face({1}), Face({2}),
                                         std::nullopt, y);
    CHECK(lhs == rhs);
    CHECK(!lhs.is_zero());

    // the same lhs through the symbolic derivative of the volume expression
    VolumeEvaluator<RatFn> vol{&c5, &frame, y};
    RatFn vol_sq = vol.monomial(Monomial::of_vertex(2, 2));
    RatFn sym = exact_derive(vol_sq, 1, 2, 2);
    CHECK(sym == rhs);
}

TEST_CASE("main identity on spheres, both parities") {
    // d = 3 (even-dimensional sphere): apex vertex p
    auto oct = make_cross_polytope(3);
    Face sigma = oct.facets()[0];
    Face gamma({sigma[0]}), tau({sigma[1]});
    std::optional<VertexId> p = sigma[2];
    auto check = check_main_identity<F>(oct, sigma, gamma, tau, p, CheckConfig{77, 3, 16});
    CHECK(check.passed);
    CHECK(check.kind == "even");

    // d = 4: gamma, tau edges partitioning a facet
    auto cx = join(make_cycle(3), make_cycle(3));
    Face sigma4 = cx.facets()[0];
    Face gamma4({sigma4[0], sigma4[1]}), tau4({sigma4[2], sigma4[3]});
    auto check4 =
        check_main_identity<F>(cx, sigma4, gamma4, tau4, std::nullopt, CheckConfig{78, 3, 16});
    CHECK(check4.passed);
    CHECK(check4.kind == "odd");
}

TEST_CASE("general identity reduces to the main identity on x_tau") {
    auto cx = join(make_cycle(3), make_cycle(3));
    Face sigma = cx.facets()[0];
    Face gamma({sigma[0], sigma[1]}), tau({sigma[2], sigma[3]});
    auto u = ChowClass<F>::of_monomial(Monomial::of_face(tau));
    auto gen = check_general_identity<F>(cx, sigma, gamma, tau, std::nullopt, u,
                                         CheckConfig{79, 3, 16});
    CHECK(gen.passed);
    CHECK(gen.note.empty()); // displaced pipeline agrees

    // u = 0: both sides vanish
    auto zero = check_general_identity<F>(cx, sigma, gamma, tau, std::nullopt,
                                          ChowClass<F>::zero(2), CheckConfig{80, 2, 16});
    CHECK(zero.passed);
    for (auto& t : zero.trials) CHECK(!t.nonzero);
}

TEST_CASE("general identity on random classes") {
    auto oct = make_cross_polytope(3);
    Face sigma = oct.facets()[0];
    Face gamma({sigma[0]}), tau({sigma[1]});
    std::optional<VertexId> p = sigma[2];
    Rng rng(81);
    auto ms = monomials_of_degree(oct, 1);
    for (int rep = 0; rep < 5; ++rep) {
        ChowClass<F> u{1, {}};
        for (auto& z : ms) u.add(z, F::random(rng));
        auto gen = check_general_identity<F>(oct, sigma, gamma, tau, p, u,
                                             CheckConfig{uint64_t(90 + rep), 3, 16});
        CHECK(gen.passed);
        CHECK(gen.note.empty());
    }
}

TEST_CASE("anisotropy certificates") {
    auto cx = join(make_cycle(3), make_cycle(3)); // d = 4, e = 2
    Rng rng(91);
    auto ms = monomials_of_degree(cx, 2);
    for (int rep = 0; rep < 5; ++rep) {
        ChowClass<F> u{2, {}};
        for (auto& z : ms) u.add(z, F::random(rng));
        auto cert = certify_anisotropy(cx, u, CheckConfig{uint64_t(100 + rep), 3, 16});
        CHECK(cert.passed);
        for (auto& t : cert.trials) {
            CHECK(t.equal);
            CHECK(t.nonzero);
        }
    }

    // u = x_gamma for half a facet passes via the pairing scan
    Face sigma = cx.facets()[0];
    Face half({sigma[0], sigma[1]});
    auto cert = certify_anisotropy(cx, ChowClass<F>::of_monomial(Monomial::of_face(half)),
                                   CheckConfig{111, 3, 16});
    CHECK(cert.passed);

    // zero class rejected
    CHECK_THROWS_AS(certify_anisotropy(cx, ChowClass<F>::zero(2), CheckConfig{5, 1, 4}),
                    std::invalid_argument);

    // odd-dimensional middle degree on the octahedron (d = 3, e = 1)
    auto oct = make_cross_polytope(3);
    Rng rng2(93);
    auto ms1 = monomials_of_degree(oct, 1);
    for (int rep = 0; rep < 5; ++rep) {
        ChowClass<F> u{1, {}};
        for (auto& z : ms1) u.add(z, F::random(rng2));
        auto c = certify_anisotropy(oct, u, CheckConfig{uint64_t(120 + rep), 3, 16});
        CHECK(c.passed);
        CHECK(c.p.has_value());
    }
}

TEST_CASE("suspension element formulas") {
    // exact coefficients: c_{vj} = a_{v+,0} a_{v,j} + a_{v+,j} a_{v,0} and
    // e_v(ell) = a_{v+,0}^{-1} a_{v,0}
    auto c4 = make_cycle(4);
    auto scx = suspension(c4, 5, 6);
    auto frame_s = exact_frame(scx, 3, 0); // indices 0..2
    auto setup = derive_suspension<RatFn>(c4, scx, 5, 6, frame_s);
    auto a = [&](VertexId v, int j) {
        return RatFn::var("a_" + std::to_string(v) + "_" + std::to_string(j));
    };
    for (VertexId v : c4.vertices()) {
        CHECK(setup.ell.at(v) == a(5, 0).inverse() * a(v, 0));
        for (int j = 1; j <= 2; ++j) {
            CHECK(setup.frame_c.coeff(v, j - 1) ==
                  a(5, 0) * a(v, j) + a(5, j) * a(v, 0));
        }
    }
}

TEST_CASE("suspension profile and star consistency") {
    auto c4 = make_cycle(4);
    Rng rng(131);
    auto setup = make_suspension_setup<F>(c4, rng);

    // dim A^m(S) follows the suspension h-vector
    auto hs = h_vector(setup.scx);
    ArtinianRing<F> ring_s(setup.scx, setup.frame_s);
    for (int m = 0; m < (int)hs.size(); ++m)
        CHECK((long long)ring_s.dim(m) == hs[(std::size_t)m]);

    // lk_{S}(v_+) = base, and the star of v_+ has the base's dimensions
    CHECK(link(setup.scx, Face({setup.v_plus})).facets() == c4.facets());
    SimplicialComplex st = star(setup.scx, Face({setup.v_plus}));
    Frame<F> frame_st;
    frame_st.d = 3;
    for (VertexId w : st.vertices()) frame_st.coords.emplace(w, setup.frame_s.at(w));
    ArtinianRing<F> ring_st(st, frame_st);
    ArtinianRing<F> ring_base(c4, setup.frame_c);
    for (int m = 0; m <= 2; ++m) CHECK(ring_st.dim(m) == ring_base.dim(m));
}

TEST_CASE("weak lefschetz") {
    CheckConfig cfg{141, 3, 16};
    CHECK(weak_lefschetz_check<F>(make_cross_polytope(3), "random", cfg).passed);
    CHECK(weak_lefschetz_check<F>(make_cross_polytope(3), "suspension", cfg).passed);
    CHECK(weak_lefschetz_check<F>(suspend_fresh(make_cycle(5)), "suspension", cfg).passed);

    auto rep = weak_lefschetz_check<F>(make_cross_polytope(3), "random", cfg);
    REQUIRE(!rep.trials.empty());
    CHECK(rep.trials[0][1].rank == 3); // A^1 -> A^2 has full rank 3

    // 1-dimensional chain on the boundary simplex: all ranks 1
    auto bd = weak_lefschetz_check<F>(make_boundary_simplex(5), "random", cfg);
    CHECK(bd.passed);
    for (auto& row : bd.trials[0]) CHECK(row.rank == 1);
}

TEST_CASE("zero element fails weak lefschetz") {
    auto oct = make_cross_polytope(3);
    Rng rng(151);
    ArtinianRing<F> ring(oct, random_frame<F>(oct, 3, rng));
    std::map<VertexId, F> zero_ell;
    for (VertexId v : oct.vertices()) zero_ell[v] = F::zero();
    auto mat = multiplication_matrix(ring, zero_ell, 0);
    CHECK(matrix_rank(mat) == 0); // dim A^0 = 1, so injectivity fails at m = 0
}

TEST_CASE("strong lefschetz") {
    CheckConfig cfg{161, 3, 16};
    CHECK(strong_lefschetz_check<F>(make_cycle(7), "random", cfg).passed);
    CHECK(strong_lefschetz_check<F>(make_cross_polytope(3), "random", cfg).passed);
    CHECK(strong_lefschetz_check<F>(join(make_cycle(3), make_cycle(3)), "random", cfg).passed);

    // C_p, m = 0: Vol(ell^2) != 0 realized as a rank-1 map
    auto rep = strong_lefschetz_check<F>(make_cycle(5), "random", cfg);
    REQUIRE(!rep.trials.empty());
    CHECK(rep.trials[0][0].rank == 1);
    // m = d/2: the empty power is the identity
    CHECK(rep.trials[0][1].rank == rep.trials[0][1].dim_from);
}

TEST_CASE("weak ranks are bounded by both dimensions") {
    CheckConfig cfg{181, 2, 16};
    for (auto name : {"icosahedron", "join:cycle:3,cycle:3", "cross-polytope:4"}) {
        auto rep = weak_lefschetz_check<F>(make_builtin(name), "random", cfg);
        for (auto& rows : rep.trials)
            for (auto& row : rows) {
                CHECK(row.rank <= row.dim_from);
                CHECK(row.rank <= row.dim_to);
            }
    }
}

TEST_CASE("strong lefschetz via the anisotropy pattern") {
    // nonzero a of degree m: Vol((ell^{d/2-m} a)^2) != 0 iff ell^{d-2m} a != 0
    auto cx = make_cross_polytope(4); // d = 4
    Rng rng(191);
    auto frame = random_frame<F>(cx, 4, rng);
    ArtinianRing<F> ring(cx, frame);
    auto ell = random_element<F>(cx, rng);
    auto y = random_point<F>(4, rng);
    VolumeEvaluator<F> vol{&cx, &frame, y};
    for (int m = 0; m <= 1; ++m) {
        for (int rep = 0; rep < 10; ++rep) {
            auto a = ring.random_class(m, [&] { return F::random(rng); });
            if (ring.reduce(a).is_zero()) continue;
            ChowClass<F> half = a;
            for (int s = 0; s < 2 - m; ++s)
                half = ring.reduce(multiply_by_form(cx, half, ell));
            F q = vol.cls(multiply(cx, half, half));
            ChowClass<F> full = a;
            for (int s = 0; s < 4 - 2 * m; ++s)
                full = ring.reduce(multiply_by_form(cx, full, ell));
            CHECK(q.is_zero() == full.is_zero());
        }
    }
}

TEST_CASE("exact identity specializes to the dual-lift value") {
    // same assignment: symbolic derivative of Vol(x_2^2) on C_4 vs derive_eval
    auto c4 = make_cycle(4);
    auto frame_x = exact_frame(c4, 2);
    VolumeEvaluator<RatFn> vol{&c4, &frame_x, exact_point(2)};
    RatFn sym = exact_derive(vol.monomial(Monomial::of_vertex(2, 2)), 1, 2, 2);

    Rng rng(193);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<F> asg(VarTable::count());
        for (auto& x : asg) x = F::random(rng);
        Frame<F> fr;
        fr.d = 2;
        for (VertexId v : c4.vertices()) {
            std::vector<F> col;
            for (int j = 1; j <= 2; ++j)
                col.push_back(
                    asg[VarTable::id_of("a_" + std::to_string(v) + "_" + std::to_string(j))]);
            fr.coords.emplace(v, col);
        }
        try {
            F expected = sym.specialize<F>(asg);
            auto yv = random_point<F>(2, rng);
            F got = derive_eval(fr, {{1, 2}}, [&](const Frame<MultiDual<F>>& lf) {
                VolumeEvaluator<MultiDual<F>> dv{&c4, &lf,
                                                 lift_constants(std::span<const F>(yv))};
                return dv.monomial(Monomial::of_vertex(2, 2));
            });
            CHECK(got == expected);
        } catch (const resample_needed&) {
            continue;
        }
    }
}

TEST_CASE("larger spheres smoke") {
    // 4-sphere boundary of the 5-dimensional cross-polytope: d = 5
    auto cx = make_cross_polytope(5);
    auto h = h_vector(cx);
    CHECK(h == std::vector<long long>{1, 5, 10, 10, 5, 1});
    Rng rng(201);
    ArtinianRing<F> ring(cx, random_frame<F>(cx, 5, rng));
    for (int m = 0; m <= 5; ++m) CHECK((long long)ring.dim(m) == h[(std::size_t)m]);

    CheckConfig cfg{203, 2, 16};
    CHECK(weak_lefschetz_check<F>(cx, "random", cfg).passed);

    // main identity with the leftover vertex (d odd)
    Face sigma = cx.facets()[0];
    Face gamma({sigma[0], sigma[1]}), tau({sigma[2], sigma[3]});
    auto check = check_main_identity<F>(cx, sigma, gamma, tau, sigma[4], cfg);
    CHECK(check.passed);
    CHECK(check.kind == "even");

    // one anisotropy certificate in middle degree e = 2
    auto ms = monomials_of_degree(cx, 2);
    ChowClass<F> u{2, {}};
    for (auto& z : ms) u.add(z, F::random(rng));
    CHECK(certify_anisotropy(cx, u, cfg).passed);

    CHECK(g_report<F>(make_boundary_simplex(6), cfg).passed);
}

TEST_CASE("g_report") {
    CheckConfig cfg{171, 2, 16};
    auto g = g_report<F>(make_icosahedron(), cfg);
    CHECK(g.h == std::vector<long long>{1, 9, 9, 1});
    CHECK(g.unimodal);
    CHECK(g.passed);

    auto g2 = g_report<F>(join(make_cycle(3), make_cycle(3)), cfg);
    CHECK(g2.h == std::vector<long long>{1, 2, 3, 2, 1});
    CHECK(g2.passed);

    for (int p = 3; p <= 6; ++p) CHECK(g_report<F>(make_cycle(p), cfg).passed);
}
