// Randomized property tests (fixed seeds, fully deterministic).

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "k3/curve.hpp"
#include "k3/fixtures.hpp"
#include "k3/gram.hpp"
#include "k3/polytope.hpp"
#include "k3/recognize.hpp"
#include "k3/smith.hpp"
#include "k3/toric.hpp"

using namespace k3;

namespace {

// Random unimodular n x n matrix: product of elementary shears and
// signed permutations.
Mat random_unimodular(std::mt19937& rng, size_t n, int steps = 12) {
    Mat m = identity(n);
    std::uniform_int_distribution<size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        size_t i = idx(rng), j = idx(rng);
        if (i == j) {
            for (size_t k = 0; k < n; ++k) m[i][k] = -m[i][k];
            continue;
        }
        Int c = coef(rng);
        for (size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
    }
    return m;
}

// Random even symmetric matrix (even diagonal). The discriminant quadratic
// form q is only well defined mod 2Z on even lattices, so congruence
// invariance of the disc form is stated for those.
Mat random_even_symmetric(std::mt19937& rng, size_t n, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            m[i][j] = (i == j) ? Int(2 * d(rng)) : Int(d(rng));
            m[j][i] = m[i][j];
        }
    return m;
}

Polytope transform_polytope(const Polytope& p, const Mat& t) {
    std::vector<LatticePoint> verts;
    for (const auto& v : p.vertices) {
        std::vector<Int> vc(v.coords.begin(), v.coords.end());
        auto w = mat_vec(t, vc);
        verts.push_back(LatticePoint(w[0], w[1], w[2]));
    }
    return Polytope::hull(verts);
}

}  // namespace

TEST_CASE("Smith normal form properties on random matrices") {
    std::mt19937 rng(20260826);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<size_t> size(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        size_t r = size(rng), c = size(rng);
        Mat m(r, std::vector<Int>(c));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        auto s = smith_normal_form(m);
        // transforms are unimodular and U m V = D
        Int du = determinant(s.U), dv = determinant(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        CHECK(mat_mul(mat_mul(s.U, m), s.V) == s.D);
        // D diagonal, nonnegative, divisibility chain
        std::vector<Int> diag;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) {
                if (i == j)
                    diag.push_back(s.D[i][j]);
                else
                    CHECK(s.D[i][j] == 0);
            }
        for (const auto& d : diag) CHECK(d >= 0);
        for (size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
}

TEST_CASE("lattice invariants are congruence invariants") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<size_t> size(1, 5);
        size_t n = size(rng);
        Mat g = random_even_symmetric(rng, n);
        if (determinant(g) == 0) continue;
        Mat p = random_unimodular(rng, n);
        Mat h = mat_mul(mat_mul(transpose(p), g), p);
        auto ig = invariants(g);
        auto ih = invariants(h);
        CHECK(ig.rank == ih.rank);
        CHECK(ig.signature == ih.signature);
        CHECK(abs(ig.determinant) == abs(ih.determinant));
        CHECK(ig.disc.orders == ih.disc.orders);
        // the isomorphism search is exhaustive; keep it to small groups
        Int order = 1;
        for (const auto& o : ig.disc.orders) order *= o;
        if (order <= 8) CHECK(isometric_disc(ig.disc, ih.disc));
    }
}

TEST_CASE("find_congruence recovers scrambled catalog lattices") {
    std::mt19937 rng(99);
    std::vector<Mat> catalog = {gram_U, gram_An(3), gram_rank1(-2),
                                direct_sum(gram_U, gram_rank1(-4))};
    for (const auto& g : catalog) {
        // keep the scramble gentle: the searcher enumerates a bounded box
        Mat p = random_unimodular(rng, g.size(), 4);
        Mat h = mat_mul(mat_mul(transpose(p), g), p);
        auto q = find_congruence(h, g, 3);
        REQUIRE(q.has_value());
        CHECK(verify_congruence(*q, h, g));
    }
}

TEST_CASE("polar duality is an involution on reflexive polytopes") {
    std::mt19937 rng(424242);
    std::vector<Polytope> base = {fixtures::delta1(), fixtures::delta2(), fixtures::delta3()};
    // octahedron and cube
    base.push_back(Polytope::hull({LatticePoint(1, 0, 0), LatticePoint(-1, 0, 0),
                                   LatticePoint(0, 1, 0), LatticePoint(0, -1, 0),
                                   LatticePoint(0, 0, 1), LatticePoint(0, 0, -1)}));
    {
        std::vector<LatticePoint> cube;
        for (int a : {-1, 1})
            for (int b : {-1, 1})
                for (int c : {-1, 1}) cube.push_back(LatticePoint(a, b, c));
        base.push_back(Polytope::hull(cube));
    }
    for (const auto& p0 : base) {
        for (int trial = 0; trial < 4; ++trial) {
            Mat t = random_unimodular(rng, 3);
            Polytope p = transform_polytope(p0, t);
            REQUIRE(is_reflexive(p));
            auto d = polar_dual(p);
            REQUIRE(d.integral);
            REQUIRE(d.polytope.has_value());
            CHECK(is_reflexive(*d.polytope));
            auto dd = polar_dual(*d.polytope);
            REQUIRE(dd.integral);
            CHECK(dd.polytope->same_vertex_set(p));
            // lattice point count is a unimodular invariant
            CHECK(p.lattice_points().size() == p0.lattice_points().size());
        }
    }
}

TEST_CASE("toric Picard data is invariant under unimodular transforms") {
    std::mt19937 rng(31337);
    std::vector<Polytope> base = {fixtures::delta1(), fixtures::delta2(), fixtures::delta3()};
    for (const auto& p0 : base) {
        Int r0 = rank_L0(p0);
        Int rho0 = picard_rank(p0);
        auto inv0 = invariants(picard_gram(build_intersection_graph(p0), p0).gram);
        for (int trial = 0; trial < 3; ++trial) {
            Mat t = random_unimodular(rng, 3);
            Polytope p = transform_polytope(p0, t);
            CHECK(rank_L0(p) == r0);
            CHECK(picard_rank(p) == rho0);
            auto inv = invariants(picard_gram(build_intersection_graph(p), p).gram);
            CHECK(inv.rank == inv0.rank);
            CHECK(inv.signature == inv0.signature);
            CHECK(abs(inv.determinant) == abs(inv0.determinant));
            CHECK(isometric_disc(inv.disc, inv0.disc));
        }
    }
}

TEST_CASE("discriminant quadratic values do not depend on the coset lift") {
    // q on the discriminant group is well defined mod 2Z: shifting a
    // generator tuple by the group order leaves qval unchanged.
    Mat g = fixtures::gram_B1();
    auto d = disc_form(g);
    auto elems = detail::group_elements(d.orders);
    for (const auto& e : elems) {
        auto shifted = e;
        for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += d.orders[i];
        CHECK(detail::qval(e, d) == detail::qval(shifted, d));
    }
}

TEST_CASE("Milnor numbers of A_n plane-sextic normal forms") {
    // X^2 Z^4 + Y^{n+1} Z^{5-n} has an A_n point at (0:0:1) for n <= 5.
    for (int n = 1; n <= 5; ++n) {
        HomPoly f;
        f.degree = 6;
        f.terms[{2, 0, 4}] = 1;
        f.terms[{0, n + 1, 5 - n}] = 1;
        auto rep = classify_ade(f, ProjPoint::make(0, 0, 1));
        CHECK(rep.milnor == n);
        CHECK(rep.ade_type == "A" + std::to_string(n));
    }
    // the maximal A_17 arises on an irreducible torus sextic
    const auto fx = fixtures::curve_fixtures();
    auto it = std::find_if(fx.begin(), fx.end(), [](const auto& c) { return c.name == "A17"; });
    REQUIRE(it != fx.end());
    auto f2 = to_hom_poly(substitute_params(parse_poly(fixtures::f2_standard()), {}), 2);
    std::map<std::string, Rat> params;
    for (auto& [k, v] : it->params) params[k] = Rat(v);
    auto f3 = to_hom_poly(substitute_params(parse_poly(it->f3), params), 3);
    auto rep = classify_ade(expand_torus(f2, f3), ProjPoint::make(0, 0, 1));
    CHECK(rep.milnor == 17);
    CHECK(rep.ade_type == "A17");
}

TEST_CASE("ADE classification is invariant under projective coordinate changes") {
    std::mt19937 rng(555);
    auto f2 = to_hom_poly(substitute_params(parse_poly(fixtures::f2_standard()), {}), 2);
    const auto fx = fixtures::curve_fixtures();
    auto it = std::find_if(fx.begin(), fx.end(), [](const auto& c) { return c.name == "2A2+A11"; });
    REQUIRE(it != fx.end());
    std::map<std::string, Rat> params;
    for (auto& [k, v] : it->params) params[k] = Rat(v);
    auto f = expand_torus(f2, to_hom_poly(substitute_params(parse_poly(it->f3), params), 3));

    auto base_points = rational_singular_points(f);
    std::multiset<std::string> base_types;
    for (const auto& p : base_points) base_types.insert(classify_ade(f, p).ade_type);
    REQUIRE(base_types == std::multiset<std::string>({"A11", "A2", "A2"}));

    for (int trial = 0; trial < 3; ++trial) {
        Mat t = random_unimodular(rng, 3);
        // substitute X_i -> sum_j t[j][i] X_j
        HomPoly g;
        g.degree = f.degree;
        for (const auto& [e, c] : f.terms) {
            HomPoly term;
            term.degree = 0;
            term.terms[{0, 0, 0}] = c;
            for (int v = 0; v < 3; ++v) {
                HomPoly lin;
                lin.degree = 1;
                for (int j = 0; j < 3; ++j) {
                    if (t[j][v] != 0) lin.terms[{j == 0, j == 1, j == 2}] = Rat(t[j][v]);
                }
                term = hom_mul(term, hom_pow(lin, e[v]));
            }
            g = hom_add(g, term);
        }
        // g(x) = f(T^t x); singular points transport via x = (T^t)^{-1} p
        RatMat tti = rat_inverse(transpose(t));
        std::multiset<std::string> types;
        for (const auto& p : base_points) {
            std::array<Rat, 3> q{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) q[i] += tti[i][j] * p.coords[j];
            auto pp = ProjPoint::make(q[0], q[1], q[2]);
            CHECK(verify_singular(g, pp));
            types.insert(classify_ade(g, pp).ade_type);
        }
        CHECK(types == base_types);
    }
}

TEST_CASE("torus-type expansion agrees with direct polynomial arithmetic") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        HomPoly f2, f3;
        f2.degree = 2;
        f3.degree = 3;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; a + b <= 2; ++b) f2.terms[{a, b, 2 - a - b}] = coef(rng);
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b) f3.terms[{a, b, 3 - a - b}] = coef(rng);
        std::erase_if(f2.terms, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(f3.terms, [](const auto& kv) { return kv.second == 0; });
        auto lhs = expand_torus(f2, f3);
        auto rhs = hom_add(hom_pow(f2, 3), hom_pow(f3, 2));
        CHECK(lhs == rhs);
    }
}
