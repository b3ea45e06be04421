#include <catch2/catch_amalgamated.hpp>

#include "k3/fixtures.hpp"
#include "k3/gram.hpp"
#include "k3/matrix.hpp"
#include "k3/recognize.hpp"
#include "k3/smith.hpp"

using namespace k3;

namespace {
Mat diag(std::vector<long> d) {
    Mat m(d.size(), std::vector<Int>(d.size(), 0));
    for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}
}  // namespace

TEST_CASE("smith normal form basics") {
    Mat m = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    auto s = smith_normal_form(m);
    CHECK(s.D[0][0] == 2);
    CHECK(s.D[1][1] == 2);
    CHECK(s.D[2][2] == 156);
    CHECK(mat_mul(mat_mul(s.U, m), s.V) == s.D);
}

TEST_CASE("smith normal form of the reference grams") {
    CHECK(elementary_divisors(fixtures::gram_B1()) == std::vector<Int>{2, 4});
    CHECK(elementary_divisors(fixtures::gram_B2()) == std::vector<Int>{6});
    CHECK(elementary_divisors(fixtures::gram_B3()) == std::vector<Int>{2, 2});
    CHECK(elementary_divisors(fixtures::gram_B3_dual()) == std::vector<Int>{2, 2});
}

TEST_CASE("determinants and signatures") {
    CHECK(determinant(fixtures::gram_B2()) == 6);
    CHECK(determinant(fixtures::gram_B3_dual()) == -4);

    CHECK(signature_of(fixtures::gram_B1()) == std::pair<size_t, size_t>{1, 3});
    CHECK(signature_of(fixtures::gram_B2()) == std::pair<size_t, size_t>{1, 6});
    CHECK(signature_of(fixtures::gram_B3()) == std::pair<size_t, size_t>{1, 1});
    CHECK(signature_of(fixtures::gram_B3_dual()) == std::pair<size_t, size_t>{1, 17});
    CHECK(signature_of(gram_E8) == std::pair<size_t, size_t>{0, 8});
    CHECK(signature_of(gram_U) == std::pair<size_t, size_t>{1, 1});
}

TEST_CASE("published congruence transforms") {
    // P1: B1 -> U + <-2> + <-4>
    Mat t1 = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -4}};
    CHECK(verify_congruence(fixtures::transform_P1(), fixtures::gram_B1(), t1));
    // P2: B2 -> U + A5
    Mat t2 = direct_sum(gram_U, gram_An(5));
    CHECK(verify_congruence(fixtures::transform_P2(), fixtures::gram_B2(), t2));
    // P3: B3 -> <-2> + <2>
    CHECK(verify_congruence(fixtures::transform_P3(), fixtures::gram_B3(), diag({-2, 2})));
    // a wrong transform is rejected
    CHECK_FALSE(verify_congruence(fixtures::transform_P3(), fixtures::gram_B3(), diag({2, -2})));
}

TEST_CASE("discriminant forms of the reference grams") {
    auto d1 = disc_form(fixtures::gram_B1());
    CHECK(d1.orders == std::vector<Int>{2, 4});
    CHECK(d1.q == std::vector<Rat>{Rat(3, 2), Rat(7, 4)});

    auto d2 = disc_form(fixtures::gram_B2());
    CHECK(d2.orders == std::vector<Int>{6});
    CHECK(d2.q == std::vector<Rat>{Rat(7, 6)});

    auto d3 = disc_form(fixtures::gram_B3());
    CHECK(d3.orders == std::vector<Int>{2, 2});
    CHECK(d3.q == std::vector<Rat>{Rat(3, 2), Rat(1, 2)});

    auto db = disc_form(fixtures::gram_B3_dual());
    CHECK(db.orders == std::vector<Int>{2, 2});
    CHECK(db.q == std::vector<Rat>{Rat(1, 2), Rat(3, 2)});
}

TEST_CASE("unimodular lattices have trivial discriminant group") {
    CHECK(disc_form(gram_U).orders.empty());
    CHECK(disc_form(gram_E8).orders.empty());
}

TEST_CASE("anti-isometry of discriminant forms") {
    CHECK(anti_isometric(disc_form(fixtures::gram_B3()),
                         disc_form(direct_sum(gram_U, fixtures::gram_B3_dual()))));
    CHECK(anti_isometric(disc_form(diag({2})), disc_form(direct_sum(gram_U, diag({-2})))));
    CHECK_FALSE(anti_isometric(disc_form(diag({2})), disc_form(diag({2}))));
    CHECK(isometric_disc(disc_form(diag({2})), disc_form(diag({2}))));
    // groups of different shape are never (anti-)isometric
    CHECK_FALSE(anti_isometric(disc_form(diag({2})), disc_form(diag({-2, 2}))));
}

TEST_CASE("full invariants") {
    auto inv = invariants(fixtures::gram_B1());
    CHECK(inv.rank == 4);
    CHECK(inv.signature == std::pair<size_t, size_t>{1, 3});
    CHECK(inv.determinant == determinant(fixtures::gram_B1()));
    CHECK(inv.disc.orders == std::vector<Int>{2, 4});
    CHECK_THROWS_AS(invariants(Mat{{1, 1}, {1, 1}}), Degenerate);
}

TEST_CASE("duality check for the third polytope pair") {
    auto rep = check_duality(fixtures::gram_B3(), fixtures::gram_B3_dual());
    CHECK(rep.rank_s == 2);
    CHECK(rep.rank_t_ext == 20);
    CHECK(rep.rank_ok);
    CHECK(rep.signature_ok);
    CHECK(rep.disc_ok);
    CHECK(rep.all_ok());
}

TEST_CASE("duality check fails at rank stage for the first pair") {
    // rank 4 + (2 + 17) = 23 != 22
    Mat t17 = direct_sum(direct_sum(gram_U, gram_E8), diag({-2, -2, -2, -2, -2, -2, -2}));
    REQUIRE(rows(t17) == 17);
    auto rep = check_duality(fixtures::gram_B1(), t17);
    CHECK_FALSE(rep.rank_ok);
    CHECK_FALSE(rep.all_ok());
}

TEST_CASE("find_congruence on small pairs") {
    auto p = find_congruence(fixtures::gram_B3(), diag({-2, 2}), 2);
    REQUIRE(p.has_value());
    CHECK(verify_congruence(*p, fixtures::gram_B3(), diag({-2, 2})));
    // non-congruent pair: different determinant
    CHECK_FALSE(find_congruence(diag({2}), diag({4}), 4).has_value());
    // different signature, same determinant
    CHECK_FALSE(find_congruence(diag({2, -2}), diag({2, 2}), 4).has_value());
}

TEST_CASE("recognition of the reference grams") {
    auto r1 = recognize(fixtures::gram_B1());
    CHECK(r1.name == "U + <-2> + <-4>");
    CHECK(r1.level == MatchLevel::VerifiedIsometric);

    auto r2 = recognize(fixtures::gram_B2());
    CHECK(r2.name == "U + A5");
    CHECK(r2.level == MatchLevel::VerifiedIsometric);

    auto r3 = recognize(fixtures::gram_B3());
    CHECK(r3.name == "<-2> + <2>");
    CHECK(r3.level == MatchLevel::VerifiedIsometric);
}

TEST_CASE("recognition of catalog members presented in scrambled bases") {
    // A2 in a funny basis: P A2 P^T with P = [[1,1],[0,1]]
    Mat p = {{1, 1}, {0, 1}};
    Mat scr = mat_mul(mat_mul(p, gram_An(2)), transpose(p));
    auto r = recognize(scr);
    CHECK(r.name == "A2");
    CHECK(r.level == MatchLevel::VerifiedIsometric);

    auto ru = recognize(gram_U);
    CHECK(ru.name == "U");
    CHECK(ru.level == MatchLevel::VerifiedIsometric);

    auto re = recognize(gram_E6);
    CHECK(re.name == "E6");
}

TEST_CASE("recognition reports unknown for exotic input") {
    auto r = recognize(diag({34}));
    CHECK(r.level == MatchLevel::Unknown);
}

TEST_CASE("detecting a hyperbolic-plane summand") {
    CHECK(detect_U_summand(fixtures::gram_B1()));
    CHECK(detect_U_summand(fixtures::gram_B2()));
    CHECK_FALSE(detect_U_summand(fixtures::gram_B3()));
    CHECK_FALSE(detect_U_summand(gram_E8));
    CHECK(detect_U_summand(gram_U));
}

TEST_CASE("characteristic polynomial sanity") {
    // char poly of diag(2,-3): x^2 + x - 6
    auto cp = char_poly(diag({2, -3}));
    CHECK(cp == std::vector<Int>{1, 1, -6});
}
