#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "liecoh/sayd.hpp"
#include "liecoh/weil.hpp"
#include "liecoh/workspace.hpp"

using namespace liecoh;

static SaydModule random_pair(std::mt19937_64& rng, int n, int m) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<Mat> B, A;
    for (int j = 0; j < n; ++j) {
        Mat b(m, m), a(m, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                b(r, c) = Rat(coef(rng));
                a(r, c) = Rat(coef(rng));
            }
        B.push_back(b);
        A.push_back(a);
    }
    return {make_action(n, m, B), make_coaction(n, m, A)};
}

TEST_CASE("the 2-dim simple module follows the row convention") {
    LieAlgebra g = sl2();
    SaydModule mod = simple2_module();
    CHECK(check_module(g, mod.action).ok);
    // transposing the matrices gives an anti-action, not an action
    std::vector<Mat> t;
    for (const Mat& b : mod.action.B) t.push_back(b.transpose());
    ModuleReport rep = check_module(g, make_action(3, 2, t));
    CHECK_FALSE(rep.ok);
    CHECK(rep.p >= 0);
    CHECK_FALSE(rep.defect.is_zero());
}

TEST_CASE("comodule check catches non-commuting and non-conilpotent data") {
    Mat e01(2, 2), e00(2, 2);
    e01(0, 1) = Rat(1);
    e00(0, 0) = Rat(1);
    ComoduleReport bad = check_comodule(make_coaction(2, 2, {e01, e00}));
    CHECK_FALSE(bad.commuting);
    CHECK(bad.j1 == 0);
    CHECK(bad.j2 == 1);

    ComoduleReport ident = check_comodule(make_coaction(1, 2, {Mat::identity(2)}));
    CHECK(ident.commuting);
    CHECK_FALSE(ident.conilpotent);

    // a commuting strictly triangular pair is conilpotent with index 3
    Mat j1(3, 3);
    j1(0, 1) = Rat(1);
    j1(1, 2) = Rat(1);
    Mat j2 = j1 * j1;
    ComoduleReport tri = check_comodule(make_coaction(2, 3, {j1, j2}));
    CHECK(tri.commuting);
    CHECK(tri.conilpotent);
    CHECK(tri.conilpotency_index == 3);
}

TEST_CASE("conilpotency index of the capped symmetric coaction") {
    TruncatedWeil w = build_truncated_weil(sl2(), 2);
    ComoduleReport rep = check_comodule(w.mod.coaction);
    CHECK(rep.commuting);
    CHECK(rep.conilpotent);
    CHECK(rep.conilpotency_index == 3);  // products of length 3 kill the cap-2 space
}

TEST_CASE("capped symmetric module over sl2 is SAYD both ways") {
    TruncatedWeil w = build_truncated_weil(sl2(), 1);
    CHECK(check_module(sl2(), w.mod.action).ok);
    SaydReport rep = check_sayd(sl2(), w.mod);
    CHECK(rep.ayd);
    CHECK(rep.stable);
    CHECK(rep.unimodular_stable);
    CHECK(is_sayd(sl2(), w.mod));
}

TEST_CASE("capped symmetric module over a non-unimodular algebra is only unimodular stable") {
    LieAlgebra g = *builtin_lie("r2");
    TruncatedWeil w = build_truncated_weil(g, 1);
    SaydReport rep = check_sayd(g, w.mod);
    CHECK(rep.ayd);
    CHECK_FALSE(rep.stable);
    CHECK(rep.unimodular_stable);
    CHECK_FALSE(rep.stability_defect.is_zero());
}

TEST_CASE("character twist exchanges the two stability conditions under AYD") {
    // for any (B, A): AYD && unimodular-stable  <=>  AYD && stable after the
    // +delta twist; checked on random pairs over a non-unimodular algebra
    LieAlgebra g = *builtin_lie("r2");
    std::mt19937_64 rng(77);
    int both = 0;
    for (int trial = 0; trial < 60; ++trial) {
        SaydModule m = random_pair(rng, 2, 2);
        SaydReport orig = check_sayd(g, m);
        SaydModule t{delta_twist(g, m.action, +1), m.coaction};
        SaydReport tw = check_sayd(g, t);
        bool lhs = orig.ayd && orig.unimodular_stable;
        bool rhs = tw.ayd && tw.stable;
        CHECK(lhs == rhs);
        if (lhs) ++both;
    }
    // and on an actual SAYD instance where both sides are true
    TruncatedWeil w = build_truncated_weil(g, 1);
    SaydModule t{delta_twist(g, w.mod.action, +1), w.mod.coaction};
    SaydReport tw = check_sayd(g, t);
    CHECK(tw.ayd);
    CHECK(tw.stable);
    (void)both;
}

TEST_CASE("AYD data is exactly a module over the semidirect double") {
    // route one: module law over g~ = g* x| g for the 2n matrices (A, B);
    // route two: module law for B + commuting A + the AYD relation
    std::mt19937_64 rng(78);
    for (const char* name : {"sl2", "r2", "heisenberg3"}) {
        LieAlgebra g = *builtin_lie(name);
        LieAlgebra d = semidirect_double(g);
        for (int trial = 0; trial < 25; ++trial) {
            SaydModule m = random_pair(rng, g.dim(), 2);
            std::vector<Mat> big = m.coaction.A;
            for (const Mat& b : m.action.B) big.push_back(b);
            bool route1 = check_module(d, make_action(2 * g.dim(), 2, big)).ok;
            SaydReport rep = check_sayd(g, m);
            bool route2 = check_module(g, m.action).ok && check_comodule(m.coaction).commuting && rep.ayd;
            CHECK(route1 == route2);
        }
        // a known positive instance keeps the equivalence from passing vacuously
        TruncatedWeil w = build_truncated_weil(g, 1);
        std::vector<Mat> big = w.mod.coaction.A;
        for (const Mat& b : w.mod.action.B) big.push_back(b);
        CHECK(check_module(d, make_action(2 * g.dim(), w.mod.action.m, big)).ok);
    }
}

TEST_CASE("linear SAYD solver dimensions") {
    SolveReport none = solve_ayd_linear(sl2(), simple2_module().action);
    CHECK(none.dim == 0);
    CHECK(none.basis.empty());

    TruncatedWeil w = build_truncated_weil(sl2(), 1);
    SolveReport two = solve_ayd_linear(sl2(), w.mod.action);
    CHECK(two.dim == 2);
    REQUIRE(two.basis.size() == 2);
    for (const CoactionMatrices& co : two.basis) {
        SaydModule m{w.mod.action, co};
        SaydReport rep = check_sayd(sl2(), m);
        CHECK(rep.ayd);
        CHECK(rep.stable);
    }
    CHECK_FALSE(two.quadratic.identically_commutative);
    CHECK(two.quadratic.symbolic);
}

TEST_CASE("tensor of AYD pairs is AYD") {
    LieAlgebra g = sl2();
    TruncatedWeil w = build_truncated_weil(g, 1);
    SaydModule prod = tensor_ayd(w.mod, w.mod);
    CHECK(prod.action.m == 16);
    CHECK(check_module(g, prod.action).ok);
    SaydReport rep = check_sayd(g, prod);
    CHECK(rep.ayd);

    SaydModule with_trivial = tensor_ayd(w.mod, simple2_module());
    CHECK(check_sayd(g, with_trivial).ayd);
}

TEST_CASE("SAYD verdicts transport along a basis change") {
    LieAlgebra g = sl2();
    Mat gamma(3, 3);
    gamma(0, 0) = Rat(1);
    gamma(0, 2) = Rat(1);
    gamma(1, 1) = Rat(2);
    gamma(2, 1) = Rat(-1);
    gamma(2, 2) = Rat(1);
    LieAlgebra h = change_basis(g, gamma);
    REQUIRE(validate_lie_algebra(h).ok);

    TruncatedWeil w = build_truncated_weil(g, 1);
    SaydModule moved = change_basis(w.mod, gamma);
    CHECK(is_sayd(h, moved));
    SaydReport rep = check_sayd(h, moved);
    CHECK(rep.unimodular_stable);
}

TEST_CASE("twist statement matches delta_twist") {
    LieAlgebra g = *builtin_lie("r2");
    ActionMatrices tw = delta_twist(g, trivial_action(2, 1), -1);
    CHECK(tw.B[0](0, 0) == Rat(-1));
    CHECK(tw.B[1](0, 0) == Rat(0));
    CHECK_THROWS_AS(delta_twist(g, trivial_action(2, 1), 0), std::invalid_argument);
}
