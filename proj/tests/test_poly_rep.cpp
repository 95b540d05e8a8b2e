#include <doctest.h>

#include "support.hpp"

using namespace sphkl;
using testing::e;
using testing::L;
using testing::session;

TEST_SUITE("poly_rep")
{
    TEST_CASE("Hecke operators")
    {
        const auto& s = session("gl2");
        const auto& R = s.rep();
        CHECK(R.hecke_act(0, e({0, 0})) == e({0, 0}, L(s, "v^-1")));
        CHECK(R.hecke_act(0, e({1, 0})) == e({0, 1}, L(s, "v^-1")) + e({1, 0}, L(s, "v^-1 - v")));
        const auto& sp2 = session("sp2");
        CHECK(sp2.rep().hecke_act(0, e({1})) ==
              e({-1}, L(sp2, "v^-1")) + e({1}, L(sp2, "v^-1 - v")) + e({0}, L(sp2, "v0^-1 - v0")));
    }

    TEST_CASE("operators satisfy the quadratic relation")
    {
        const auto& s = session("sp4");
        const auto& R = s.rep();
        for (int i = 0; i < 2; ++i) {
            LaurentPoly q = LaurentPoly(s.params().node(i).inverse()) - LaurentPoly(s.params().node(i));
            for (const Coweight& tau : {Coweight{2, -1}, Coweight{0, 3}, Coweight{-1, -1}}) {
                ExpPoly h = R.hecke_act(i, e(tau));
                CHECK(R.hecke_act(i, h) == e(tau) + scale(q, h));
            }
        }
    }

    TEST_CASE("Demazure operators")
    {
        const auto& gl2 = session("gl2");
        CHECK(gl2.rep().demazure(0, e({0, 0})) == e({0, 0}));
        CHECK(gl2.rep().demazure(0, e({1, 0})) == e({1, 0}) + e({0, 1}));
        CHECK(gl2.rep().demazure(0, e({0, 1})).empty());
        CHECK(gl2.rep().demazure(0, e({0, 2})) == e({1, 1}, -1));
        const auto& sp2 = session("sp2");
        CHECK(sp2.rep().demazure(0, e({1})) == e({1}) + e({-1}));
    }

    TEST_CASE("characters")
    {
        const auto& gl2 = session("gl2");
        CHECK(gl2.rep().schur({0, 0}) == e({0, 0}));
        CHECK(gl2.rep().schur({1, 0}) == e({1, 0}) + e({0, 1}));
        CHECK(gl2.rep().schur({2, 0}) == e({2, 0}) + e({1, 1}) + e({0, 2}));
        const auto& sp2 = session("sp2");
        CHECK(sp2.rep().schur({1}) == e({1}) + e({-1}));
        CHECK(sp2.rep().schur({2}) == e({2}) + e({0}) + e({-2}));
        const auto& gl3 = session("gl3");
        CHECK(gl3.rep().schur({1, 0, -1}).at({0, 0, 0}) == 2);
        CHECK(gl3.rep().demazure_char({0, 1, 0}) == e({1, 0, 0}) + e({0, 1, 0}));
    }

    TEST_CASE("p basis")
    {
        const auto& gl2 = session("gl2");
        CHECK(gl2.rep().p_basis({1, 0}) == e({1, 0}, L(gl2, "v")));
        CHECK(gl2.rep().p_basis({0, 1}) == e({0, 1}) + e({1, 0}, L(gl2, "1 - v^2")));
        const auto& sp2 = session("sp2");
        CHECK(sp2.rep().p_basis({-1}) == e({-1}) + e({1}, L(sp2, "1 - v^2")) + e({0}, L(sp2, "v*v0^-1 - v*v0")));
    }

    TEST_CASE("Hall-Littlewood polynomials")
    {
        const auto& gl2 = session("gl2");
        const auto& R = gl2.rep();
        CHECK(R.hall_littlewood({1, 0}) == R.schur({1, 0}));
        CHECK(R.format_expansion(R.expand_in_schur(R.hall_littlewood({2, 0})), "s") == "s[2,0] - v^2 s[1,1]");
        CHECK(R.format_expansion(R.expand_in_schur(R.hall_littlewood({1, -1})), "s") == "s[1,-1] - v^2 s[0,0]");
        const auto& sp2 = session("sp2");
        CHECK(sp2.rep().format_expansion(sp2.rep().expand_in_schur(sp2.rep().hall_littlewood({1})), "s") ==
              "s[1] + (-v*v0 + v*v0^-1) s[0]");
        // Inverse expansion.
        auto back = R.expand_in_hall_littlewood(R.schur({2, 0}));
        CHECK(back.at({2, 0}) == 1);
        CHECK(back.at({1, 1}) == L(gl2, "v^2"));
    }

    TEST_CASE("invariance")
    {
        const auto& s = session("g2");
        CHECK(s.rep().is_invariant(s.rep().schur({1, 0})));
        CHECK_FALSE(s.rep().is_invariant(e({1, 0})));
        CHECK(s.rep().orbit({1, 0}).size() == 6);
        CHECK(s.rep().orbit({0, 0}).size() == 1);
    }

    TEST_CASE("unitriangular expansion")
    {
        const auto& gl2 = session("gl2");
        auto doubled = [](const Coweight& mu) { return e(mu, 2); };
        CHECK_THROWS_AS(expand_unitriangular(e({0, 0}), gl2.datum(), doubled, "b"), TheoremViolation);
        CHECK_THROWS_AS(divide_one_minus(e({1, 0}), {1, -1}), InternalError);
        CHECK(divide_one_minus(e({1, 0}) - e({0, 1}), {-1, 1}) == e({1, 0}));
    }
}
