#include <doctest.h>

#include <set>

#include "sphkl/oracles.hpp"
#include "support.hpp"

using namespace sphkl;
using testing::el;
using testing::H;
using testing::L;
using testing::session;

namespace {
std::int64_t dimension(const std::map<Coweight, std::int64_t>& ch)
{
    std::int64_t d = 0;
    for (const auto& [mu, m] : ch)
        d += m;
    return d;
}
} // namespace

TEST_SUITE("oracles")
{
    TEST_CASE("Freudenthal")
    {
        const auto& gl3 = session("gl3");
        auto t = oracles::character_table(gl3.datum(), gl3.params().tilde());
        CHECK(t.freudenthal({1, 0, -1}, {0, 0, 0}) == 2);
        CHECK(t.freudenthal({1, 0, -1}, {0, 1, -1}) == 1);
        CHECK(t.freudenthal({1, 0, -1}, {2, 0, -2}) == 0);
        CHECK(dimension(t.character({1, 0, -1})) == 8);
        CHECK(dimension(t.character({2, 0, 0})) == 6);

        const auto& g2 = session("g2");
        auto tg = oracles::character_table(g2.datum(), g2.params().tilde());
        std::set<std::int64_t> dims{dimension(tg.character({1, 0})), dimension(tg.character({0, 1}))};
        CHECK(dims == std::set<std::int64_t>{7, 14});

        const auto& sp2 = session("sp2");
        auto ts = oracles::character_table(sp2.datum(), sp2.params().tilde());
        CHECK(ts.freudenthal({2}, {0}) == 1);
        CHECK(ts.freudenthal({2}, {1}) == 0);
    }

    TEST_CASE("tensor products")
    {
        const auto& gl2 = session("gl2");
        auto t = oracles::character_table(gl2.datum(), gl2.params().tilde());
        using M = std::map<Coweight, std::int64_t>;
        CHECK(t.tensor_decompose({1, 0}, {1, 0}) == M{{{2, 0}, 1}, {{1, 1}, 1}});
        const auto& sp4 = session("sp4");
        auto t4 = oracles::character_table(sp4.datum(), sp4.params().tilde());
        std::int64_t total = 0;
        for (const auto& [nu, m] : t4.tensor_decompose({1, 0}, {1, 0}))
            total += m * dimension(t4.character(nu));
        CHECK(total == dimension(t4.character({1, 0})) * dimension(t4.character({1, 0})));
    }

    TEST_CASE("orbit sums")
    {
        const auto& gl2 = session("gl2");
        LaurentPoly t = L(gl2, "v^2");
        auto R = oracles::orbit_sum_HL(gl2.datum(), gl2.params().tilde(), {2, 0}, t);
        CHECK(R == gl2.rep().hall_littlewood({2, 0}));
        auto R0 = oracles::orbit_sum_HL(gl2.datum(), gl2.params().tilde(), {0, 0}, t);
        CHECK(R0 == testing::e({0, 0}, L(gl2, "1 + v^2")));
        const auto& sp2 = session("sp2");
        CHECK_THROWS_AS(oracles::orbit_sum_HL(sp2.datum(), sp2.params().tilde(), {1}, L(sp2, "v^2")),
                        std::invalid_argument);
    }

    TEST_CASE("standard KL recursion")
    {
        const auto& gl2 = session("gl2");
        oracles::KLGeneric kl(gl2.hecke());
        CHECK(kl.element(el(gl2, "s1"), 5) == H(gl2, "s1") + H(gl2, "id", "v"));
        CHECK(kl.element(el(gl2, "s1*a1"), 5) ==
              H(gl2, "s1*a1") + H(gl2, "s1", "v") + H(gl2, "a1", "v") + H(gl2, "id", "v^2"));
        CHECK_THROWS_AS(kl.element(el(gl2, "t[3,-3]"), 5), std::length_error);
        for (const auto& lam : gl2.weyl().dominant_grid(6, 1)) {
            auto c = gl2.spherical().kl_spherical(lam);
            CHECK(kl.element(c.n_lambda, 6) == c.element);
        }
        CHECK_THROWS_AS(oracles::KLGeneric(session("sp2").hecke()), std::invalid_argument);
    }

    TEST_CASE("Bruhat order by subwords")
    {
        const auto& s = session("gl3");
        const auto& W = s.weyl();
        auto w = el(s, "s1*s2*s1");
        CHECK(oracles::bruhat_bruteforce(W, el(s, "s1"), w));
        CHECK(oracles::bruhat_bruteforce(W, el(s, "s2*s1"), w));
        CHECK_FALSE(oracles::bruhat_bruteforce(W, el(s, "a1"), w));
        auto elems = W.double_coset({1, 0, 0});
        for (const auto& u : elems)
            for (const auto& x : elems)
                CHECK(W.bruhat_leq(u, x) == oracles::bruhat_bruteforce(W, u, x));
    }

    TEST_CASE("brute-force length")
    {
        const auto& s = session("sp4");
        for (const char* text : {"id", "s1", "a1", "t[1,0]", "t[1,-2]*s1*s2", "w0"})
            CHECK(oracles::length_bruteforce(s.weyl(), el(s, text)) == s.weyl().length(el(s, text)));
    }
}
