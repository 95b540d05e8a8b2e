#include <doctest.h>

#include <random>

#include "sphkl/oracles.hpp"
#include "support.hpp"

using namespace sphkl;
using testing::el;
using testing::session;

TEST_SUITE("affine_weyl")
{
    TEST_CASE("lengths")
    {
        const auto& gl2 = session("gl2");
        const auto& W = gl2.weyl();
        CHECK(W.length(el(gl2, "t[1,1]")) == 0);
        CHECK(W.length(el(gl2, "s1*t[1,0]")) == 2);
        CHECK(W.length(el(gl2, "t[1,0]")) == 1);
        CHECK(W.length(el(gl2, "id")) == 0);
        const auto& sp2 = session("sp2");
        CHECK(sp2.weyl().length(el(sp2, "t[1]")) == 2);
        CHECK(session("g2").weyl().length(session("g2").weyl().w0()) == 6);
    }

    TEST_CASE("group law")
    {
        const auto& s = session("sp4");
        const auto& W = s.weyl();
        auto x = el(s, "t[1,-2]*s1*s2"), y = el(s, "a1*t[0,1]*s2");
        CHECK(W.mul(x, W.inverse(x)) == W.identity());
        CHECK(W.act(W.mul(x, y), Coweight{3, 1}) == W.act(x, W.act(y, Coweight{3, 1})));
        // The affine reflection is t_{theta^v} s_theta.
        const auto& gl2 = session("gl2");
        CHECK(gl2.weyl().simple_reflection(1) == el(gl2, "t[1,-1]*s1"));
    }

    TEST_CASE("action on affine roots")
    {
        const auto& gl2 = session("gl2");
        const auto& W = gl2.weyl();
        AffineRoot a{W.datum().positive_roots()[0], 0};
        auto same = W.act_on_affine_root(a, W.identity());
        CHECK(same.finite.root == a.finite.root);
        CHECK(same.level == 0);
        auto shifted = W.act_on_affine_root(a, el(gl2, "t[1,0]"));
        CHECK(shifted.finite.root == Weight{1, -1});
        CHECK(shifted.level == 1);
        auto flipped = W.act_on_affine_root(a, el(gl2, "s1"));
        CHECK(flipped.finite.root == Weight{-1, 1});
        CHECK(flipped.level == 0);
    }

    TEST_CASE("reduced words")
    {
        const auto& gl2 = session("gl2");
        const auto& W = gl2.weyl();
        auto id = W.reduced_word(W.identity());
        CHECK(id.omega == W.identity());
        CHECK(id.letters.empty());

        auto n = W.reduced_word(el(gl2, "s1*t[1,0]"));
        CHECK(n.omega == el(gl2, "t[1,0]*s1"));
        CHECK(n.letters.size() == 2);
        CHECK(W.length(n.omega) == 0);

        const auto& sp2 = session("sp2");
        auto t = sp2.weyl().reduced_word(el(sp2, "t[1]"));
        CHECK(t.omega == sp2.weyl().identity());
        REQUIRE(t.letters.size() == 2);
        CHECK(t.letters[0] != t.letters[1]);

        // Random descents give words of the same element.
        std::mt19937 rng(7);
        const auto& g2 = session("g2");
        auto w = el(g2, "t[1,1]*s1");
        for (int i = 0; i < 5; ++i) {
            auto rw = g2.weyl().reduced_word(w, &rng);
            AffineElement x = rw.omega;
            for (int a : rw.letters)
                x = g2.weyl().right_mul_simple(x, a);
            CHECK(x == w);
            CHECK(static_cast<int>(rw.letters.size()) == g2.weyl().length(w));
        }
    }

    TEST_CASE("minimal coset representatives")
    {
        const auto& gl2 = session("gl2");
        const auto& W = gl2.weyl();
        auto [m01, w01] = W.min_coset_rep({0, 1});
        CHECK(w01 == W.finite().identity());
        CHECK(m01 == el(gl2, "t[0,1]"));
        CHECK(W.length(m01) == 1);
        auto [m10, w10] = W.min_coset_rep({1, 0});
        CHECK(w10 == W.finite().simple(0));
        CHECK(m10 == el(gl2, "t[1,0]*s1"));
        CHECK(W.length(m10) == 0);
        auto [m0, w0] = W.min_coset_rep({0, 0});
        CHECK(m0 == W.identity());
        CHECK(w0 == W.finite().identity());
    }

    TEST_CASE("longest double coset representatives")
    {
        const auto& gl2 = session("gl2");
        const auto& W = gl2.weyl();
        CHECK(W.longest_double_rep({0, 0}) == W.w0());
        CHECK(W.longest_double_rep({1, 0}) == el(gl2, "s1*t[1,0]"));
        CHECK(W.longest_double_rep({1, 0}) == el(gl2, "t[0,1]*s1"));
        CHECK(W.length(W.longest_double_rep({1, 0})) == 2);
        CHECK(W.double_coset({1, 0}).size() == 4);
        const auto& sp2 = session("sp2");
        CHECK(sp2.weyl().longest_double_rep({1}) == el(sp2, "s1*t[1]"));
        CHECK(sp2.weyl().length(el(sp2, "s1*t[1]")) == 3);
        CHECK_THROWS_AS(W.longest_double_rep({0, 1}), std::invalid_argument);
    }

    TEST_CASE("Bruhat order")
    {
        const auto& gl2 = session("gl2");
        const auto& W = gl2.weyl();
        auto m10 = W.min_coset_rep({1, 0}).first, m01 = W.min_coset_rep({0, 1}).first;
        CHECK(W.bruhat_leq(m10, m10));
        CHECK(W.bruhat_leq(m10, m01));
        CHECK_FALSE(W.bruhat_leq(m01, m10));
        CHECK_FALSE(W.bruhat_leq(el(gl2, "t[1,1]"), W.identity()));
        CHECK_FALSE(W.bruhat_leq(W.identity(), el(gl2, "t[1,1]")));
    }

    TEST_CASE("order on coweights")
    {
        const auto& W = session("gl2").weyl();
        CHECK(W.coweight_leq({2, 0}, {2, 0}));
        CHECK(W.coweight_leq({1, 0}, {0, 1}));
        CHECK_FALSE(W.coweight_leq({0, 1}, {1, 0}));
        // alpha-string through (2,0): (0,2) > (2,0) > (1,1)
        CHECK(W.coweight_leq({2, 0}, {0, 2}));
        CHECK(W.coweight_leq({1, 1}, {2, 0}));
        CHECK_FALSE(W.coweight_leq({2, 0}, {1, 1}));
    }

    TEST_CASE("parameter classes")
    {
        CHECK(session("gl2").weyl().parameter_classes() == std::vector<int>{0, 0});
        CHECK(session("sp2").weyl().parameter_classes() == std::vector<int>{0, 1});
        CHECK(session("gl3").weyl().parameter_classes() == std::vector<int>{0, 0, 0});
        CHECK(session("sp4").weyl().parameter_classes() == std::vector<int>{0, 1, 2});
        CHECK(session("g2").weyl().parameter_classes() == std::vector<int>{0, 1, 1});
    }

    TEST_CASE("dominant grid")
    {
        const auto& W = session("gl2").weyl();
        auto g = W.dominant_grid(3, 1);
        CHECK(g == std::vector<Coweight>{{0, 0}, {0, -1}, {1, 0}, {1, -1}});
        for (const auto& lam : W.dominant_grid(10, 1))
            CHECK(W.length(W.longest_double_rep(lam)) <= 10);
    }

    TEST_CASE("element text")
    {
        const auto& s = session("gl3");
        const auto& W = s.weyl();
        for (const char* text : {"id", "s1", "t[1,0,0]", "t[1,0,-1]*s1*s2"})
            CHECK(W.to_string(W.parse(text)) == text);
        CHECK(W.parse("w0") == W.w0());
        CHECK_THROWS(W.parse("s7"));
        CHECK_THROWS(W.parse("t[1,0]"));
    }

    TEST_CASE("oracle agreement on small elements")
    {
        for (const char* name : {"gl2", "sp2", "sp4", "g2"}) {
            const auto& W = session(name).weyl();
            for (const auto& lam : W.dominant_grid(7, 1))
                for (const auto& w : W.double_coset(lam))
                    CHECK(W.length(w) == oracles::length_bruteforce(W, w));
        }
    }
}
