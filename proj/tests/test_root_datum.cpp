#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "support.hpp"

using namespace sphkl;
using testing::session;

namespace {
std::vector<Weight> roots_of(const std::vector<FiniteRoot>& rs)
{
    std::vector<Weight> out;
    for (const auto& r : rs)
        out.push_back(r.root);
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace

TEST_SUITE("root_datum")
{
    TEST_CASE("positive roots")
    {
        CHECK(roots_of(enumerate_positive_roots(session("gl2").datum())) == std::vector<Weight>{{1, -1}});
        CHECK(roots_of(enumerate_positive_roots(session("sp2").datum())) == std::vector<Weight>{{2}});
        CHECK(roots_of(enumerate_positive_roots(session("gl3").datum())) ==
              std::vector<Weight>{{0, 1, -1}, {1, -1, 0}, {1, 0, -1}});
        CHECK(session("sp4").datum().positive_roots().size() == 4);
        CHECK(session("g2").datum().positive_roots().size() == 6);
    }

    TEST_CASE("maximal roots")
    {
        CHECK(roots_of(maximal_roots(session("gl2").datum())) == std::vector<Weight>{{1, -1}});
        CHECK(roots_of(maximal_roots(session("gl3").datum())) == std::vector<Weight>{{1, 0, -1}});
        CHECK(roots_of(maximal_roots(session("sp2").datum())) == std::vector<Weight>{{2}});
    }

    TEST_CASE("types")
    {
        CHECK(session("gl2").datum().describe() == "A1");
        CHECK(session("gl3").datum().describe() == "A2");
        CHECK(session("sp2").datum().describe() == "A1");
        CHECK(session("sp4").datum().describe() == "C2");
        CHECK(session("g2").datum().describe() == "G2");
    }

    TEST_CASE("special roots")
    {
        const auto& sp2 = session("sp2").params().tilde();
        REQUIRE(sp2.special.size() == 1);
        CHECK(sp2.special[0]);
        CHECK(sp2.simple_roots[0] == Weight{1});
        CHECK(sp2.simple_coroots[0] == Coweight{2});
        CHECK_FALSE(session("gl2").params().tilde().any_special());
        CHECK_FALSE(session("gl3").params().tilde().any_special());
        const auto& sp4 = session("sp4").params().tilde();
        CHECK_FALSE(sp4.special[0]);
        CHECK(sp4.special[1]);
        CHECK_FALSE(session("g2").params().tilde().any_special());
    }

    TEST_CASE("special root needs a distinct affine parameter")
    {
        // Sp2 with one symbol on both nodes: nothing is special.
        std::istringstream in("rank 1\nroot 1: 2\ncoroot 1: 1\nlabel s1: v\nlabel a1: v\n");
        Session s(parse_datum(in, "sp2-equal"));
        CHECK_FALSE(s.params().tilde().any_special());
        CHECK(s.params().equal_standard_parameters());
    }

    TEST_CASE("invalid data")
    {
        // Pairing <alpha, alpha^v> must be 2.
        std::istringstream bad("rank 1\nroot 1: 1\ncoroot 1: 1\n");
        CHECK_THROWS_AS(Session(parse_datum(bad)), DatumError);
        std::istringstream nonreduced("rank 2\nroot 1: 1 -1\ncoroot 1: 1 -1\nroot 2: 2 -2\ncoroot 2: 1 -1\n");
        CHECK_THROWS_AS(Session(parse_datum(nonreduced)), DatumError);
    }
}
