#include <doctest.h>

#include "sphkl/laurent.hpp"
#include "sphkl/lattice.hpp"

using namespace sphkl;

namespace {
const std::vector<std::string> kNames{"v", "v0"};
LaurentPoly P(const std::string& s) { return parse_laurent(s, kNames); }
} // namespace

TEST_SUITE("laurent")
{
    TEST_CASE("parse and print round trip")
    {
        for (const char* text : {"0", "1", "-v^2 + 1", "v^3 + 2*v + 2*v^-1 + v^-3", "-v*v0 + v*v0^-1", "v^2*v0 - v^2*v0^-1"})
            CHECK(P(text).to_string(kNames) == text);
        CHECK(P("1 + v").to_string(kNames) == "v + 1");
        CHECK(P("v - v") == LaurentPoly{});
    }

    TEST_CASE("bar and epsilon")
    {
        CHECK(P("v^2 + v^-1*v0").bar() == P("v^-2 + v*v0^-1"));
        CHECK(P("v - v^-1").bar() == -P("v - v^-1"));
        CHECK(P("v^3 + 2*v + 2*v^-1 + v^-3").epsilon() == 6);
        CHECK(P("v*v0 - v*v0^-1").epsilon() == 0);
    }

    TEST_CASE("arithmetic")
    {
        CHECK(P("v + v^-1") * P("v - v^-1") == P("v^2 - v^-2"));
        CHECK(P("v^4 - 1").divide_exact(P("v^2 + 1")) == P("v^2 - 1"));
        CHECK_THROWS_AS(P("v^4 + 1").divide_exact(P("v + 1")), InternalError);
        CHECK(P("v").times(Monomial::unit(1, -1)) == P("v*v0^-1"));
    }

    TEST_CASE("parse errors")
    {
        CHECK_THROWS(P("w + 1"));
        CHECK_THROWS(P("v^"));
        CHECK_THROWS(P("2*"));
    }
}
