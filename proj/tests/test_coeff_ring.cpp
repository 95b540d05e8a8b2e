#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace sphkl;
using testing::el;
using testing::L;
using testing::session;

TEST_SUITE("coeff_ring")
{
    TEST_CASE("v of an element")
    {
        const auto& gl2 = session("gl2");
        CHECK(gl2.params().v_of(gl2.weyl().identity()).is_one());
        CHECK(LaurentPoly(gl2.params().v_of(el(gl2, "t[1,0]"))) == L(gl2, "v"));
        CHECK(LaurentPoly(gl2.params().v_of(el(gl2, "t[1,1]"))) == 1);
        const auto& sp2 = session("sp2");
        CHECK(LaurentPoly(sp2.params().v_of(el(sp2, "t[1]"))) == L(sp2, "v*v0"));
        CHECK(LaurentPoly(sp2.params().v_of(el(sp2, "s1*t[1]"))) == L(sp2, "v^2*v0"));
    }

    TEST_CASE("positive cone membership")
    {
        const std::vector<std::string> one{"v"};
        PositiveCone single({Monomial::unit(0)});
        CHECK(single.contains(parse_laurent("v^2 + v", one)) == Membership::Yes);
        CHECK(single.contains(parse_laurent("1 + v", one)) == Membership::No);
        CHECK(single.contains(parse_laurent("v^-1", one)) == Membership::No);
        CHECK(single.contains(LaurentPoly{}) == Membership::Yes);

        const std::vector<std::string> two{"v", "v0"};
        Monomial v = Monomial::unit(0), v0 = Monomial::unit(1);
        PositiveCone cone({v, v * v0, v * v0.inverse()});
        CHECK(cone.contains(parse_laurent("v*v0^-1 - v*v0", two)) == Membership::Yes);
        CHECK(cone.contains(parse_laurent("v^2", two)) == Membership::Yes);
        CHECK(cone.contains(parse_laurent("v0", two)) == Membership::No);
        CHECK(cone.contains(parse_laurent("v*v0^2", two)) == Membership::No);
        CHECK(cone.contains(parse_laurent("v^3*v0^-3", two)) == Membership::Yes);
    }

    TEST_CASE("phi")
    {
        Monomial v = Monomial::unit(0), v0 = Monomial::unit(1);
        auto standard = phi_maps({v}, true);
        CHECK(standard.injective);
        REQUIRE(standard.surjective.has_value());
        CHECK(*standard.surjective);
        CHECK(phi_maps({v, v * v0, v * v0.inverse()}, false).injective);
        CHECK_FALSE(phi_maps({v, Monomial{}}, false).injective);
        CHECK_FALSE(phi_maps({v0, v0.inverse()}, false).injective);
    }

    TEST_CASE("generators of the positive cone")
    {
        CHECK(session("gl2").params().cone().generators().size() == 1);
        CHECK(session("sp2").params().cone().generators().size() == 3);
        // Specialized: L_++ = vZ[v].
        const auto& spec = session("sp2", "v=2,v0=-1");
        CHECK(spec.params().variable_names() == std::vector<std::string>{"v"});
        CHECK(spec.params().cone().contains(L(spec, "v + v^5")) == Membership::Yes);
        CHECK(spec.params().cone().contains(L(spec, "1")) == Membership::No);
        CHECK(LaurentPoly(spec.params().node(1)) == L(spec, "v^-1"));
    }

    TEST_CASE("specialization text")
    {
        auto m = parse_specialization("v=2,v0=-1");
        CHECK(m == std::map<std::string, int>{{"v", 2}, {"v0", -1}});
        CHECK_THROWS(parse_specialization("v=x"));
        CHECK_THROWS(parse_specialization("v"));
    }

    TEST_CASE("labels")
    {
        std::istringstream conflict("rank 2\nroot 1: 1 -1\ncoroot 1: 1 -1\nlabel s1: v\nlabel a1: w\n");
        CHECK_THROWS_AS(Session(parse_datum(conflict)), DatumError);
        std::istringstream unlabeled("rank 2\nroot 1: 1 -1\ncoroot 1: 1 -1\n");
        Session s(parse_datum(unlabeled));
        CHECK(s.params().variable_names() == std::vector<std::string>{"v"});
        CHECK(s.params().equal_standard_parameters());
    }
}
