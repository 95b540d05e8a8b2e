#include <doctest.h>

#include "support.hpp"

using namespace sphkl;
using testing::el;
using testing::H;
using testing::L;
using testing::session;

TEST_SUITE("hecke")
{
    TEST_CASE("multiplication by generators")
    {
        const auto& s = session("gl2");
        const auto& A = s.hecke();
        CHECK(A.right_mul_gen(H(s, "id"), 0) == H(s, "s1"));
        CHECK(A.left_mul_gen(0, H(s, "id")) == H(s, "s1"));
        CHECK(A.right_mul_gen(H(s, "s1"), 0) == H(s, "id") + H(s, "s1", "v^-1 - v"));
        // theta for A1 is an eigenvector.
        HeckeElement th = H(s, "s1") + H(s, "id", "v");
        CHECK(A.right_mul_gen(th, 0) == L(s, "v^-1") * th);
        CHECK(A.theta() == th);
    }

    TEST_CASE("omega acts by relabelling")
    {
        const auto& s = session("gl2");
        const auto& A = s.hecke();
        auto omega = el(s, "t[1,0]*s1");
        CHECK(A.left_mul_omega(omega, H(s, "s1")) == H(s, "t[1,0]"));
        CHECK(A.mul(H(s, "t[1,0]*s1"), H(s, "a1")) == HeckeElement::basis(s.weyl().mul(omega, el(s, "a1"))));
    }

    TEST_CASE("products and inverses")
    {
        const auto& s = session("sp4");
        const auto& A = s.hecke();
        auto x = H(s, "t[1,0]*s2"), y = H(s, "a1*s1"), z = H(s, "s2*s1*s2") + H(s, "id", "u - v0");
        CHECK(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)));
        auto w = el(s, "t[1,-1]*s1*s2");
        CHECK(A.mul(HeckeElement::basis(w), A.inverse_basis(w)) == H(s, "id"));
        CHECK(A.mul(A.inverse_gen(2), H(s, "a1")) == H(s, "id"));
    }

    TEST_CASE("duality")
    {
        const auto& s = session("gl2");
        const auto& A = s.hecke();
        CHECK(A.dual(H(s, "id")) == H(s, "id"));
        CHECK(A.dual(H(s, "s1")) == H(s, "s1") + H(s, "id", "v - v^-1"));
        CHECK(A.dual(A.theta()) == A.theta());
        const auto& sp2 = session("sp2");
        CHECK(sp2.hecke().dual(sp2.hecke().theta()) == sp2.hecke().theta());
        HeckeElement h = H(sp2, "t[1]*s1", "v^2 + v0") + H(sp2, "a1", "v^-1");
        CHECK(sp2.hecke().dual(sp2.hecke().dual(h)) == h);
    }

    TEST_CASE("Bernstein elements")
    {
        const auto& s = session("gl2");
        const auto& A = s.hecke();
        CHECK(A.Y({0, 0}) == H(s, "id"));
        CHECK(A.Y({1, 0}) == H(s, "t[1,0]"));
        CHECK(A.Y({0, 1}) == A.mul(H(s, "t[1,1]"), A.inverse_basis(el(s, "t[1,0]"))));
        CHECK(A.Y({0, 1}) == A.Y_with({0, 1}, {2, 0}));
        CHECK(A.mul(A.Y({0, 1}), A.Y({1, 0})) == A.mul(A.Y({1, 0}), A.Y({0, 1})));
        CHECK(A.mul(A.Y({-1, 2}), A.Y({1, -2})) == H(s, "id"));
        CHECK_THROWS(A.Y_with({0, 1}, {0, 0}));
    }

    TEST_CASE("Phi and Phi_w")
    {
        const auto& s = session("gl3");
        const auto& A = s.hecke();
        ExpPoly xi = testing::e({1, 0, 0}) + testing::e({0, 2, -1}, L(s, "v"));
        CHECK(A.Phi(xi) == A.Y({1, 0, 0}) + L(s, "v") * A.Y({0, 2, -1}));
        CHECK(A.Phi_w(xi, s.weyl().finite().identity()) == A.Phi(xi));
        // Invariant elements are central, so Phi_w does not depend on w.
        ExpPoly inv = s.rep().schur({1, 0, 0});
        for (int u = 0; u < s.weyl().finite().size(); ++u)
            CHECK(A.Phi_w(inv, u) == A.Phi(inv));
        for (int a = 0; a < s.weyl().num_nodes(); ++a)
            CHECK(A.left_mul_gen(a, A.Phi(inv)) == A.right_mul_gen(A.Phi(inv), a));
    }

    TEST_CASE("theta and P")
    {
        CHECK(session("gl2").hecke().P_scalar() == L(session("gl2"), "v + v^-1"));
        CHECK(session("sp2").hecke().P_scalar() == L(session("sp2"), "v + v^-1"));
        CHECK(session("gl3").hecke().P_scalar() == L(session("gl3"), "v^3 + 2*v + 2*v^-1 + v^-3"));
        for (const char* name : {"gl3", "sp4", "g2"}) {
            const auto& s = session(name);
            const auto& A = s.hecke();
            CHECK(A.mul(A.theta(), A.theta()) == A.P_scalar() * A.theta());
            CHECK(A.dual(A.theta()) == A.theta());
        }
    }

    TEST_CASE("formatting")
    {
        const auto& s = session("gl2");
        CHECK(s.hecke().format(s.hecke().theta()) == "v  @  id\n1  @  s1\n");
    }
}
