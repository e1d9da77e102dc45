#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookdg/arith.hpp"

using namespace hookdg;

static monomial M(const char* s, int n = 3) { return monomial::parse(s, n); }
static polynomial P(const char* s, int n = 3) { return polynomial::parse(s, n); }

TEST_CASE("monomial division keeps Laurent exponents")
{
    CHECK(M("x1^2*x2") / M("x1") == M("x1*x2"));
    monomial q = M("x1") / M("x2");
    CHECK(q.str() == "x1*x2^-1");
    CHECK_FALSE(q.is_nonnegative());
    CHECK(M("x2*x3") * monomial(3) == M("x2*x3"));
    CHECK(monomial(3).is_identity());
}

TEST_CASE("gcd and lcm are componentwise")
{
    CHECK(gcd(M("x1*x2"), M("x2*x3")) == M("x2"));
    CHECK(lcm(M("x1*x2"), M("x2*x3")) == M("x1*x2*x3"));
    CHECK(gcd(M("x1^2*x3"), M("x1^2*x3")) == M("x1^2*x3"));
}

TEST_CASE("support extrema")
{
    CHECK(M("x1*x3^2").max_index() == 3);
    CHECK(M("x1*x3^2").min_index() == 1);
    CHECK(M("x2^2").max_index() == 2);
    CHECK(M("x2^2").min_index() == 2);
    CHECK_THROWS(monomial(3).max_index());
    CHECK(M("x1*x3^2").indices() == std::vector<int>{1, 3, 3});
}

TEST_CASE("graded order: degree first, then x1 > x2 > ...")
{
    grlex_greater g;
    CHECK(g(M("x3^2"), M("x1")));
    CHECK(g(M("x1*x3"), M("x2^2")));
    CHECK_FALSE(g(M("x2^2"), M("x1*x3")));
}

TEST_CASE("polynomial arithmetic")
{
    CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
    polynomial p = P("3/2*x1*x2 - x3^2");
    CHECK((p + p * rational(-1)).is_zero());
    CHECK(p * polynomial::constant(3, 1) == p);
    CHECK(p.str() == "3/2*x1*x2 - x3^2");
    CHECK(polynomial::parse(p.str(), 3) == p);
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 2);
}

TEST_CASE("Laurent detection")
{
    CHECK_FALSE((P("x1") * M("x2^-1") + P("x2")).is_polynomial());
    CHECK(polynomial(3).is_polynomial());
    CHECK(P("x1^2*x2").is_polynomial());
    CHECK(P("x2^-1").str() == "x2^-1");
}

TEST_CASE("rationals render as p/q")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2")) == "-2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(P("x4", 3));
}
