#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookdg/ek_complex.hpp"
#include "hookdg/schur.hpp"

using namespace hookdg;

static element E(const char* s, int n) { return parse_element(s, complex_kind::EK, n); }
static symbol_element S(const char* s, int n) { return parse_symbol_element(s, n); }
static monomial M(const char* s, int n) { return monomial::parse(s, n); }
static std::vector<monomial> gens(std::initializer_list<const char*> g, int n)
{
    std::vector<monomial> v;
    for (const char* s : g)
        v.push_back(M(s, n));
    return v;
}

TEST_CASE("basis")
{
    std::vector<std::string> one, two;
    for (const auto& t : ek_basis(2, 2, 1))
        one.push_back(to_text(t));
    for (const auto& t : ek_basis(2, 2, 2))
        two.push_back(to_text(t));
    CHECK(one == std::vector<std::string>{"[|1 1|]", "[|1 2|]", "[|2 2|]"});
    CHECK(two == std::vector<std::string>{"[1|1 2|]", "[1|2 2|]"});
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int k = 1; k <= n; ++k)
                CHECK(ek_basis(n, d, k).size() == schur_rank(n, k - 1, d));
}

TEST_CASE("differential, with the sign of degree >= 2 flipped")
{
    CHECK(diff_ek(E("[|2 2|]", 2)).str() == "x2^2");
    CHECK(diff_ek(E("[1|2 2|]", 2)).str() == "x1*[|2 2|] - x2*[|1 2|]");
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d) {
            complex_descriptor c = ek_complex_build(n, d);
            for (int k = 2; k <= c.length(); ++k)
                CHECK(is_zero(c.diff[static_cast<size_t>(k - 1)] * c.diff[static_cast<size_t>(k)]));
        }
}

TEST_CASE("Borel ideals and beginnings")
{
    CHECK(is_borel(gens({"x1^2", "x1*x2", "x2^2"}, 2)));
    CHECK_FALSE(is_borel(gens({"x2"}, 2)));
    CHECK(is_borel(gens({"x1"}, 2)));
    CHECK(is_borel(gens({"x1", "x2^2"}, 2)));

    auto m2 = power_of_maximal_ideal(3, 2);
    CHECK(borel_begin(M("x1*x2*x3", 3), m2) == std::pair{M("x1*x2", 3), M("x3", 3)});
    CHECK(borel_begin(M("x2^2*x3", 3), m2) == std::pair{M("x2^2", 3), M("x3", 3)});
    CHECK(borel_begin(M("x1*x3", 3), m2) == std::pair{M("x1*x3", 3), monomial(3)});
}

TEST_CASE("classical form")
{
    complex_descriptor c = ek_classical_build(power_of_maximal_ideal(2, 2));
    CHECK(c.ranks() == std::vector<size_t>{1, 3, 2});
    CHECK(is_zero(c.diff[1] * c.diff[2]));

    complex_descriptor b = ek_classical_build(gens({"x1", "x2^2"}, 2));
    CHECK(b.ranks() == std::vector<size_t>{1, 2, 1});
    CHECK(is_zero(b.diff[1] * b.diff[2]));

    auto m2 = power_of_maximal_ideal(2, 2);
    CHECK(ek_mu_term(parse_symbol("(x1*x2; 1)", 2), 1, m2).str() == "x2*(x1^2;)");
    CHECK_THROWS(ek_classical_build(gens({"x2"}, 2)));
}

TEST_CASE("eta")
{
    CHECK(eta(E("[1|2 2|]", 2)).str() == "(x2^2; 1)");
    CHECK(eta(E("[|1 2|]", 2)).str() == "(x1*x2;)");
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int k = 0; k <= n; ++k)
                for (const auto& t : ek_basis(n, d, k)) {
                    element e = element::of(complex_kind::EK, n, t);
                    CHECK(eta_inverse(eta(e)) == e);
                }
}

TEST_CASE("chains between generators")
{
    chain_data a = peeva_chains(M("x1*x2", 3), M("x2*x3", 3), 2);
    CHECK(a.s.empty());
    CHECK(a.t == std::vector<int>{1});
    CHECK(a.g == gens({"x2*x3", "x1*x2"}, 3));

    chain_data b = peeva_chains(M("x1^2", 2), M("x2^2", 2), 2);
    CHECK(b.s.empty());
    CHECK(b.t == std::vector<int>{1, 1});
    CHECK(b.g == gens({"x2^2", "x1*x2", "x1^2"}, 2));

    chain_data c = peeva_chains(M("x1*x2", 2), M("x1*x2", 2), 2);
    CHECK(c.s.empty());
    CHECK(c.t.empty());
}

TEST_CASE("five-case product")
{
    CHECK(peeva_product(S("(x1*x2;)", 2), S("(x1*x2; 1)", 2), 2).is_zero());
    CHECK(peeva_product(S("(x2*x3; 1)", 3), S("(x2*x3; 2)", 3), 2).is_zero());
    CHECK(peeva_product(S("(x1^2;)", 2), S("(x2^2;)", 2), 2).str() == "x1*(x2^2; 1) + x2*(x1*x2; 1)");
    CHECK(peeva_product(E("[|1 1|]", 2), E("[|2 2|]", 2)).str() == "x1*[1|2 2|] + x2*[1|1 2|]");
}

TEST_CASE("recursive product")
{
    CHECK(peeva_product_recursive(E("[|1 2|]", 2), E("[1|2 2|]", 2)).is_zero());
    CHECK(peeva_product_recursive(E("[|1 1|]", 2), E("[|2 2|]", 2)).str() == "x1*[1|2 2|] + x2*[1|1 2|]");
    for (const auto& t : ek_basis(3, 2, 1)) {
        element e = element::of(complex_kind::EK, 3, t);
        CHECK(peeva_product_recursive(e, e).is_zero());
        CHECK(peeva_product(e, e).is_zero());
    }
}
