#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookdg/schur.hpp"

using namespace hookdg;

TEST_CASE("basis enumeration")
{
    auto b = enumerate_l_basis(2, 0, 2);
    REQUIRE(b.size() == 3);
    CHECK(to_text(b[0]) == "[1|1|]");
    CHECK(to_text(b[1]) == "[1|2|]");
    CHECK(to_text(b[2]) == "[2|2|]");
    CHECK(enumerate_l_basis(1, 1, 1).empty());
    CHECK(enumerate_l_basis(3, 1, 2).size() == 8);
    for (const auto& t : enumerate_l_basis(4, 2, 3))
        CHECK(is_semistandard(t));
}

TEST_CASE("closed rank formula")
{
    CHECK(schur_rank(3, 1, 2) == 8);
    CHECK(schur_rank(2, 0, 2) == 3);
    CHECK(schur_rank(1, 1, 2) == 0);
    for (int n = 1; n <= 5; ++n)
        for (int a = 0; a < n; ++a)
            for (int b = 1; b <= 4; ++b)
                CHECK(enumerate_l_basis(n, a, b).size() == schur_rank(n, a, b));
}

TEST_CASE("the embedding into wedge (x) sym")
{
    wedge_sym_element k = kappa_embed(make_tableau(1, {2}, {}));
    wedge_sym_element want;
    want.add({2}, {1}, 1);
    want.add({1}, {2}, -1);
    CHECK(k == want);

    wedge_sym_element s = kappa_embed(make_tableau(1, {}, {1}));
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms.begin()->first.first.empty());
    CHECK(s.terms.begin()->first.second == std::vector<int>{1, 1});
}

TEST_CASE("straightening a corner violation")
{
    element e = straighten(make_tableau(2, {3}, {1}), 3);
    CHECK(e.str() == "-[1|3|2] + [1|2|3]");
    CHECK(kappa_embed(e) == kappa_embed(make_tableau(2, {3}, {1})));

    element r = straighten(make_tableau(2, {}, {1}), 2);
    CHECK(r == element::of(complex_kind::L, 2, make_tableau(1, {}, {2})));

    tableau ok = make_tableau(1, {3}, {2});
    CHECK(straighten(ok, polynomial::parse("x2", 3), 3) ==
          element::of(complex_kind::L, 3, ok, polynomial::parse("x2", 3)));
    CHECK(straighten(make_tableau(1, {1}, {2}), 3).is_zero());
}

TEST_CASE("straightening preserves the embedding on every small filling")
{
    const int n = 4;
    int checked = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 0; b <= 2; ++b) {
            std::vector<int> cells(static_cast<size_t>(a + b), 1);
            while (true) {
                tableau t;
                t.col.assign(cells.begin(), cells.begin() + a);
                t.row.assign(cells.begin() + a, cells.end());
                element s = straighten(t, n);
                for (const auto& [u, c] : s.terms())
                    CHECK(is_semistandard(u));
                CHECK(kappa_embed(s) == kappa_embed(t));
                ++checked;
                size_t i = 0;
                while (i < cells.size() && cells[i] == n)
                    cells[i++] = 1;
                if (i == cells.size())
                    break;
                ++cells[i];
            }
        }
    CHECK(checked > 1000);
}
