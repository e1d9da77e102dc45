#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookdg/tableau.hpp"

using namespace hookdg;

TEST_CASE("normalize sorts the column with its sign")
{
    signed_tableau a = normalize(make_tableau(2, {1}, {2}));
    CHECK(a.sign == -1);
    CHECK(a.t == make_tableau(1, {2}, {2}));

    CHECK(normalize(make_tableau(1, {1}, {3})).sign == 0);

    signed_tableau c = normalize(make_tableau(1, {}, {3, 2}));
    CHECK(c.sign == 1);
    CHECK(c.t == make_tableau(1, {}, {2, 3}));
}

TEST_CASE("removing and re-attaching entries")
{
    tableau t = make_tableau(1, {2, 3}, {2});
    CHECK(remove_entry(t, position::column, 2) == make_tableau(1, {3}, {2}));
    CHECK(remove_entry(t, position::column, 3) == make_tableau(1, {2}, {2}));
    CHECK(remove_entry(make_tableau(1, {}, {2, 2}), position::row, 1) == make_tableau(1, {}, {2}));
    CHECK(attach_row(remove_entry(t, position::row, 1), 2) == t);
    // a lone corner leaves a pure row behind
    tableau r = remove_entry(make_tableau(1, {}, {2, 2}), position::column, 1);
    CHECK_FALSE(r.has_corner());
    CHECK(r.row == std::vector<int>{2, 2});
}

TEST_CASE("attaching at the corner and on the row")
{
    tableau t = attach_corner(make_tableau(1, {}, {2}), 2);
    CHECK(t == make_tableau(2, {1}, {2}));
    signed_tableau s = normalize(t);
    CHECK(s.sign == -1);
    CHECK(s.t == make_tableau(1, {2}, {2}));

    CHECK(attach_row(make_tableau(1, {3}, {}), 2) == make_tableau(1, {3}, {2}));
}

TEST_CASE("moving a column entry to the corner costs (-1)^(k-1)")
{
    tableau t = make_tableau(1, {2, 3}, {});
    for (int k = 1; k <= 3; ++k) {
        int entry = t.col[static_cast<size_t>(k - 1)];
        signed_tableau s = normalize(attach_corner(remove_entry(t, position::column, k), entry));
        CHECK(s.t == t);
        CHECK(s.sign == (k % 2 ? 1 : -1));
    }
}

TEST_CASE("semistandard and EK admissibility")
{
    CHECK(is_semistandard(make_tableau(1, {2}, {1})));
    CHECK_FALSE(is_semistandard(make_tableau(2, {3}, {1})));
    CHECK_FALSE(is_semistandard(make_tableau(1, {1}, {1})));
    CHECK_FALSE(is_ek_admissible(make_tableau(1, {2}, {2, 2})));
    CHECK(is_ek_admissible(tableau{{}, {2, 2}}));
    CHECK(is_ek_admissible(make_tableau(1, {}, {2, 2})));
    CHECK(entries_in_range(make_tableau(1, {3}, {2}), 3));
    CHECK_FALSE(entries_in_range(make_tableau(1, {4}, {2}), 3));
}

TEST_CASE("sort sign")
{
    std::vector<int> v{3, 1, 2};
    CHECK(sort_sign(v) == 1);
    CHECK(v == std::vector<int>{1, 2, 3});
    std::vector<int> w{2, 1};
    CHECK(sort_sign(w) == -1);
    std::vector<int> z{2, 2};
    CHECK(sort_sign(z) == 0);
}

TEST_CASE("text form round-trips")
{
    tableau t = make_tableau(1, {3}, {2, 2});
    CHECK(to_text(t) == "[1|2 2|3]");
    CHECK(parse_tableau("[1 | 2 2 | 3]") == t);
    CHECK(parse_tableau(to_text(t)) == t);
    tableau r{{}, {1, 2}};
    CHECK(to_text(r) == "[|1 2|]");
    CHECK(parse_tableau("[ | 1 2 | ]") == r);
    CHECK(parse_tableau("[1||]") == make_tableau(1, {}, {}));
    CHECK_THROWS(parse_tableau("[1|2"));
    CHECK_THROWS(parse_tableau("[|1|3]"));
    CHECK_THROWS(parse_tableau("[a|1|]"));
}
