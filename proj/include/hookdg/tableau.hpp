#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hookdg {

/* A hook tableau. `col` is the first column read downwards, so col[0] is the
 * corner; `row` holds the boxes right of the corner. The EK degree-1
 * generators are pure rows and have an empty `col`.
 */
struct tableau {
    std::vector<int> col;
    std::vector<int> row;

    bool has_corner() const { return !col.empty(); }
    int corner() const { return col.at(0); }
    std::vector<int> column() const { return {col.begin() + (col.empty() ? 0 : 1), col.end()}; }
    int boxes() const { return static_cast<int>(col.size() + row.size()); }
    std::vector<int> content() const;  // all entries, sorted

    auto operator<=>(const tableau&) const = default;
};

struct signed_tableau {
    int sign = 0;  // +1, -1, or 0 when the column had a repeat
    tableau t;
};

tableau make_tableau(int corner, std::vector<int> column, std::vector<int> row);

signed_tableau normalize(tableau t);

enum class position { column, row };
// k is 1-based; column position 1 is the corner
tableau remove_entry(const tableau& t, position where, int k);
tableau attach_row(const tableau& t, int s);     // T^s
tableau attach_corner(const tableau& t, int s);  // T_s

bool is_semistandard(const tableau& t);
bool is_ek_admissible(const tableau& t);
bool entries_in_range(const tableau& t, int n);

// sign of the permutation sorting v, or 0 on a repeat; v is sorted in place
int sort_sign(std::vector<int>& v);
std::vector<int> sorted(std::vector<int> v);

// `[corner|row|column]`, e.g. `[1|2 2|3]`; pure rows render as `[|1 2|]`
std::string to_text(const tableau& t);
tableau parse_tableau(std::string_view s);

}  // namespace hookdg
