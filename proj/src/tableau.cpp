#include "hookdg/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hookdg {

std::vector<int> tableau::content() const
{
    std::vector<int> v(col);
    v.insert(v.end(), row.begin(), row.end());
    std::sort(v.begin(), v.end());
    return v;
}

tableau make_tableau(int corner, std::vector<int> column, std::vector<int> row)
{
    tableau t;
    t.col.push_back(corner);
    t.col.insert(t.col.end(), column.begin(), column.end());
    t.row = std::move(row);
    return t;
}

int sort_sign(std::vector<int>& v)
{
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i)
        for (size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j])
                return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

signed_tableau normalize(tableau t)
{
    std::sort(t.row.begin(), t.row.end());
    int sign = sort_sign(t.col);
    if (sign == 0)
        return {0, {}};
    return {sign, std::move(t)};
}

tableau remove_entry(const tableau& t, position where, int k)
{
    tableau r = t;
    if (where == position::column) {
        if (k < 1 || k > static_cast<int>(t.col.size()))
            throw std::out_of_range("column position out of range");
        if (k == 1 && t.col.size() == 1 && t.row.empty())
            throw std::invalid_argument("cannot remove the only box");
        // removing a lone corner leaves a pure row
        r.col.erase(r.col.begin() + (k - 1));
    }
    else {
        if (k < 1 || k > static_cast<int>(t.row.size()))
            throw std::out_of_range("row position out of range");
        r.row.erase(r.row.begin() + (k - 1));
    }
    return r;
}

tableau attach_row(const tableau& t, int s)
{
    tableau r = t;
    r.row.insert(std::upper_bound(r.row.begin(), r.row.end(), s), s);
    return r;
}

tableau attach_corner(const tableau& t, int s)
{
    tableau r = t;
    r.col.insert(r.col.begin(), s);
    return r;
}

bool is_semistandard(const tableau& t)
{
    if (t.col.empty())
        return false;
    for (size_t i = 1; i < t.col.size(); ++i)
        if (t.col[i - 1] >= t.col[i])
            return false;
    if (!t.row.empty() && t.row.front() < t.col.front())
        return false;
    return std::is_sorted(t.row.begin(), t.row.end());
}

bool is_ek_admissible(const tableau& t)
{
    if (!std::is_sorted(t.row.begin(), t.row.end()))
        return false;
    for (size_t i = 1; i < t.col.size(); ++i)
        if (t.col[i - 1] >= t.col[i])
            return false;
    if (t.col.empty())
        return true;
    return !t.row.empty() && t.col.back() < t.row.back();
}

bool entries_in_range(const tableau& t, int n)
{
    auto ok = [n](int x) { return x >= 1 && x <= n; };
    return std::all_of(t.col.begin(), t.col.end(), ok) && std::all_of(t.row.begin(), t.row.end(), ok);
}

static std::string join(const std::vector<int>& v, size_t from = 0)
{
    std::string s;
    for (size_t i = from; i < v.size(); ++i) {
        if (i > from)
            s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string to_text(const tableau& t)
{
    std::string corner = t.col.empty() ? "" : std::to_string(t.col[0]);
    return "[" + corner + "|" + join(t.row) + "|" + join(t.col, 1) + "]";
}

static std::vector<int> parse_ints(std::string_view s)
{
    std::vector<int> v;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad tableau entry '" + tok + "'");
        v.push_back(std::stoi(tok));
    }
    return v;
}

tableau parse_tableau(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("tableau must look like [corner | row | column]");
    s = s.substr(1, s.size() - 2);
    auto a = s.find('|');
    auto b = a == std::string_view::npos ? a : s.find('|', a + 1);
    if (b == std::string_view::npos || s.find('|', b + 1) != std::string_view::npos)
        throw std::invalid_argument("tableau needs exactly two '|' separators");
    std::vector<int> corner = parse_ints(s.substr(0, a));
    std::vector<int> row = parse_ints(s.substr(a + 1, b - a - 1));
    std::vector<int> column = parse_ints(s.substr(b + 1));
    if (corner.size() > 1)
        throw std::invalid_argument("tableau corner holds one entry");
    if (corner.empty() && !column.empty())
        throw std::invalid_argument("tableau column needs a corner");
    tableau t;
    t.col = corner;
    t.col.insert(t.col.end(), column.begin(), column.end());
    t.row = row;
    return t;
}

}  // namespace hookdg
