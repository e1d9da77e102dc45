#include "hookdg/element.hpp"

#include <cctype>
#include <sstream>

namespace hookdg {

const char* kind_name(complex_kind k)
{
    switch (k) {
    case complex_kind::L: return "l";
    case complex_kind::EK: return "ek";
    case complex_kind::EK_classical: return "ek-classical";
    }
    return "?";
}

std::string to_text(const ek_symbol& s)
{
    std::string j;
    for (size_t i = 0; i < s.J.size(); ++i)
        j += (i ? "," : " ") + std::to_string(s.J[i]);
    return "(" + s.gen.str() + ";" + j + ")";
}

static std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

ek_symbol parse_symbol(std::string_view s, int n)
{
    s = strip(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("symbol must look like (x1*x2; 1,3)");
    s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    ek_symbol r{monomial::parse(s.substr(0, semi), n), {}};
    if (semi != std::string_view::npos) {
        std::string rest(s.substr(semi + 1));
        for (char& c : rest)
            if (c == ',')
                c = ' ';
        std::istringstream in(rest);
        std::string tok;
        while (in >> tok) {
            if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("bad symbol index '" + tok + "'");
            r.J.push_back(std::stoi(tok));
        }
    }
    if (!r.gen.is_nonnegative())
        throw std::invalid_argument("symbol generator must be a monomial");
    for (size_t i = 0; i < r.J.size(); ++i)
        if (r.J[i] < 1 || (i && r.J[i - 1] >= r.J[i]))
            throw std::invalid_argument("symbol indices must increase");
    if (!r.J.empty() && (r.gen.is_identity() || r.J.back() >= r.gen.max_index()))
        throw std::invalid_argument("symbol indices must lie below max of the generator");
    return r;
}

int hdegree(complex_kind kind, const tableau& t)
{
    if (kind == complex_kind::L)
        return static_cast<int>(t.col.size());
    if (t.col.empty())
        return t.row.empty() ? 0 : 1;
    return static_cast<int>(t.col.size()) + 1;
}

int key_weight(const tableau& t)
{
    return t.boxes();
}

int key_weight(const ek_symbol& s)
{
    return s.gen.degree() + static_cast<int>(s.J.size());
}

monomial key_content(const tableau& t, int n)
{
    return monomial::of_indices(n, t.content());
}

monomial key_content(const ek_symbol& s, int n)
{
    return s.gen * monomial::of_indices(n, s.J);
}

namespace {

// top-level split into signed terms, ignoring separators inside brackets
std::vector<std::pair<int, std::string_view>> split_signed(std::string_view s)
{
    std::vector<std::pair<int, std::string_view>> out;
    int depth = 0, sign = 1;
    size_t start = 0;
    char prev = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        char c = i < s.size() ? s[i] : '+';
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '[' || c == '(')
            ++depth;
        else if (c == ']' || c == ')')
            --depth;
        bool boundary = depth == 0 && (c == '+' || c == '-') && prev != '^' && prev != '*' && prev != '/';
        if (i == s.size() || boundary) {
            std::string_view t = strip(s.substr(start, i - start));
            if (!t.empty())
                out.emplace_back(sign, t);
            if (i < s.size())
                sign = (t.empty() ? sign : 1) * (c == '-' ? -1 : 1);
            start = i + 1;
        }
        prev = c;
    }
    if (depth != 0)
        throw std::invalid_argument("unbalanced brackets");
    return out;
}

std::vector<std::string_view> split_factors(std::string_view t)
{
    std::vector<std::string_view> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i <= t.size(); ++i) {
        char c = i < t.size() ? t[i] : '*';
        if (c == '[' || c == '(')
            ++depth;
        else if (c == ']' || c == ')')
            --depth;
        if (depth == 0 && c == '*') {
            out.push_back(strip(t.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

template <class Key, class KeyParser>
basic_element<Key> parse_sum(std::string_view s, complex_kind kind, int n, char open, const Key& unit, KeyParser parse_key)
{
    s = strip(s);
    if (s.empty())
        throw std::invalid_argument("empty element text");
    basic_element<Key> e(kind, n);
    if (s == "0")
        return e;
    for (auto [sign, t] : split_signed(s)) {
        rational c = sign;
        monomial m(n);
        std::optional<Key> key;
        for (auto f : split_factors(t)) {
            if (f.empty())
                throw std::invalid_argument("empty factor in '" + std::string(t) + "'");
            if (f.front() == open) {
                if (key)
                    throw std::invalid_argument("two basis symbols in one term");
                key = parse_key(f);
            }
            else if (f.front() == 'x')
                m *= monomial::parse(f, n);
            else
                c *= parse_rational(f);
        }
        e.add(key.value_or(unit), m, c);
    }
    return e;
}

}  // namespace

element parse_element(std::string_view s, complex_kind kind, int n)
{
    return parse_sum<tableau>(s, kind, n, '[', tableau{}, [n](std::string_view f) {
        tableau t = parse_tableau(f);
        if (!entries_in_range(t, n))
            throw std::out_of_range("tableau entry outside 1.." + std::to_string(n));
        return t;
    });
}

symbol_element parse_symbol_element(std::string_view s, int n)
{
    return parse_sum<ek_symbol>(s, complex_kind::EK_classical, n, '(', ek_symbol{monomial(n), {}},
                                [n](std::string_view f) { return parse_symbol(f, n); });
}

}  // namespace hookdg
