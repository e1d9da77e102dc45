#pragma once

#include "hookdg/arith.hpp"
#include "hookdg/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace hookdg {

enum class complex_kind { L, EK, EK_classical };

const char* kind_name(complex_kind k);

// (m; J): a minimal generator m and indices j_1 < ... < j_i < max(m)
struct ek_symbol {
    monomial gen;
    std::vector<int> J;

    int degree() const { return gen.is_identity() ? 0 : static_cast<int>(J.size()) + 1; }
    bool operator==(const ek_symbol&) const = default;
    bool operator<(const ek_symbol& o) const
    {
        if (degree() != o.degree())
            return degree() < o.degree();
        if (!(gen == o.gen))
            return grlex_greater{}(o.gen, gen);
        return J < o.J;
    }
};

std::string to_text(const ek_symbol& s);
ek_symbol parse_symbol(std::string_view s, int n);

// homological degree of a basis key
int hdegree(complex_kind kind, const tableau& t);
inline int hdegree(complex_kind, const ek_symbol& s) { return s.degree(); }
// internal degree of a basis key
int key_weight(const tableau& t);
int key_weight(const ek_symbol& s);
// multidegree of a basis key
monomial key_content(const tableau& t, int n);
monomial key_content(const ek_symbol& s, int n);

/* A finite sum of basis keys with polynomial coefficients. The empty
 * tableau (and the identity symbol) is the unit in homological degree 0.
 */
template <class Key>
class basic_element {
public:
    using term_map = std::map<Key, polynomial>;

    basic_element() = default;
    basic_element(complex_kind kind, int n) : kind_(kind), n_(n) {}
    static basic_element of(complex_kind kind, int n, const Key& k, const polynomial& c)
    {
        basic_element e(kind, n);
        e.add(k, c);
        return e;
    }
    static basic_element of(complex_kind kind, int n, const Key& k, const rational& c = 1)
    {
        return of(kind, n, k, polynomial::constant(n, c));
    }

    complex_kind kind() const { return kind_; }
    int nvars() const { return n_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const polynomial& c)
    {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    void add(const Key& k, const monomial& m, const rational& c) { add(k, polynomial(m, c)); }

    basic_element& operator+=(const basic_element& o)
    {
        check(o);
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    basic_element& operator-=(const basic_element& o)
    {
        check(o);
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }
    basic_element& operator*=(const polynomial& p)
    {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = it->second * p;
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }
    basic_element& operator*=(const monomial& m)
    {
        for (auto& t : terms_)
            t.second *= m;
        return *this;
    }
    basic_element& operator*=(const rational& c)
    {
        if (c == 0)
            terms_.clear();
        for (auto& t : terms_)
            t.second *= c;
        return *this;
    }
    friend basic_element operator+(basic_element a, const basic_element& b) { return a += b; }
    friend basic_element operator-(basic_element a, const basic_element& b) { return a -= b; }
    friend basic_element operator*(basic_element a, const polynomial& p) { return a *= p; }
    friend basic_element operator*(basic_element a, const monomial& m) { return a *= m; }
    friend basic_element operator*(basic_element a, const rational& c) { return a *= c; }
    basic_element operator-() const { return basic_element(*this) *= rational(-1); }

    bool operator==(const basic_element& o) const { return terms_ == o.terms_; }

    bool is_polynomial() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_polynomial(); });
    }

    // homological degree; -1 for zero; throws when mixed
    int degree() const
    {
        int d = -1;
        for (const auto& t : terms_) {
            int k = hdegree(kind_, t.first);
            if (d >= 0 && k != d)
                throw std::domain_error("element mixes homological degrees");
            d = k;
        }
        return d;
    }

    // boxes (or generator degree) plus coefficient degree, uniform over terms
    int internal_degree() const
    {
        int d = -1;
        for (const auto& [k, c] : terms_)
            for (const auto& t : c.terms()) {
                int w = key_weight(k) + t.first.degree();
                if (d >= 0 && w != d)
                    throw std::domain_error("element is not homogeneous");
                d = w;
            }
        if (d < 0)
            throw std::domain_error("internal degree of zero");
        return d;
    }

    // terms as (monomial, key, coefficient) ordered by monomial then key
    std::vector<std::tuple<monomial, Key, rational>> expanded() const
    {
        std::vector<std::tuple<monomial, Key, rational>> v;
        for (const auto& [k, c] : terms_)
            for (const auto& [m, q] : c.terms())
                v.emplace_back(m, k, q);
        std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) == std::get<0>(b))
                return std::get<1>(a) < std::get<1>(b);
            return grlex_greater{}(std::get<0>(a), std::get<0>(b));
        });
        return v;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, k, c] : expanded()) {
            s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            std::vector<std::string> f;
            rational a = abs(c);
            if (a != 1)
                f.push_back(to_string(a));
            if (!m.is_identity())
                f.push_back(m.str());
            std::string kt = is_unit(k) ? "" : to_text(k);
            if (!kt.empty())
                f.push_back(kt);
            if (f.empty())
                f.push_back("1");
            for (size_t i = 0; i < f.size(); ++i)
                s += (i ? "*" : "") + f[i];
        }
        return s;
    }

    static bool is_unit(const tableau& t) { return t.col.empty() && t.row.empty(); }
    static bool is_unit(const ek_symbol& s) { return s.gen.is_identity(); }

private:
    void check(const basic_element& o)
    {
        if (o.n_ && n_ && o.n_ != n_)
            throw dimension_mismatch("element dimension mismatch");
        if (o.n_ && n_ && o.kind_ != kind_ && !o.terms_.empty() && !terms_.empty())
            throw std::invalid_argument("element kind mismatch");
        if (!n_) {
            n_ = o.n_;
            kind_ = o.kind_;
        }
    }
    complex_kind kind_ = complex_kind::L;
    int n_ = 0;
    term_map terms_;
};

using element = basic_element<tableau>;
using symbol_element = basic_element<ek_symbol>;

// Parses sums such as `x1*[1|2|2] - 3/2*x2*[1|1|2]`; bare monomials are degree 0.
element parse_element(std::string_view s, complex_kind kind, int n);
symbol_element parse_symbol_element(std::string_view s, int n);

}  // namespace hookdg
