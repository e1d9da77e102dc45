#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hookdg {

using rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

std::string to_string(const rational& q);
rational parse_rational(std::string_view s);

// Laurent monomial x^a in n variables; exponents may be negative.
class monomial {
public:
    monomial() = default;
    explicit monomial(int n) : e_(static_cast<size_t>(n), 0) {}
    explicit monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    static monomial var(int n, int i, int power = 1);  // i is 1-based
    // product of the listed variables (1-based, repeats allowed)
    static monomial of_indices(int n, const std::vector<int>& idx);

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const;
    bool is_identity() const;
    bool is_nonnegative() const;
    bool divides(const monomial& other) const;
    int max_index() const;
    int min_index() const;
    std::vector<int> indices() const;  // the multiset of variables, sorted

    monomial& operator*=(const monomial& o);
    monomial& operator/=(const monomial& o);
    friend monomial operator*(monomial a, const monomial& b) { return a *= b; }
    friend monomial operator/(monomial a, const monomial& b) { return a /= b; }

    bool operator==(const monomial&) const = default;
    std::string str() const;
    static monomial parse(std::string_view s, int n);

private:
    std::vector<int> e_;
};

monomial gcd(const monomial& a, const monomial& b);
monomial lcm(const monomial& a, const monomial& b);

// Graded order: total degree first, then lexicographic with x1 > x2 > ...
struct grlex_greater {
    bool operator()(const monomial& a, const monomial& b) const;
};

struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class polynomial {
public:
    using term_map = std::map<monomial, rational, grlex_greater>;

    polynomial() = default;  // the zero polynomial with undetermined n
    explicit polynomial(int n) : n_(n) {}
    polynomial(const monomial& m, rational c = 1);
    static polynomial constant(int n, rational c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const term_map& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    bool is_polynomial() const;
    bool is_homogeneous() const;
    int degree() const;  // total degree of a homogeneous nonzero polynomial

    void add_term(const monomial& m, const rational& c);
    polynomial& operator+=(const polynomial& o);
    polynomial& operator-=(const polynomial& o);
    polynomial& operator*=(const rational& c);
    polynomial& operator*=(const monomial& m);
    polynomial operator-() const;
    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
    friend polynomial operator*(const polynomial& a, const polynomial& b);
    friend polynomial operator*(polynomial a, const rational& c) { return a *= c; }
    friend polynomial operator*(polynomial a, const monomial& m) { return a *= m; }

    bool operator==(const polynomial& o) const { return terms_ == o.terms_; }

    std::string str() const;
    static polynomial parse(std::string_view s, int n);

private:
    void adopt(int n);
    int n_ = 0;
    term_map terms_;
};

}  // namespace hookdg
