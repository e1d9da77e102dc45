#include "hookdg/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hookdg {

std::string to_string(const rational& q)
{
    return q.str();
}

static std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

static bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

rational parse_rational(std::string_view s)
{
    s = trim(s);
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
        throw std::invalid_argument("bad rational: '" + std::string(s) + "'");
    boost::multiprecision::mpz_int a(std::string(num[0] == '+' ? num.substr(1) : num));
    boost::multiprecision::mpz_int b(std::string(den[0] == '+' ? den.substr(1) : den));
    if (b == 0)
        throw std::invalid_argument("zero denominator");
    return rational(a, b);
}

/* monomial */

monomial monomial::var(int n, int i, int power)
{
    if (i < 1 || i > n)
        throw std::out_of_range("variable index out of range");
    monomial m(n);
    m.e_[static_cast<size_t>(i - 1)] = power;
    return m;
}

monomial monomial::of_indices(int n, const std::vector<int>& idx)
{
    monomial m(n);
    for (int i : idx) {
        if (i < 1 || i > n)
            throw std::out_of_range("variable index out of range");
        ++m.e_[static_cast<size_t>(i - 1)];
    }
    return m;
}

int monomial::degree() const
{
    int s = 0;
    for (int x : e_)
        s += x;
    return s;
}

bool monomial::is_identity() const
{
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

bool monomial::is_nonnegative() const
{
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
}

bool monomial::divides(const monomial& o) const
{
    if (o.nvars() != nvars())
        throw dimension_mismatch("monomial dimension mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i])
            return false;
    return true;
}

int monomial::max_index() const
{
    if (!is_nonnegative())
        throw std::domain_error("support extrema need nonnegative exponents");
    for (size_t i = e_.size(); i-- > 0;)
        if (e_[i] > 0)
            return static_cast<int>(i) + 1;
    throw std::domain_error("identity monomial has empty support");
}

int monomial::min_index() const
{
    if (!is_nonnegative())
        throw std::domain_error("support extrema need nonnegative exponents");
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0)
            return static_cast<int>(i) + 1;
    throw std::domain_error("identity monomial has empty support");
}

std::vector<int> monomial::indices() const
{
    std::vector<int> r;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 0)
            throw std::domain_error("indices of a Laurent monomial");
        r.insert(r.end(), static_cast<size_t>(e_[i]), static_cast<int>(i) + 1);
    }
    return r;
}

monomial& monomial::operator*=(const monomial& o)
{
    if (o.nvars() != nvars())
        throw dimension_mismatch("monomial dimension mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

monomial& monomial::operator/=(const monomial& o)
{
    if (o.nvars() != nvars())
        throw dimension_mismatch("monomial dimension mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

std::string monomial::str() const
{
    std::string s;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(i + 1);
        if (e_[i] != 1)
            s += '^' + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

monomial monomial::parse(std::string_view s, int n)
{
    monomial m(n);
    s = trim(s);
    if (s == "1")
        return m;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t star = s.find('*', pos);
        std::string_view f = trim(s.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
        if (f.size() < 2 || f[0] != 'x')
            throw std::invalid_argument("bad monomial factor: '" + std::string(f) + "'");
        auto caret = f.find('^');
        std::string_view idx = f.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
        int power = 1;
        if (caret != std::string_view::npos) {
            std::string_view p = f.substr(caret + 1);
            if (!is_integer_text(p))
                throw std::invalid_argument("bad exponent: '" + std::string(p) + "'");
            power = std::stoi(std::string(p));
        }
        if (!is_integer_text(idx) || idx[0] == '-' || idx[0] == '+')
            throw std::invalid_argument("bad variable: '" + std::string(f) + "'");
        int i = std::stoi(std::string(idx));
        if (i < 1 || i > n)
            throw std::out_of_range("variable x" + std::to_string(i) + " outside 1.." + std::to_string(n));
        m.e_[static_cast<size_t>(i - 1)] += power;
        if (star == std::string_view::npos)
            break;
        pos = star + 1;
    }
    return m;
}

monomial gcd(const monomial& a, const monomial& b)
{
    if (a.nvars() != b.nvars())
        throw dimension_mismatch("monomial dimension mismatch");
    if (!a.is_nonnegative() || !b.is_nonnegative())
        throw std::domain_error("gcd of Laurent monomials");
    std::vector<int> e(a.exponents());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(e[i], b.exponents()[i]);
    return monomial(std::move(e));
}

monomial lcm(const monomial& a, const monomial& b)
{
    if (a.nvars() != b.nvars())
        throw dimension_mismatch("monomial dimension mismatch");
    if (!a.is_nonnegative() || !b.is_nonnegative())
        throw std::domain_error("lcm of Laurent monomials");
    std::vector<int> e(a.exponents());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(e[i], b.exponents()[i]);
    return monomial(std::move(e));
}

bool grlex_greater::operator()(const monomial& a, const monomial& b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    return a.exponents() > b.exponents();
}

/* polynomial */

polynomial::polynomial(const monomial& m, rational c) : n_(m.nvars())
{
    if (c != 0)
        terms_.emplace(m, std::move(c));
}

polynomial polynomial::constant(int n, rational c)
{
    return polynomial(monomial(n), std::move(c));
}

void polynomial::adopt(int n)
{
    if (n_ == 0)
        n_ = n;
    else if (n != 0 && n != n_)
        throw dimension_mismatch("polynomial dimension mismatch");
}

bool polynomial::is_polynomial() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_nonnegative(); });
}

bool polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

int polynomial::degree() const
{
    if (terms_.empty())
        throw std::domain_error("degree of the zero polynomial");
    if (!is_homogeneous())
        throw std::domain_error("degree of an inhomogeneous polynomial");
    return terms_.begin()->first.degree();
}

void polynomial::add_term(const monomial& m, const rational& c)
{
    adopt(m.nvars());
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

polynomial& polynomial::operator+=(const polynomial& o)
{
    adopt(o.n_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

polynomial& polynomial::operator-=(const polynomial& o)
{
    adopt(o.n_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

polynomial& polynomial::operator*=(const rational& c)
{
    if (c == 0)
        terms_.clear();
    else
        for (auto& t : terms_)
            t.second *= c;
    return *this;
}

polynomial& polynomial::operator*=(const monomial& m)
{
    adopt(m.nvars());
    term_map out;
    for (auto& [k, c] : terms_)
        out.emplace_hint(out.end(), k * m, std::move(c));  // order is preserved by a monomial shift
    terms_ = std::move(out);
    return *this;
}

polynomial polynomial::operator-() const
{
    polynomial r(*this);
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

polynomial operator*(const polynomial& a, const polynomial& b)
{
    polynomial r(a.n_ ? a.n_ : b.n_);
    if (a.n_ && b.n_ && a.n_ != b.n_)
        throw dimension_mismatch("polynomial dimension mismatch");
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

std::string polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        rational a = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (m.is_identity())
            s += to_string(a);
        else if (a == 1)
            s += m.str();
        else
            s += to_string(a) + "*" + m.str();
    }
    return s;
}

// Splits "a - b + c" into signed terms; a '-' right after '^' belongs to an exponent.
static std::vector<std::pair<int, std::string_view>> split_terms(std::string_view s)
{
    std::vector<std::pair<int, std::string_view>> out;
    int sign = 1;
    size_t start = 0;
    bool seen = false;
    char prev = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        char c = i < s.size() ? s[i] : '+';
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        bool boundary = (c == '+' || c == '-') && prev != '^' && prev != '*' && prev != '/';
        if (i == s.size() || boundary) {
            std::string_view t = trim(s.substr(start, i - start));
            if (!t.empty()) {
                out.emplace_back(sign, t);
                seen = true;
            }
            else if (i < s.size() && seen)
                throw std::invalid_argument("dangling operator in '" + std::string(s) + "'");
            if (i < s.size())
                sign = (t.empty() ? sign : 1) * (c == '-' ? -1 : 1);
            start = i + 1;
        }
        prev = c;
    }
    return out;
}

polynomial polynomial::parse(std::string_view s, int n)
{
    polynomial p(n);
    s = trim(s);
    if (s.empty())
        throw std::invalid_argument("empty polynomial text");
    for (auto [sign, t] : split_terms(s)) {
        rational c = sign;
        monomial m(n);
        size_t pos = 0;
        while (true) {
            size_t star = t.find('*', pos);
            std::string_view f = trim(t.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
            if (!f.empty() && f[0] == 'x')
                m *= monomial::parse(f, n);
            else
                c *= parse_rational(f);
            if (star == std::string_view::npos)
                break;
            pos = star + 1;
        }
        p.add_term(m, c);
    }
    return p;
}

}  // namespace hookdg
