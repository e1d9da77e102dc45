#include "hookdg/ek_complex.hpp"

#include "hookdg/l_complex.hpp"
#include "hookdg/schur.hpp"

#include <algorithm>

namespace hookdg {

namespace {

std::vector<std::vector<int>> subsets(int lo, int hi, int size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, lo);
    return out;
}

std::vector<int> tail(const std::vector<int>& v, size_t from = 1)
{
    return {v.begin() + static_cast<long>(std::min(from, v.size())), v.end()};
}

std::vector<int> drop_last(const std::vector<int>& v)
{
    return {v.begin(), v.end() - (v.empty() ? 0 : 1)};
}

std::vector<int> cons(int x, const std::vector<int>& v)
{
    std::vector<int> r{x};
    r.insert(r.end(), v.begin(), v.end());
    return r;
}

bool contains(const std::vector<int>& v, int x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::vector<tableau> ek_basis(int n, int d, int k)
{
    if (k < 0 || k > n)
        throw std::out_of_range("EK degree out of range");
    if (k == 0)
        return {tableau{}};
    std::vector<tableau> out;
    for (const auto& r : enumerate_l_basis(n, 0, d)) {
        std::vector<int> row = r.content();
        for (auto& c : subsets(1, row.back() - 1, k - 1))
            out.push_back(tableau{std::move(c), row});
    }
    std::sort(out.begin(), out.end());
    return out;
}

signed_tableau ek_normalize(tableau t)
{
    std::sort(t.row.begin(), t.row.end());
    int s = sort_sign(t.col);
    if (s == 0 || (!t.col.empty() && (t.row.empty() || t.col.back() >= t.row.back())))
        return {0, {}};
    return {s, std::move(t)};
}

element ek_element(std::vector<int> col, std::vector<int> row, const polynomial& c)
{
    element e(complex_kind::EK, c.nvars());
    signed_tableau s = ek_normalize(tableau{std::move(col), std::move(row)});
    if (s.sign != 0)
        e.add(s.t, c * rational(s.sign));
    return e;
}

element diff_ek(const element& e)
{
    const int n = e.nvars();
    element r(complex_kind::EK, n);
    for (const auto& [t, c] : e.terms()) {
        if (t.row.empty())
            throw std::invalid_argument("diff_ek of a degree-0 element");
        if (t.col.empty()) {
            r.add(tableau{}, c * monomial::of_indices(n, t.row));
            continue;
        }
        // both sums carry an overall minus sign relative to the usual display
        const int jd = t.row.back();
        for (size_t l = 0; l < t.col.size(); ++l) {
            const int il = t.col[l];
            std::vector<int> col = t.col;
            col.erase(col.begin() + static_cast<long>(l));
            rational sgn = l % 2 ? -1 : 1;  // (-1)^{l+1} with l 1-based
            r += ek_element(col, t.row, c * monomial::var(n, il) * sgn);
            std::vector<int> row = drop_last(t.row);
            row.push_back(il);
            r += ek_element(col, row, c * monomial::var(n, jd) * -sgn);
        }
    }
    return r;
}

complex_descriptor ek_complex_build(int n, int d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("need n >= 1 and d >= 1");
    std::vector<std::vector<tableau>> bases;
    for (int k = 0; k <= n; ++k)
        bases.push_back(ek_basis(n, d, k));
    return build_descriptor(complex_kind::EK, n, d, power_of_maximal_ideal(n, d), bases, diff_ek);
}

/* classical form */

bool in_ideal(const monomial& m, const std::vector<monomial>& gens)
{
    return std::any_of(gens.begin(), gens.end(), [&](const monomial& g) { return g.divides(m); });
}

std::vector<monomial> minimalize(std::vector<monomial> gens)
{
    std::vector<monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i]) && (!(gens[j] == gens[i]) || j < i))
                redundant = true;
        if (!redundant)
            out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(), grlex_greater{});
    return out;
}

bool is_borel(const std::vector<monomial>& gens)
{
    if (gens.empty())
        throw std::invalid_argument("empty generator list");
    for (const auto& m : gens) {
        if (!m.is_nonnegative())
            throw std::invalid_argument("generators must be monomials");
        for (int j = 1; j <= m.nvars(); ++j) {
            if (m[j] == 0)
                continue;
            for (int i = 1; i < j; ++i)
                if (!in_ideal(m * monomial::var(m.nvars(), i) / monomial::var(m.nvars(), j), gens))
                    return false;
        }
    }
    return true;
}

std::pair<monomial, monomial> borel_begin(const monomial& g, const std::vector<monomial>& gens)
{
    for (const auto& u : gens) {
        if (!u.divides(g))
            continue;
        monomial v = g / u;
        if (v.is_identity() || u.max_index() <= v.min_index())
            return {u, v};
    }
    throw std::invalid_argument(g.str() + " is not in the ideal");
}

std::vector<ek_symbol> ek_symbols(const std::vector<monomial>& gens, int k)
{
    const int n = gens.at(0).nvars();
    if (k == 0)
        return {ek_symbol{monomial(n), {}}};
    std::vector<ek_symbol> out;
    for (const auto& m : gens)
        for (auto& J : subsets(1, m.max_index() - 1, k - 1))
            out.push_back({m, std::move(J)});
    std::sort(out.begin(), out.end());
    return out;
}

symbol_element ek_mu_term(const ek_symbol& s, int q, const std::vector<monomial>& gens)
{
    const int n = s.gen.nvars();
    symbol_element r(complex_kind::EK_classical, n);
    const int jq = s.J.at(static_cast<size_t>(q - 1));
    monomial g = s.gen * monomial::var(n, jq);
    monomial b = borel_begin(g, gens).first;
    std::vector<int> J = s.J;
    J.erase(J.begin() + (q - 1));
    if (!J.empty() && J.back() >= b.max_index())
        return r;  // not a basis symbol: the term vanishes
    r.add(ek_symbol{b, J}, polynomial(g / b));
    return r;
}

symbol_element diff_classical(const symbol_element& e, const std::vector<monomial>& gens)
{
    const int n = e.nvars();
    symbol_element r(complex_kind::EK_classical, n);
    for (const auto& [s, c] : e.terms()) {
        if (s.gen.is_identity())
            throw std::invalid_argument("differential of a degree-0 element");
        if (s.J.empty()) {
            r.add(ek_symbol{monomial(n), {}}, c * s.gen);
            continue;
        }
        // d = mu - partial in positive degree, matching the tableau form
        for (size_t q = 0; q < s.J.size(); ++q) {
            rational sgn = q % 2 ? -1 : 1;  // (-1)^{q+1} with q 1-based
            std::vector<int> J = s.J;
            J.erase(J.begin() + static_cast<long>(q));
            r.add(ek_symbol{s.gen, J}, c * monomial::var(n, s.J[q]) * sgn);
            symbol_element mu = ek_mu_term(s, static_cast<int>(q) + 1, gens);
            for (const auto& [t, m] : mu.terms())
                r.add(t, c * m * -sgn);
        }
    }
    return r;
}

complex_descriptor ek_classical_build(const std::vector<monomial>& raw)
{
    std::vector<monomial> gens = minimalize(raw);
    if (!is_borel(gens))
        throw std::invalid_argument("the ideal is not Borel-fixed");
    const int n = gens.front().nvars();
    int top = 0;
    std::vector<std::vector<ek_symbol>> bases;
    for (int k = 0; k <= n; ++k) {
        bases.push_back(ek_symbols(gens, k));
        if (!bases.back().empty())
            top = k;
    }
    bases.resize(static_cast<size_t>(top) + 1);
    int d = 0;
    for (const auto& g : gens)
        d = std::max(d, g.degree());
    return build_descriptor(complex_kind::EK_classical, n, d, gens, bases,
                            [&gens](const symbol_element& e) { return diff_classical(e, gens); });
}

symbol_element eta(const element& e)
{
    const int n = e.nvars();
    symbol_element r(complex_kind::EK_classical, n);
    for (const auto& [t, c] : e.terms())
        r.add(ek_symbol{monomial::of_indices(n, t.row), t.col}, c);
    return r;
}

element eta_inverse(const symbol_element& e)
{
    const int n = e.nvars();
    element r(complex_kind::EK, n);
    for (const auto& [s, c] : e.terms())
        r.add(tableau{s.J, s.gen.indices()}, c);
    return r;
}

/* Peeva's product */

namespace {

monomial begin_md(const monomial& g, int d)
{
    std::vector<int> idx = g.indices();
    idx.resize(static_cast<size_t>(d));
    return monomial::of_indices(g.nvars(), idx);
}

// multiset difference u / gcd(u, f) as a sorted index list
std::vector<int> quotient_indices(const monomial& u, const monomial& f)
{
    return (u / gcd(u, f)).indices();
}

}  // namespace

chain_data peeva_chains(const monomial& f, const monomial& g, int d)
{
    if (f.degree() != d || g.degree() != d || !f.is_nonnegative() || !g.is_nonnegative())
        throw std::invalid_argument("chains need minimal generators of m^d");
    monomial u = begin_md(lcm(f, g), d);
    chain_data c;
    c.s = quotient_indices(u, f);
    c.t = quotient_indices(u, g);
    c.f.push_back(f);
    for (int x : c.s)
        c.f.push_back(begin_md(c.f.back() * monomial::var(f.nvars(), x), d));
    c.g.push_back(g);
    for (int x : c.t)
        c.g.push_back(begin_md(c.g.back() * monomial::var(g.nvars(), x), d));
    return c;
}

namespace {

// (h1 / x_x) (h; X, x, Y), zero unless x > max(Y)
symbol_element base_rule(const monomial& h, const monomial& h1, const std::vector<int>& X, const std::vector<int>& Y,
                         int x)
{
    const int n = h.nvars();
    symbol_element r(complex_kind::EK_classical, n);
    if (!Y.empty() && x <= Y.back())
        return r;
    std::vector<int> idx = X;
    idx.push_back(x);
    idx.insert(idx.end(), Y.begin(), Y.end());
    int s = sort_sign(idx);
    if (s == 0 || idx.back() >= h.max_index())
        return r;
    r.add(ek_symbol{h, idx}, h1 / monomial::var(n, x), s);
    return r;
}

symbol_element peeva_basis(const ek_symbol& A, const ek_symbol& B, int d)
{
    const int n = A.gen.nvars();
    symbol_element r(complex_kind::EK_classical, n);
    if (A.gen.is_identity()) {
        r.add(B, polynomial::constant(n, 1));
        return r;
    }
    if (B.gen.is_identity()) {
        r.add(A, polynomial::constant(n, 1));
        return r;
    }
    const monomial& f = A.gen;
    const monomial& g = B.gen;
    if (f == g)
        return r;
    const auto& J = A.J;
    const auto& K = B.J;
    chain_data ch = peeva_chains(f, g, d);
    monomial fg = f * g;

    auto fsum = [&](size_t upto) {
        for (size_t i = 0; i < upto; ++i)
            r -= base_rule(ch.f[i], ch.f[i + 1], J, K, ch.s[i]) * (fg / (ch.f[i] * ch.f[i + 1]));
    };
    // the g-chain uses the mirrored rule (g_i; K, t, J) with the Koszul sign of the swap
    const rational sw = ((J.size() + 1) * (K.size() + 1)) % 2 ? -1 : 1;
    auto gsum = [&](size_t upto) {
        for (size_t i = 0; i < upto; ++i)
            r -= base_rule(ch.g[i], ch.g[i + 1], K, J, ch.t[i]) * (fg / (ch.g[i] * ch.g[i + 1])) * sw;
    };

    auto first_hit = [](const std::vector<int>& seq, const std::vector<int>& set) {
        for (size_t i = 0; i < seq.size(); ++i)
            if (contains(set, seq[i]))
                return static_cast<long>(i);
        return -1L;
    };
    long p = first_hit(ch.s, J);
    long q = first_hit(ch.t, K);
    if (p >= 0 && q >= 0)
        return r;
    if (p >= 0)
        fsum(static_cast<size_t>(p));
    else if (q >= 0)
        gsum(static_cast<size_t>(q));
    else {
        fsum(ch.s.size());
        gsum(ch.t.size());
    }
    return r;
}

}  // namespace

symbol_element peeva_product(const symbol_element& a, const symbol_element& b, int d)
{
    if (a.nvars() != b.nvars())
        throw dimension_mismatch("product of elements over different rings");
    symbol_element r(complex_kind::EK_classical, a.nvars());
    for (const auto& [s1, c1] : a.terms())
        for (const auto& [s2, c2] : b.terms()) {
            for (const auto* s : {&s1, &s2})
                if (!s->gen.is_identity() && s->gen.degree() != d)
                    throw std::invalid_argument("peeva product is defined on m^d only");
            r += peeva_basis(s1, s2, d) * (c1 * c2);
        }
    return audit_polynomial(r, "peeva product");
}

namespace {

int row_length(const element& a, const element& b)
{
    for (const auto* e : {&a, &b})
        for (const auto& t : e->terms())
            if (!t.first.row.empty())
                return static_cast<int>(t.first.row.size());
    return 1;
}

}  // namespace

element peeva_product(const element& a, const element& b)
{
    if (a.kind() != complex_kind::EK || b.kind() != complex_kind::EK)
        throw std::invalid_argument("peeva product needs EK tableau elements");
    return eta_inverse(peeva_product(eta(a), eta(b), row_length(a, b)));
}

/* recursive form */

element peeva_recursive_engine::E(std::vector<int> col, std::vector<int> row)
{
    return ek_element(std::move(col), std::move(row), polynomial::constant(n_, 1));
}

element peeva_recursive_engine::raise(const element& e, int x)
{
    element r(complex_kind::EK, n_);
    for (const auto& [t, c] : e.terms())
        r += ek_element(t.col, attach_row(t, x).row, c);
    return r;
}

element peeva_recursive_engine::row_times(const std::vector<int>& p, const element& e)
{
    element r(complex_kind::EK, n_);
    std::vector<int> ps = sorted(p);
    for (const auto& [t, c] : e.terms())
        r += row_times(ps, t) * c;
    return r;
}

element peeva_recursive_engine::row_times(const std::vector<int>& p, const tableau& t)
{
    auto key = std::make_pair(p, t);
    if (auto it = row_memo_.find(key); it != row_memo_.end())
        return it->second;

    const int n = n_;
    const auto& c = t.col;
    const auto& q = t.row;
    const int p1 = p.front(), q1 = q.front();
    const std::vector<int> prest = tail(p);
    element res(complex_kind::EK, n);

    if (p.size() == 1) {
        // d = 1: the exterior product e_p ^ e_c ^ e_q
        std::vector<int> S = cons(p1, c);
        S.insert(S.end(), q.begin(), q.end());
        int s = sort_sign(S);
        if (s != 0)
            res = E(drop_last(S), {S.back()}) * rational(s);
    }
    else if (c.empty() && p == q) {
    }
    else if (c.empty() && p1 > q1) {
        res = -row_times(q, tableau{{}, p});
    }
    else if (p1 == q1) {
        element inner = row_times(prest, E(c, tail(q)));
        res = raise(inner, p1) * monomial::var(n, p1);
    }
    else if (p1 < q1) {
        if (!contains(c, p1)) {
            res = E(cons(p1, c), q) * ratio(n, prest, {});
            element inner = row_times(prest, E(c, drop_last(q)));
            res += raise(inner, p1) * monomial::var(n, q.back());
        }
    }
    else {
        // p_1 > q_1 with a nonempty column: factor through T'' = (i_1, q_1..q_{d-1})
        std::vector<int> tpp = sorted(cons(c.front(), drop_last(q)));
        element x = row_times(p, E(tail(c), q));
        res = row_times(tpp, x) * ratio(n, {}, drop_last(q)) * rational(-1);
    }
    row_memo_.emplace(std::move(key), res);
    return res;
}

element peeva_recursive_engine::basis_product(const tableau& t1, const tableau& t2)
{
    const int a = hdegree(complex_kind::EK, t1);
    const int b = hdegree(complex_kind::EK, t2);
    if (a == 0)
        return element::of(complex_kind::EK, n_, t2);
    if (b == 0)
        return element::of(complex_kind::EK, n_, t1);
    if (a + b > n_)
        return element(complex_kind::EK, n_);
    auto key = std::make_pair(t1, t2);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    element res;
    if (a == 1)
        res = row_times(t1.row, t2);
    else if (b == 1)
        res = row_times(t2.row, t1) * rational(a % 2 ? -1 : 1);
    else {
        std::vector<int> tpp = sorted(cons(t1.col.front(), drop_last(t1.row)));
        element x = multiply(E(tail(t1.col), t1.row), element::of(complex_kind::EK, n_, t2));
        res = row_times(tpp, x) * ratio(n_, {}, drop_last(t1.row));
    }
    memo_.emplace(std::move(key), res);
    return res;
}

element peeva_recursive_engine::multiply(const element& a, const element& b)
{
    element r(complex_kind::EK, n_);
    for (const auto& [t1, c1] : a.terms())
        for (const auto& [t2, c2] : b.terms())
            r += basis_product(t1, t2) * (c1 * c2);
    return r;
}

element peeva_product_recursive(const element& a, const element& b)
{
    if (a.nvars() != b.nvars())
        throw dimension_mismatch("product of elements over different rings");
    if (a.kind() != complex_kind::EK || b.kind() != complex_kind::EK)
        throw std::invalid_argument("peeva product needs EK tableau elements");
    thread_local std::map<int, peeva_recursive_engine> engines;
    auto& eng = engines.try_emplace(a.nvars(), a.nvars()).first->second;
    return audit_polynomial(eng.multiply(a, b), "recursive peeva product");
}

}  // namespace hookdg
