#include "hookdg/l_complex.hpp"

#include <algorithm>

namespace hookdg {

std::vector<tableau> l_basis(int n, int d, int k)
{
    if (k == 0)
        return {tableau{}};
    return enumerate_l_basis(n, k - 1, d);
}

element diff_l(const element& e)
{
    const int n = e.nvars();
    element r(complex_kind::L, n);
    for (const auto& [t, c] : e.terms()) {
        if (t.col.empty())
            throw std::invalid_argument("diff_l of a degree-0 element");
        if (t.col.size() == 1) {
            r.add(tableau{}, c * monomial::of_indices(n, t.content()));
            continue;
        }
        for (size_t k = 0; k < t.col.size(); ++k) {
            tableau s = remove_entry(t, position::column, static_cast<int>(k) + 1);
            r += straighten(s, c * monomial::var(n, t.col[k]) * rational(k % 2 ? -1 : 1), n);
        }
    }
    return r;
}

complex_descriptor l_complex_build(int n, int d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("need n >= 1 and d >= 1");
    std::vector<std::vector<tableau>> bases;
    for (int k = 0; k <= n; ++k)
        bases.push_back(l_basis(n, d, k));
    return build_descriptor(complex_kind::L, n, d, power_of_maximal_ideal(n, d), bases, diff_l);
}

monomial ratio(int n, const std::vector<int>& num, const std::vector<int>& den)
{
    return monomial::of_indices(n, num) / monomial::of_indices(n, den);
}

namespace {

std::vector<int> tail(const std::vector<int>& v, size_t from = 1)
{
    return {v.begin() + static_cast<long>(std::min(from, v.size())), v.end()};
}

std::vector<int> cons(int x, const std::vector<int>& v)
{
    std::vector<int> r{x};
    r.insert(r.end(), v.begin(), v.end());
    return r;
}

std::vector<int> without_one(std::vector<int> v, int x)
{
    v.erase(std::find(v.begin(), v.end(), x));
    return v;
}

struct corner_term {
    int sign;
    int J;
    std::vector<int> c, r;
};

/* T written with its largest admissible corner: T itself when the last
 * column entry is already at least the last row entry, otherwise the
 * alternating sum obtained by moving j_d to the corner.
 */
std::vector<corner_term> max_corner_form(const tableau& t)
{
    const auto& col = t.col;
    const auto& row = t.row;
    const int k = static_cast<int>(col.size());
    if (row.empty() || col.back() >= row.back())
        return {{(k - 1) % 2 ? -1 : 1, col.back(), {col.begin(), col.end() - 1}, row}};
    std::vector<corner_term> out;
    const int jd = row.back();
    for (int l = 0; l < k; ++l) {
        std::vector<int> c = col;
        c.erase(c.begin() + l);
        std::vector<int> r(row.begin(), row.end() - 1);
        r.push_back(col[static_cast<size_t>(l)]);
        std::sort(r.begin(), r.end());
        out.push_back({l % 2 ? -1 : 1, jd, std::move(c), std::move(r)});
    }
    return out;
}

}  // namespace

element srinivasan_engine::L(std::vector<int> col, std::vector<int> row)
{
    tableau t;
    t.col = std::move(col);
    t.row = std::move(row);
    return straighten(t, n_);
}

element srinivasan_engine::raise(const element& e, int x)
{
    element r(complex_kind::L, n_);
    for (const auto& [t, c] : e.terms())
        r += straighten(attach_row(t, x), c, n_);
    return r;
}

element srinivasan_engine::row_times(const std::vector<int>& p, const element& e)
{
    element r(complex_kind::L, n_);
    std::vector<int> ps = sorted(p);
    for (const auto& [t, c] : e.terms())
        r += row_times(ps, t) * c;
    return r;
}

element srinivasan_engine::row_times(const std::vector<int>& p, const tableau& t)
{
    auto key = std::make_pair(p, t);
    if (auto it = row_memo_.find(key); it != row_memo_.end())
        return it->second;

    const int n = n_;
    const int k = static_cast<int>(t.col.size());
    const int p1 = p.front();
    const std::vector<int> prest = tail(p);
    element res(complex_kind::L, n);

    if (p.size() == 1) {
        // d = 1: the Koszul product
        res = L(cons(p1, t.col), {});
    }
    else if (k == 1) {
        // two degree-1 rows: put p_1 in the column against b, then recurse on d-1
        std::vector<int> q = t.content();
        int b = std::find(q.begin(), q.end(), p1) != q.end() ? p1 : q.back();
        std::vector<int> rest = without_one(q, b);
        res = L({p1, b}, rest) * ratio(n, prest, {});
        element inner = row_times(prest, tableau{{rest.front()}, tail(rest)});
        res += raise(inner, p1) * monomial::var(n, b);
    }
    else if (p1 > t.corner()) {
        // peel the corner: T = (1/x_row) (corner|row) · (T\i_1)
        element x = row_times(p, L(tail(t.col), t.row));
        res = row_times(cons(t.corner(), t.row), x) * ratio(n, {}, t.row) * rational(-1);
    }
    else {
        for (const auto& [sg, J, c, r] : max_corner_form(t)) {
            element term(complex_kind::L, n);
            if (p1 == r.front()) {
                element inner = row_times(prest, L(cons(J, c), without_one(r, p1)));
                term = raise(inner, p1) * monomial::var(n, p1);
            }
            else if (std::find(c.begin(), c.end(), p1) != c.end()) {
                continue;
            }
            else {
                std::vector<int> col{p1, J};
                col.insert(col.end(), c.begin(), c.end());
                term = L(col, r) * ratio(n, prest, {});
                bool blocked = !c.empty() && *std::max_element(c.begin(), c.end()) >= r.back();
                if (!blocked) {
                    element inner = row_times(prest, L(cons(r.back(), c), {r.begin(), r.end() - 1}));
                    term += raise(inner, p1) * monomial::var(n, J);
                }
            }
            res += term * rational(sg);
        }
    }
    row_memo_.emplace(std::move(key), res);
    return res;
}

element srinivasan_engine::basis_product(const tableau& t1, const tableau& t2)
{
    const int a = static_cast<int>(t1.col.size());
    const int b = static_cast<int>(t2.col.size());
    if (a == 0)
        return element::of(complex_kind::L, n_, t2);
    if (b == 0)
        return element::of(complex_kind::L, n_, t1);
    if (a + b > n_)
        return element(complex_kind::L, n_);
    auto key = std::make_pair(t1, t2);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    element res;
    if (a == 1)
        res = row_times(t1.content(), t2);
    else if (b == 1)
        res = row_times(t2.content(), t1) * rational(a % 2 ? -1 : 1);
    else {
        element x = multiply(L(tail(t1.col), t1.row), element::of(complex_kind::L, n_, t2));
        res = row_times(cons(t1.corner(), t1.row), x) * ratio(n_, {}, t1.row);
    }
    memo_.emplace(std::move(key), res);
    return res;
}

element srinivasan_engine::multiply(const element& a, const element& b)
{
    element r(complex_kind::L, n_);
    for (const auto& [t1, c1] : a.terms())
        for (const auto& [t2, c2] : b.terms())
            r += basis_product(t1, t2) * (c1 * c2);
    return r;
}

namespace {

int common_n(const element& a, const element& b)
{
    if (a.nvars() != b.nvars())
        throw dimension_mismatch("product of elements over different rings");
    if (a.kind() != b.kind())
        throw std::invalid_argument("product of elements of different complexes");
    return a.nvars();
}

srinivasan_engine& engine(int n)
{
    thread_local std::map<int, srinivasan_engine> engines;
    return engines.try_emplace(n, n).first->second;
}

}  // namespace

element srinivasan_product(const element& a, const element& b)
{
    int n = common_n(a, b);
    return audit_polynomial(engine(n).multiply(a, b), "srinivasan product");
}

namespace {

struct printed_engine {
    int n;
    int depth = 0;

    element L(const tableau& t) { return straighten(t, n); }

    element mul(const element& a, const element& b)
    {
        element r(complex_kind::L, n);
        for (const auto& [t1, c1] : a.terms())
            for (const auto& [t2, c2] : b.terms())
                r += basis(t1, t2) * (c1 * c2);
        return r;
    }

    element basis(const tableau& t1, const tableau& t2)
    {
        const int a = static_cast<int>(t1.col.size());
        const int b = static_cast<int>(t2.col.size());
        if (a == 0)
            return element::of(complex_kind::L, n, t2);
        if (b == 0)
            return element::of(complex_kind::L, n, t1);
        if (a + b > n)
            return element(complex_kind::L, n);
        if (++depth > 200)
            throw std::runtime_error("printed case split does not terminate here");
        element res = basis_inner(t1, t2, a, b);
        --depth;
        return res;
    }

    element basis_inner(const tableau& t1, const tableau& t2, int a, int b)
    {
        if (a == 1 && b == 1) {
            std::vector<int> p = t1.content(), q = t2.content();
            element res = L(tableau{cons(p[0], t2.col), t2.row}) * ratio(n, tail(p), {});
            if (p.size() > 1) {
                element inner = basis(tableau{{p[1]}, tail(p, 2)}, tableau{{q[1]}, tail(q, 2)});
                element up(complex_kind::L, n);
                for (const auto& [t, c] : inner.terms())
                    up += straighten(attach_row(t, p[0]), c, n);
                res += up * monomial::var(n, t2.corner());
            }
            return res;
        }
        if (a == 1) {
            std::vector<int> p = t1.content();
            int p1 = p[0], i1 = t2.corner();
            bool has_q2 = !t2.row.empty();
            int q2 = has_q2 ? t2.row.front() : 0;
            if (p1 <= i1 && (!has_q2 || i1 <= q2))
                return L(tableau{cons(p1, t2.col), t2.row}) * ratio(n, tail(p), {});
            if (p1 <= i1) {
                element res = L(tableau{cons(p1, t2.col), t2.row}) * ratio(n, tail(p), {});
                std::vector<int> r = tail(t2.row);
                r.push_back(p1);
                element sub = L(tableau{t2.col, r});
                res += mul(element::of(complex_kind::L, n, t1), sub) * ratio(n, {q2}, {p1});
                return res;
            }
            element inner = mul(element::of(complex_kind::L, n, t1), L(tableau{tail(t2.col), t2.row}));
            return mul(element::of(complex_kind::L, n, tableau{{i1}, t2.row}), inner) * ratio(n, {}, t2.row) *
                   rational(-1);
        }
        if (b == 1)
            return basis(t2, t1) * rational(a % 2 ? -1 : 1);
        element inner = mul(L(tableau{tail(t1.col), t1.row}), element::of(complex_kind::L, n, t2));
        return mul(element::of(complex_kind::L, n, tableau{{t1.corner()}, t1.row}), inner) * ratio(n, {}, t1.row);
    }
};

}  // namespace

element srinivasan_product_printed(const element& a, const element& b)
{
    printed_engine e{common_n(a, b)};
    return audit_polynomial(e.mul(a, b), "printed srinivasan product");
}

}  // namespace hookdg
