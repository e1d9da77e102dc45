#include "hookdg/schur.hpp"

#include <mutex>
#include <shared_mutex>

namespace hookdg {

std::uint64_t binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t schur_rank(int n, int a, int b)
{
    return binomial(n + b - 1, a + b) * binomial(a + b - 1, a);
}

namespace {

// all lists of length `len` from [lo, hi]; strictly increasing or weakly increasing
void lists(int lo, int hi, int len, bool strict, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    int from = cur.empty() ? lo : cur.back() + (strict ? 1 : 0);
    for (int v = from; v <= hi; ++v) {
        cur.push_back(v);
        lists(lo, hi, len, strict, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> lists(int lo, int hi, int len, bool strict)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    lists(lo, hi, len, strict, cur, out);
    return out;
}

}  // namespace

std::vector<tableau> enumerate_l_basis(int n, int a, int b)
{
    std::vector<tableau> out;
    if (n < 1 || a < 0 || b < 1)
        return out;
    for (int c = 1; c <= n; ++c)
        for (const auto& column : lists(c + 1, n, a, true))
            for (const auto& row : lists(c, n, b - 1, false))
                out.push_back(make_tableau(c, column, row));
    return out;
}

namespace {

struct straighten_cache {
    std::shared_mutex mu;
    std::map<std::pair<int, tableau>, element> memo;
};

straighten_cache& cache()
{
    static straighten_cache c;
    return c;
}

// straightening of a normalized tableau with unit coefficient
element straighten_canonical(const tableau& t, int n)
{
    if (t.row.empty() || t.corner() <= t.row.front())
        return element::of(complex_kind::L, n, t);
    auto& c = cache();
    auto key = std::make_pair(n, t);
    {
        std::shared_lock lock(c.mu);
        auto it = c.memo.find(key);
        if (it != c.memo.end())
            return it->second;
    }
    // pivot on the least row entry j1; each summand has the smaller corner j1
    element r(complex_kind::L, n);
    int j1 = t.row.front();
    for (size_t k = 0; k < t.col.size(); ++k) {
        tableau s;
        s.col.push_back(j1);
        for (size_t l = 0; l < t.col.size(); ++l)
            if (l != k)
                s.col.push_back(t.col[l]);
        s.row.assign(t.row.begin() + 1, t.row.end());
        s.row.push_back(t.col[k]);
        signed_tableau ns = normalize(std::move(s));
        if (ns.sign == 0)
            continue;
        element part = straighten_canonical(ns.t, n);
        r += part * rational((k % 2 ? -1 : 1) * ns.sign);
    }
    std::unique_lock lock(c.mu);
    c.memo.emplace(key, r);
    return r;
}

}  // namespace

element straighten(const tableau& t, const polynomial& coeff, int n)
{
    if (t.col.empty())
        throw std::invalid_argument("an L tableau needs a corner");
    signed_tableau s = normalize(t);
    if (s.sign == 0 || coeff.is_zero())
        return element(complex_kind::L, n);
    return straighten_canonical(s.t, n) * (coeff * rational(s.sign));
}

element straighten(const tableau& t, int n)
{
    return straighten(t, polynomial::constant(n, 1), n);
}

void wedge_sym_element::add(std::vector<int> wedge, std::vector<int> sym, const rational& c)
{
    int s = sort_sign(wedge);
    if (s == 0 || c == 0)
        return;
    std::sort(sym.begin(), sym.end());
    auto key = std::make_pair(std::move(wedge), std::move(sym));
    auto [it, fresh] = terms.try_emplace(key, c * s);
    if (!fresh) {
        it->second += c * s;
        if (it->second == 0)
            terms.erase(it);
    }
}

wedge_sym_element kappa_embed(const tableau& t)
{
    if (t.col.empty())
        throw std::invalid_argument("kappa_embed needs a corner");
    wedge_sym_element r;
    for (size_t k = 0; k < t.col.size(); ++k) {
        std::vector<int> w;
        for (size_t l = 0; l < t.col.size(); ++l)
            if (l != k)
                w.push_back(t.col[l]);
        std::vector<int> sym(t.row);
        sym.push_back(t.col[k]);
        r.add(std::move(w), std::move(sym), k % 2 ? -1 : 1);
    }
    return r;
}

wedge_sym_element kappa_embed(const element& e)
{
    wedge_sym_element r;
    for (const auto& [t, c] : e.terms()) {
        if (c.size() != 1 || !c.terms().begin()->first.is_identity())
            throw std::invalid_argument("kappa_embed needs constant coefficients");
        rational q = c.terms().begin()->second;
        wedge_sym_element w = kappa_embed(t);
        for (const auto& [k, v] : w.terms)
            r.add(k.first, k.second, v * q);
    }
    return r;
}

}  // namespace hookdg
