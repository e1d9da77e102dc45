#pragma once

#include "hookdg/element.hpp"

#include <atomic>
#include <map>
#include <stdexcept>

namespace hookdg {

struct poly_matrix {
    int rows = 0, cols = 0;
    std::vector<polynomial> a;  // row-major

    poly_matrix() = default;
    poly_matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}
    polynomial& at(int i, int j) { return a[static_cast<size_t>(i * cols + j)]; }
    const polynomial& at(int i, int j) const { return a[static_cast<size_t>(i * cols + j)]; }
};

poly_matrix operator*(const poly_matrix& x, const poly_matrix& y);
bool is_zero(const poly_matrix& m);

/* Ordered bases and differential matrices of one resolution. diff[k] maps
 * degree k to degree k-1 (rows index the target basis); diff[0] is empty.
 */
struct complex_descriptor {
    complex_kind kind = complex_kind::L;
    int n = 0, d = 0;
    std::vector<monomial> ideal;                     // minimal generators of the resolved ideal
    std::vector<std::vector<std::string>> labels;    // per degree
    std::vector<std::vector<monomial>> contents;     // multidegree of each generator
    std::vector<poly_matrix> diff;

    int length() const { return static_cast<int>(labels.size()) - 1; }
    std::vector<size_t> ranks() const;
};

std::vector<monomial> power_of_maximal_ideal(int n, int d);

template <class Key, class Diff>
complex_descriptor build_descriptor(complex_kind kind, int n, int d, std::vector<monomial> ideal,
                                    const std::vector<std::vector<Key>>& bases, Diff diff)
{
    complex_descriptor c;
    c.kind = kind;
    c.n = n;
    c.d = d;
    c.ideal = std::move(ideal);
    std::vector<std::map<Key, int>> index(bases.size());
    for (size_t k = 0; k < bases.size(); ++k) {
        c.labels.emplace_back();
        c.contents.emplace_back();
        for (size_t j = 0; j < bases[k].size(); ++j) {
            const Key& key = bases[k][j];
            c.labels.back().push_back(basic_element<Key>::is_unit(key) ? "1" : to_text(key));
            c.contents.back().push_back(k == 0 ? monomial(n) : key_content(key, n));
            index[k][key] = static_cast<int>(j);
        }
    }
    c.diff.emplace_back();
    for (size_t k = 1; k < bases.size(); ++k) {
        poly_matrix m(static_cast<int>(bases[k - 1].size()), static_cast<int>(bases[k].size()));
        for (size_t j = 0; j < bases[k].size(); ++j) {
            auto img = diff(basic_element<Key>::of(kind, n, bases[k][j]));
            for (const auto& [key, coef] : img.terms()) {
                auto it = index[k - 1].find(key);
                if (it == index[k - 1].end())
                    throw std::logic_error("differential leaves the basis at " + to_text(key));
                m.at(it->second, static_cast<int>(j)) = coef;
            }
        }
        c.diff.push_back(std::move(m));
    }
    return c;
}

struct laurent_leak : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// every public product result passes through here
std::atomic<std::uint64_t>& audited_products();
template <class Key>
const basic_element<Key>& audit_polynomial(const basic_element<Key>& e, const char* what)
{
    audited_products().fetch_add(1, std::memory_order_relaxed);
    if (!e.is_polynomial())
        throw laurent_leak(std::string(what) + " left the polynomial ring: " + e.str());
    return e;
}

}  // namespace hookdg
