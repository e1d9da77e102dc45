#pragma once

#include "hookdg/complex.hpp"

#include <map>
#include <optional>

namespace hookdg {

/* Tableau form. A degree-k generator has k-1 entries in the column block
 * (corner first) and a row of length d; degree 1 is a pure row.
 */
std::vector<tableau> ek_basis(int n, int d, int k);  // k = 0 gives the unit

// sign-tracked normal form; zero for a repeated column entry or max(col) >= max(row)
signed_tableau ek_normalize(tableau t);
element ek_element(std::vector<int> col, std::vector<int> row, const polynomial& c);

element diff_ek(const element& e);
complex_descriptor ek_complex_build(int n, int d);

/* Classical form for a Borel-fixed ideal. */
bool is_borel(const std::vector<monomial>& gens);
std::vector<monomial> minimalize(std::vector<monomial> gens);
bool in_ideal(const monomial& m, const std::vector<monomial>& gens);
std::pair<monomial, monomial> borel_begin(const monomial& g, const std::vector<monomial>& gens);

std::vector<ek_symbol> ek_symbols(const std::vector<monomial>& gens, int k);
// the q-th term of mu on (m; J), 1-based: (m x_{j_q} / b(m x_{j_q})) (b(m x_{j_q}); J \ j_q)
symbol_element ek_mu_term(const ek_symbol& s, int q, const std::vector<monomial>& gens);
symbol_element diff_classical(const symbol_element& e, const std::vector<monomial>& gens);
complex_descriptor ek_classical_build(const std::vector<monomial>& gens);

symbol_element eta(const element& e);
element eta_inverse(const symbol_element& e);

struct chain_data {
    std::vector<int> s, t;
    std::vector<monomial> f, g;
};
chain_data peeva_chains(const monomial& f, const monomial& g, int d);

/* Peeva's product on (m^d) in classical form: five cases over the chains
 * joining the two generators.
 */
symbol_element peeva_product(const symbol_element& a, const symbol_element& b, int d);
// the same product moved to the tableau form through eta
element peeva_product(const element& a, const element& b);

/* The recursion in tableau form: a degree-1 row times T' expands along
 * p_1 versus q_1; higher degrees peel the first column entry.
 */
class peeva_recursive_engine {
public:
    explicit peeva_recursive_engine(int n) : n_(n) {}
    element basis_product(const tableau& a, const tableau& b);
    element multiply(const element& a, const element& b);
    element row_times(const std::vector<int>& p, const tableau& t);

private:
    element row_times(const std::vector<int>& p, const element& e);
    element raise(const element& e, int x);
    element E(std::vector<int> col, std::vector<int> row);

    int n_;
    std::map<std::pair<std::vector<int>, tableau>, element> row_memo_;
    std::map<std::pair<tableau, tableau>, element> memo_;
};

element peeva_product_recursive(const element& a, const element& b);

}  // namespace hookdg
