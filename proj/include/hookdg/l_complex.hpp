#pragma once

#include "hookdg/complex.hpp"
#include "hookdg/schur.hpp"

#include <map>

namespace hookdg {

// basis of L(psi,d) in homological degree k; degree 0 is the unit
std::vector<tableau> l_basis(int n, int d, int k);

element diff_l(const element& e);
complex_descriptor l_complex_build(int n, int d);

// x^num / x^den as a Laurent monomial
monomial ratio(int n, const std::vector<int>& num, const std::vector<int>& den);

/* Srinivasan's product. Degree-1 factors are handled by a row rule that
 * expands the second factor around its largest corner; higher degrees peel
 * off the corner of the first factor. Intermediate coefficients are Laurent.
 */
class srinivasan_engine {
public:
    explicit srinivasan_engine(int n) : n_(n) {}

    element basis_product(const tableau& a, const tableau& b);
    element multiply(const element& a, const element& b);
    // the degree-1 row p (sorted) times a semistandard tableau
    element row_times(const std::vector<int>& p, const tableau& t);

private:
    element row_times(const std::vector<int>& p, const element& e);
    element raise(const element& e, int x);  // attach x to every row, straighten
    element L(std::vector<int> col, std::vector<int> row);

    int n_;
    std::map<std::pair<std::vector<int>, tableau>, element> row_memo_;
    std::map<std::pair<tableau, tableau>, element> memo_;
};

element srinivasan_product(const element& a, const element& b);

/* The case split exactly as printed, with the 1x1 rule read as
 * (T\p_1)·(T'\i_1). Kept for comparison: it agrees with the product above
 * when n <= 2 or d = 1, and breaks the Leibniz rule, commutativity and
 * associativity from n = 3, d = 2 on.
 */
element srinivasan_product_printed(const element& a, const element& b);

}  // namespace hookdg
