#pragma once

#include "hookdg/element.hpp"

#include <cstdint>
#include <map>

namespace hookdg {

std::uint64_t binomial(long long n, long long k);

// semistandard tableaux with |column| = a and |row| = b-1, in (corner, column, row) order
std::vector<tableau> enumerate_l_basis(int n, int a, int b);
std::uint64_t schur_rank(int n, int a, int b);

// rewrite an arbitrary hook filling over the semistandard basis
element straighten(const tableau& t, const polynomial& coeff, int n);
element straighten(const tableau& t, int n);

/* Oracle: the image of a tableau in (wedge^a F) (x) S_b under the Koszul
 * comultiplication followed by multiplication into the symmetric part.
 */
struct wedge_sym_element {
    std::map<std::pair<std::vector<int>, std::vector<int>>, rational> terms;
    void add(std::vector<int> wedge, std::vector<int> sym, const rational& c);
    bool operator==(const wedge_sym_element&) const = default;
};

wedge_sym_element kappa_embed(const tableau& t);
wedge_sym_element kappa_embed(const element& e);  // coefficients must be constants

}  // namespace hookdg
