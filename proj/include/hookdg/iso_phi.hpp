#pragma once

#include "hookdg/ek_complex.hpp"
#include "hookdg/l_complex.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace hookdg {

using qmatrix = Eigen::Matrix<rational, Eigen::Dynamic, Eigen::Dynamic>;

qmatrix to_qmatrix(const std::vector<std::vector<rational>>& rows);
size_t exact_rank(const qmatrix& m);
rational exact_determinant(const qmatrix& m);
qmatrix exact_inverse(const qmatrix& m);  // throws on a singular matrix
bool is_integral(const qmatrix& m);

// (-1)^{k-1} as displayed, or the alternate (-1)^k
enum class phi_sign { display, alternate };

// EK tableau form -> L: move j_d to the corner, sign, straighten
element phi(const element& e, phi_sign sign = phi_sign::display);

struct chain_map_descriptor {
    int n = 0, d = 0;
    phi_sign sign = phi_sign::display;
    std::vector<qmatrix> degree;  // rows: L basis, columns: EK basis
};

qmatrix phi_matrix(int n, int d, int k, phi_sign sign = phi_sign::display);
qmatrix phi_inverse(int n, int d, int k, phi_sign sign = phi_sign::display);

// true when phi(d_EK T) = d_L phi(T) for every EK basis element
bool phi_commutes(int n, int d, phi_sign sign);

/* Builds the degree-wise matrices, settling the sign by the chain-map test:
 * the displayed sign is tried first and the alternate only if it fails.
 */
struct phi_build {
    chain_map_descriptor map;
    bool display_verified = false;
    bool alternate_verified = false;
};
phi_build build_phi(int n, int d);

}  // namespace hookdg
