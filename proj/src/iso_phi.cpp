#include "hookdg/iso_phi.hpp"

#include <map>

namespace hookdg {

qmatrix to_qmatrix(const std::vector<std::vector<rational>>& rows)
{
    qmatrix m(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

// exact arithmetic: any nonzero pivot is acceptable
static Eigen::FullPivLU<qmatrix> exact_lu(const qmatrix& m)
{
    Eigen::FullPivLU<qmatrix> lu(m);
    lu.setThreshold(rational(0));
    return lu;
}

size_t exact_rank(const qmatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return static_cast<size_t>(exact_lu(m).rank());
}

rational exact_determinant(const qmatrix& m)
{
    if (m.rows() != m.cols())
        throw dimension_mismatch("determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    return exact_lu(m).determinant();
}

qmatrix exact_inverse(const qmatrix& m)
{
    if (m.rows() != m.cols())
        throw dimension_mismatch("inverse of a non-square matrix");
    if (m.rows() == 0)
        return m;
    auto lu = exact_lu(m);
    if (!lu.isInvertible())
        throw std::domain_error("singular matrix");
    return lu.inverse();
}

bool is_integral(const qmatrix& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (denominator(m(i, j)) != 1)
                return false;
    return true;
}

element phi(const element& e, phi_sign sign)
{
    const int n = e.nvars();
    element r(complex_kind::L, n);
    for (const auto& [t, c] : e.terms()) {
        int k = hdegree(complex_kind::EK, t);
        if (k == 0) {
            r.add(t, c);
            continue;
        }
        tableau s;
        s.col.push_back(t.row.back());
        s.col.insert(s.col.end(), t.col.begin(), t.col.end());
        s.row.assign(t.row.begin(), t.row.end() - 1);
        int sg = ((k - 1) % 2 ? -1 : 1) * (sign == phi_sign::display ? 1 : -1);
        r += straighten(s, c * rational(sg), n);
    }
    return r;
}

qmatrix phi_matrix(int n, int d, int k, phi_sign sign)
{
    std::vector<tableau> lb = l_basis(n, d, k), eb = ek_basis(n, d, k);
    std::map<tableau, Eigen::Index> row;
    for (size_t i = 0; i < lb.size(); ++i)
        row[lb[i]] = static_cast<Eigen::Index>(i);
    qmatrix m = qmatrix::Zero(static_cast<Eigen::Index>(lb.size()), static_cast<Eigen::Index>(eb.size()));
    for (size_t j = 0; j < eb.size(); ++j) {
        element img = phi(element::of(complex_kind::EK, n, eb[j]), sign);
        for (const auto& [t, c] : img.terms()) {
            if (c.size() != 1 || !c.terms().begin()->first.is_identity())
                throw std::logic_error("phi has a non-scalar entry");
            m(row.at(t), static_cast<Eigen::Index>(j)) = c.terms().begin()->second;
        }
    }
    return m;
}

qmatrix phi_inverse(int n, int d, int k, phi_sign sign)
{
    return exact_inverse(phi_matrix(n, d, k, sign));
}

bool phi_commutes(int n, int d, phi_sign sign)
{
    for (int k = 1; k <= n; ++k)
        for (const auto& t : ek_basis(n, d, k)) {
            element e = element::of(complex_kind::EK, n, t);
            if (!(phi(diff_ek(e), sign) == diff_l(phi(e, sign))))
                return false;
        }
    return true;
}

phi_build build_phi(int n, int d)
{
    phi_build b;
    b.display_verified = phi_commutes(n, d, phi_sign::display);
    if (!b.display_verified)
        b.alternate_verified = phi_commutes(n, d, phi_sign::alternate);
    b.map.n = n;
    b.map.d = d;
    b.map.sign = b.display_verified || !b.alternate_verified ? phi_sign::display : phi_sign::alternate;
    for (int k = 0; k <= n; ++k)
        b.map.degree.push_back(phi_matrix(n, d, k, b.map.sign));
    return b;
}

}  // namespace hookdg
