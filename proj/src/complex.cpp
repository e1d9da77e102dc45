#include "hookdg/complex.hpp"

#include "hookdg/schur.hpp"

namespace hookdg {

poly_matrix operator*(const poly_matrix& x, const poly_matrix& y)
{
    if (x.cols != y.rows)
        throw dimension_mismatch("matrix shapes do not compose");
    poly_matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int l = 0; l < x.cols; ++l) {
            const polynomial& a = x.at(i, l);
            if (a.is_zero())
                continue;
            for (int j = 0; j < y.cols; ++j)
                if (!y.at(l, j).is_zero())
                    r.at(i, j) += a * y.at(l, j);
        }
    return r;
}

bool is_zero(const poly_matrix& m)
{
    return std::all_of(m.a.begin(), m.a.end(), [](const polynomial& p) { return p.is_zero(); });
}

std::vector<size_t> complex_descriptor::ranks() const
{
    std::vector<size_t> r;
    for (const auto& l : labels)
        r.push_back(l.size());
    return r;
}

std::vector<monomial> power_of_maximal_ideal(int n, int d)
{
    std::vector<monomial> out;
    for (const auto& t : enumerate_l_basis(n, 0, d))
        out.push_back(monomial::of_indices(n, t.content()));
    return out;
}

std::atomic<std::uint64_t>& audited_products()
{
    static std::atomic<std::uint64_t> count{0};
    return count;
}

}  // namespace hookdg
