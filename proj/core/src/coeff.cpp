#include "gibs/coeff.hpp"

#include "gibs/errors.hpp"

namespace gibs {

CoeffMatrix coefficient_matrix(const PolySystem& P, int d) {
    P.validate();
    if (P.nvars < 1)
        throw argument_error("coefficient_matrix: system has no variables");
    if (d < P.degree())
        throw argument_error("coefficient_matrix: degree bound below system degree");
    MonomialBasis basis(P.nvars, d);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(P.size(), basis.size());
    for (int i = 0; i < P.size(); ++i)
        for (const auto& [m, c] : P.polys[i].terms())
            A(i, basis.index_of(m)) = c;
    return CoeffMatrix{std::move(A), std::move(basis)};
}

std::vector<Polynomial> polys_from_rows(const Eigen::MatrixXd& rows,
                                        const MonomialBasis& basis) {
    if (rows.cols() != basis.size())
        throw argument_error("polys_from_rows: column count does not match basis");
    std::vector<Polynomial> out;
    out.reserve(rows.rows());
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        Polynomial p;
        for (int j = 0; j < basis.size(); ++j)
            if (rows(i, j) != 0.0) p.add_term(basis.at(j), rows(i, j));
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace gibs
