#pragma once

#include "gibs/basis.hpp"
#include "gibs/polynomial.hpp"

#include <Eigen/Dense>

namespace gibs {

/// Dense realization of a system against the ordered basis of J^d: row i
/// holds the coefficients of polynomial i, so P = A * x^(<=d) reconstructs
/// the system exactly.
struct CoeffMatrix {
    Eigen::MatrixXd A;
    MonomialBasis basis;
};

/// Builds C(P) at degree bound d.  Requires d >= deg(P).
CoeffMatrix coefficient_matrix(const PolySystem& P, int d);

/// Turns matrix rows back into polynomials over `basis` — the raw inverse of
/// coefficient_matrix, with no cleanup.
std::vector<Polynomial> polys_from_rows(const Eigen::MatrixXd& rows,
                                        const MonomialBasis& basis);

} // namespace gibs
