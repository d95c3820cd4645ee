#pragma once

#include "gibs/coeff.hpp"

#include <Eigen/Dense>

#include <limits>
#include <utility>

namespace gibs {

/// A numerically determined linear subspace of R^N, held as an orthonormal
/// row basis together with the tolerance used for the rank decision and the
/// singular-value gap observed at the cut.
struct Subspace {
    Eigen::MatrixXd basis; // dim x ambient, orthonormal rows
    double eps = 0.0;
    double gap = std::numeric_limits<double>::infinity(); // sigma_r / sigma_{r+1}
    bool gap_warning = false; // gap < 10: the rank decision is ambiguous

    int dim() const noexcept { return static_cast<int>(basis.rows()); }
    int ambient() const noexcept { return static_cast<int>(basis.cols()); }
};

/// Number of singular values above eps * sigma_1 (0 if sigma_1 == 0).
int rank_of(const Eigen::MatrixXd& A, double eps);

/// ker A with the rank cut at sigma_i > eps * sigma_1.  A matrix with no rows
/// has the full ambient space as kernel.
Subspace numeric_kernel(const Eigen::MatrixXd& A, double eps);

/// Orthonormalized basis of the row span of B (rank cut as above).
Subspace orthonormal_rowspan(const Eigen::MatrixXd& B, double eps);

/// Orthogonal complement of S inside its ambient space.
Subspace orth_complement(const Subspace& S, double eps);

/// True iff every basis vector of S1 lies in span(S2): the residual after
/// projecting onto S2 is <= tol for each row.  Ambients must match.
bool subspace_included(const Subspace& S1, const Subspace& S2, double tol = 1e-6);

/// max sin of the principal angles between the two spans (orthonormal rows);
/// 0 when the spans coincide, 1 when some direction is orthogonal.
double principal_angle_gap(const Subspace& S1, const Subspace& S2);

/// pi^l on a kernel subspace of J^d: drop the coordinates of degree > d - l,
/// then re-orthonormalize the truncated spanning set.  Returns the projected
/// subspace together with the basis of J^{d-l} it now lives in.
/// Requires 0 <= l <= basis.degree().
std::pair<Subspace, MonomialBasis> project_kernel(const Subspace& S,
                                                  const MonomialBasis& basis,
                                                  int l, double eps);

/// D^k P = ker C(Pro^k P) at degree deg(P) + k.
std::pair<Subspace, MonomialBasis> prolong_kernel(const PolySystem& P, int k,
                                                  double eps);

/// Same, but prolonging to an absolute target degree (>= deg(P)) instead of a
/// relative order; this keeps the ambient space predictable when the system's
/// own degree may be lower than its presentation degree.
std::pair<Subspace, MonomialBasis> prolong_kernel_to(const PolySystem& P,
                                                     int target_degree,
                                                     double eps);

/// Generators (raw, uncleaned) of the orthogonal complement of S in its
/// ambient space, read as polynomials over `basis`.
std::vector<Polynomial> complement_system(const Subspace& S,
                                          const MonomialBasis& basis,
                                          double eps);

/// One polynomial per basis row of S, normalized (monic on the leading
/// significant monomial) and cleaned; zero rows are dropped.
PolySystem extract_generators(const Subspace& S, const MonomialBasis& basis);

} // namespace gibs
