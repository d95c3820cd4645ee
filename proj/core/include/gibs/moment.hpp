#pragma once

#include "gibs/subspace.hpp"

#include <Eigen/Dense>

namespace gibs {

/// Truncated moment problem for a system Q of degree d: the symmetric matrix
/// M indexed by monomials |a| <= d with entry (a,b) = u_{a+b}, subject to the
/// linear constraints <u, p> = 0 for every p in the prolongation of Q to
/// degree 2d, plus the normalization u_0 = 1.  The equality system is
/// eliminated once into the affine parameterization u = up + B y with y free,
/// so every assembled matrix satisfies the constraints by construction.
struct MomentProblem {
    int nvars = 0;
    int degree = 0;       // d = deg(Q); M has side N(n,d)
    MonomialBasis index;  // rows/columns of M: monomials |a| <= d
    MonomialBasis ubasis; // moment variables: monomials |g| <= 2d
    Eigen::MatrixXi pair_index; // (i,j) -> position of a_i + a_j in ubasis
    Eigen::MatrixXd constraints; // rows: <u, p> = 0 for p in Pro^d Q; u_0 = 1
    Eigen::VectorXd rhs;
    Eigen::VectorXd up; // particular solution (minimum norm)
    Eigen::MatrixXd B;  // orthonormal columns spanning the free directions

    int side() const noexcept { return index.size(); }
    int nfree() const noexcept { return static_cast<int>(B.cols()); }
};

/// Assembles the constraint system from all prolongations of Q to degree 2d
/// and eliminates it by SVD with relative tolerance eps.  Throws
/// infeasible_error when the constraints contradict u_0 = 1 (the ideal
/// contains a nonzero constant).
MomentProblem build_moment_problem(const PolySystem& Q, double eps = 1e-8);

/// Moment vector u(y) = up + B y.
Eigen::VectorXd moments(const MomentProblem& mp, const Eigen::VectorXd& y);

/// Moment matrix M(y) with entries u(y)_{a+b}; symmetric by construction,
/// entries with equal a+b are bit-identical.
Eigen::MatrixXd assemble(const MomentProblem& mp, const Eigen::VectorXd& y);

} // namespace gibs
