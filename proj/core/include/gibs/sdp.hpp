#pragma once

#include "gibs/errors.hpp"
#include "gibs/moment.hpp"

#include <memory>

namespace gibs {

/// Options for the interior-point solve.  The defaults are the validated
/// operating point; the knobs can only tighten it, never loosen it:
/// max_iterations caps the iteration count of each Newton solve, and the
/// effective decrement tolerance of each solve is min(internal, barrier_tol).
struct SdpOptions {
    std::uint64_t seed = 0;
    double sigma_min = 1e-9;   // barrier shift floor (relative to scale)
    double mu = 1.0;           // trace-penalty weight (relative to scale)
    int max_iterations = 200;  // cap on iterations per Newton solve
    double barrier_tol = 1e-8; // cap on the Newton decrement tolerance
    bool restart_check = true; // confirm the rank with a second seeded solve
    bool verbose = false;      // stage diagnostics on stderr
};

/// A generic (maximum-rank) PSD point of the moment family.
struct MomentSolution {
    Eigen::VectorXd y;     // free parameters
    Eigen::VectorXd u;     // full moment vector up + B y
    Eigen::MatrixXd M;     // moment matrix at y
    Eigen::VectorXd evals; // eigenvalues of M, ascending
    int rank = 0;          // #(eigenvalues > 1e-6 * max)
    double lmin = 0.0;     // smallest eigenvalue
    Subspace kernel;       // orthonormal rows spanning the numerical kernel
    double noise = 0.0;    // spectral accuracy limit of the kernel subspace
    int iterations = 0;    // Newton iterations spent
    std::uint64_t seed = 0;
};

/// Two seeded restarts disagreed on the maximal rank; carries both solutions.
class unstable_rank_error : public error {
public:
    unstable_rank_error(const std::string& msg, MomentSolution a, MomentSolution b);
    int rank_a() const noexcept;
    int rank_b() const noexcept;
    const MomentSolution& solution_a() const noexcept { return *a_; }
    const MomentSolution& solution_b() const noexcept { return *b_; }

private:
    std::shared_ptr<const MomentSolution> a_, b_;
};

/// Eigendecomposition-based rank of a symmetric matrix with relative cut
/// eps * |lambda|_max; kernel = span of the eigenvectors below the cut.
struct PsdRank {
    int rank = 0;
    Subspace kernel;
    double lmin = 0.0;
};
PsdRank psd_rank(const Eigen::MatrixXd& M, double eps = 1e-6);

/// Interior-point search for a PSD point of maximal rank in the affine family
/// M(y) = M0 + sum y_q A_q.  Phase 1 follows a shifted-barrier path
/// maximizing logdet(M + sigma I) - mu_eff * tr(M) while shrinking sigma (the
/// trace penalty bounds the problem when the spectrahedron is unbounded and
/// does not change the maximal face).  Phase 2 repeatedly pins near-null
/// eigenvectors (M(y) k = 0 as linear constraints on y) and re-centers on the
/// face.  With restart_check, a second solve from an offset seed must agree
/// on the rank, else unstable_rank_error.
MomentSolution generic_point(const MomentProblem& mp, const SdpOptions& opts = {});

} // namespace gibs
