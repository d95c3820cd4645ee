#pragma once

// Internal helper: singular value decomposition with a correctness fallback.
// Eigen 3.4's divide-and-conquer SVD (BDCSVD) can emit NaN factors for some
// perfectly finite inputs (a deflation defect); the two-sided Jacobi SVD is
// slower but dependable.  All library SVDs go through here: try BDCSVD, and
// if any requested factor is non-finite, redo with JacobiSVD.

#include <Eigen/SVD>

namespace gibs::detail {

struct SvdResult {
    Eigen::VectorXd s;  // singular values, descending
    Eigen::MatrixXd U;  // only if requested
    Eigen::MatrixXd V;  // only if requested
};

inline SvdResult robust_svd(const Eigen::MatrixXd& A, unsigned flags = 0) {
    const bool wantU = flags & (Eigen::ComputeThinU | Eigen::ComputeFullU);
    const bool wantV = flags & (Eigen::ComputeThinV | Eigen::ComputeFullV);
    {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(A, flags);
        bool ok = svd.singularValues().allFinite();
        if (ok && wantU) ok = svd.matrixU().allFinite();
        if (ok && wantV) ok = svd.matrixV().allFinite();
        if (ok) {
            SvdResult r;
            r.s = svd.singularValues();
            if (wantU) r.U = svd.matrixU();
            if (wantV) r.V = svd.matrixV();
            return r;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, flags);
    SvdResult r;
    r.s = svd.singularValues();
    if (wantU) r.U = svd.matrixU();
    if (wantV) r.V = svd.matrixV();
    return r;
}

/// Number of singular values above eps * s(0) (0 if the spectrum is empty or
/// the largest value is not positive).
inline int svd_rank(const Eigen::VectorXd& s, double eps) {
    if (s.size() == 0 || s(0) <= 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > eps * s(0)) ++r;
    return r;
}

} // namespace gibs::detail
