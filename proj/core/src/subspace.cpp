#include "gibs/subspace.hpp"

#include "gibs/errors.hpp"
#include "svd_util.hpp"

#include <cmath>

namespace gibs {

namespace {

/// gap = sigma_r / sigma_{r+1} across the rank cut; infinity when the cut is
/// at either end of the spectrum or the trailing value is zero.
void record_gap(const Eigen::VectorXd& s, int r, Subspace& out) {
    if (r > 0 && r < s.size() && s[r] > 0.0) {
        out.gap = s[r - 1] / s[r];
        out.gap_warning = out.gap < 10.0;
    }
}

} // namespace

int rank_of(const Eigen::MatrixXd& A, double eps) {
    if (A.rows() == 0 || A.cols() == 0) return 0;
    return detail::svd_rank(detail::robust_svd(A).s, eps);
}

Subspace numeric_kernel(const Eigen::MatrixXd& A, double eps) {
    const int N = static_cast<int>(A.cols());
    Subspace out;
    out.eps = eps;
    if (A.rows() == 0) {
        out.basis = Eigen::MatrixXd::Identity(N, N);
        return out;
    }
    const auto svd = detail::robust_svd(A, Eigen::ComputeFullV);
    const int r = detail::svd_rank(svd.s, eps);
    out.basis = svd.V.rightCols(N - r).transpose();
    record_gap(svd.s, r, out);
    return out;
}

Subspace orthonormal_rowspan(const Eigen::MatrixXd& B, double eps) {
    Subspace out;
    out.eps = eps;
    if (B.rows() == 0 || B.cols() == 0) {
        out.basis = Eigen::MatrixXd(0, B.cols());
        return out;
    }
    const auto svd = detail::robust_svd(B, Eigen::ComputeThinV);
    const int r = detail::svd_rank(svd.s, eps);
    out.basis = svd.V.leftCols(r).transpose();
    record_gap(svd.s, r, out);
    return out;
}

Subspace orth_complement(const Subspace& S, double eps) {
    if (S.dim() == 0) {
        Subspace out;
        out.eps = eps;
        out.basis = Eigen::MatrixXd::Identity(S.ambient(), S.ambient());
        return out;
    }
    return numeric_kernel(S.basis, eps);
}

bool subspace_included(const Subspace& S1, const Subspace& S2, double tol) {
    if (S1.ambient() != S2.ambient())
        throw argument_error("subspace_included: ambient dimensions differ");
    if (S1.dim() == 0) return true;
    if (S2.dim() == 0) return false;
    const Eigen::MatrixXd resid = S1.basis - (S1.basis * S2.basis.transpose()) * S2.basis;
    return resid.rowwise().norm().maxCoeff() <= tol;
}

double principal_angle_gap(const Subspace& S1, const Subspace& S2) {
    if (S1.ambient() != S2.ambient())
        throw argument_error("principal_angle_gap: ambient dimensions differ");
    if (S1.dim() == 0 && S2.dim() == 0) return 0.0;
    if (S1.dim() == 0 || S2.dim() == 0) return 1.0;
    const auto svd = detail::robust_svd(S1.basis * S2.basis.transpose());
    const double smin = svd.s.minCoeff();
    return std::sqrt(std::max(0.0, 1.0 - smin * smin));
}

std::pair<Subspace, MonomialBasis> project_kernel(const Subspace& S,
                                                  const MonomialBasis& basis,
                                                  int l, double eps) {
    if (S.ambient() != basis.size())
        throw argument_error("project_kernel: subspace does not match basis");
    if (l < 0 || l > basis.degree())
        throw argument_error("project_kernel: projection order out of range");
    MonomialBasis lower(basis.nvars(), basis.degree() - l);
    if (l == 0) return {S, std::move(lower)};
    const int keep_from = basis.first_index_deg_le(basis.degree() - l);
    const Eigen::MatrixXd trunc = S.basis.rightCols(basis.size() - keep_from);
    Subspace out = orthonormal_rowspan(trunc, eps);
    return {std::move(out), std::move(lower)};
}

std::pair<Subspace, MonomialBasis> prolong_kernel(const PolySystem& P, int k,
                                                  double eps) {
    if (P.empty()) throw argument_error("prolong_kernel: empty system");
    CoeffMatrix cm = coefficient_matrix(prolong(P, k), P.degree() + k);
    Subspace ker = numeric_kernel(cm.A, eps);
    return {std::move(ker), std::move(cm.basis)};
}

std::pair<Subspace, MonomialBasis> prolong_kernel_to(const PolySystem& P,
                                                     int target_degree,
                                                     double eps) {
    if (P.empty()) throw argument_error("prolong_kernel_to: empty system");
    if (target_degree < P.degree())
        throw argument_error("prolong_kernel_to: target below system degree");
    return prolong_kernel(P, target_degree - P.degree(), eps);
}

std::vector<Polynomial> complement_system(const Subspace& S,
                                          const MonomialBasis& basis,
                                          double eps) {
    if (S.ambient() != basis.size())
        throw argument_error("complement_system: subspace does not match basis");
    const Subspace comp = orth_complement(S, eps);
    return polys_from_rows(comp.basis, basis);
}

PolySystem extract_generators(const Subspace& S, const MonomialBasis& basis) {
    if (S.ambient() != basis.size())
        throw argument_error("extract_generators: subspace does not match basis");
    std::vector<Polynomial> gens;
    for (auto& p : polys_from_rows(S.basis, basis)) {
        Polynomial g = normalize_monic(p);
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    return PolySystem(basis.nvars(), std::move(gens));
}

} // namespace gibs
