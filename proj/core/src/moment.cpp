#include "gibs/moment.hpp"

#include "gibs/errors.hpp"
#include "svd_util.hpp"

#include <cmath>

namespace gibs {

MomentProblem build_moment_problem(const PolySystem& Q, double eps) {
    Q.validate();
    if (eps <= 0.0)
        throw argument_error("build_moment_problem: eps must be positive");
    const int n = Q.nvars;
    const int d = Q.degree();

    MomentProblem mp;
    mp.nvars = n;
    mp.degree = d;
    mp.index = MonomialBasis(n, d);
    mp.ubasis = MonomialBasis(n, 2 * d);
    const int side = mp.index.size();
    const int nu = mp.ubasis.size();

    // <u, p> = 0 for every p in the window prolongation of Q to degree 2d.
    const PolySystem pro = prolong(Q, d);
    const int nrows = static_cast<int>(pro.polys.size());
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(nrows + 1, nu);
    for (int r = 0; r < nrows; ++r)
        for (const auto& [mono, c] : pro.polys[r].terms())
            C(r, mp.ubasis.index_of(mono)) = c;
    // Normalization u_0 = 1 as the last row.
    const Monomial one(static_cast<std::size_t>(n), 0);
    C(nrows, mp.ubasis.index_of(one)) = 1.0;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nrows + 1);
    rhs(nrows) = 1.0;

    const auto svd = detail::robust_svd(C, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const Eigen::VectorXd& s = svd.s;
    const int rank = detail::svd_rank(s, eps);

    // Minimum-norm particular solution from the rank-r truncation.
    Eigen::VectorXd up = Eigen::VectorXd::Zero(nu);
    if (rank > 0) {
        Eigen::VectorXd coef = svd.U.leftCols(rank).transpose() * rhs;
        coef.array() /= s.head(rank).array();
        up = svd.V.leftCols(rank) * coef;
    }
    const double resid = (C * up - rhs).lpNorm<Eigen::Infinity>();
    if (resid > 1e-6)
        throw infeasible_error(
            "moment constraints are inconsistent with u_0 = 1 (residual " +
            std::to_string(resid) + "); the system has no admissible moment vector");

    mp.constraints = std::move(C);
    mp.rhs = std::move(rhs);
    mp.up = std::move(up);
    mp.B = svd.V.rightCols(nu - rank);

    mp.pair_index.resize(side, side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            mp.pair_index(i, j) =
                mp.ubasis.index_of(mono_mul(mp.index.at(i), mp.index.at(j)));
    return mp;
}

Eigen::VectorXd moments(const MomentProblem& mp, const Eigen::VectorXd& y) {
    if (y.size() != mp.B.cols())
        throw argument_error("moments: free-parameter vector has size " +
                             std::to_string(y.size()) + ", expected " +
                             std::to_string(mp.B.cols()));
    return mp.up + mp.B * y;
}

Eigen::MatrixXd assemble(const MomentProblem& mp, const Eigen::VectorXd& y) {
    const Eigen::VectorXd u = moments(mp, y);
    const int side = mp.side();
    Eigen::MatrixXd M(side, side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            M(i, j) = u(mp.pair_index(i, j));
    return M;
}

} // namespace gibs
