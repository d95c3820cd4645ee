#include "gibs/sdp.hpp"

#include "gibs/errors.hpp"
#include "gibs/rng.hpp"
#include "svd_util.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

namespace gibs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Internal signal: the shifted matrix was not positive definite.
struct chol_fail {};

// logdet(Mt + sigma I) - mu_eff * tr(Mt); throws chol_fail when the shifted
// matrix is not positive definite.
double shifted_objective(const Eigen::MatrixXd& Mt, double sigma, double mu_eff) {
    const int m = static_cast<int>(Mt.rows());
    Eigen::MatrixXd Ms = Mt + sigma * Eigen::MatrixXd::Identity(m, m);
    Eigen::LLT<Eigen::MatrixXd> llt(Ms);
    if (llt.info() != Eigen::Success) throw chol_fail{};
    const Eigen::VectorXd diag = llt.matrixLLT().diagonal();
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < diag.size(); ++i) logdet += std::log(diag(i));
    return 2.0 * logdet - mu_eff * Mt.trace();
}

Eigen::MatrixXd family_at(const Eigen::MatrixXd& M0,
                          const std::vector<Eigen::MatrixXd>& As,
                          const Eigen::VectorXd& w) {
    Eigen::MatrixXd M = M0;
    for (Eigen::Index q = 0; q < w.size(); ++q) M += w(q) * As[static_cast<std::size_t>(q)];
    return M;
}

// Damped Newton ascent of logdet(M(w) + sigma I) - mu_eff tr(M(w)) over the
// affine family M(w) = M0 + sum w_q A_q.  Mutates w; returns the number of
// Newton iterations.  Throws chol_fail when the start is infeasible.
int barrier_newton(const Eigen::MatrixXd& M0, const std::vector<Eigen::MatrixXd>& As,
                   Eigen::VectorXd& w, double sigma, double mu_eff, int itmax,
                   double tol) {
    const int m = static_cast<int>(M0.rows());
    const int nf = static_cast<int>(w.size());
    if (nf == 0) {
        shifted_objective(M0, sigma, mu_eff); // feasibility check only
        return 0;
    }
    Eigen::VectorXd trA(nf);
    for (int q = 0; q < nf; ++q) trA(q) = As[static_cast<std::size_t>(q)].trace();

    for (int it = 0; it < itmax; ++it) {
        const Eigen::MatrixXd Mt = family_at(M0, As, w);
        Eigen::MatrixXd Ms = Mt + sigma * Eigen::MatrixXd::Identity(m, m);
        Eigen::LLT<Eigen::MatrixXd> llt(Ms);
        if (llt.info() != Eigen::Success) throw chol_fail{};
        const Eigen::VectorXd diag = llt.matrixLLT().diagonal();
        double f0 = -mu_eff * Mt.trace();
        for (Eigen::Index i = 0; i < diag.size(); ++i) f0 += 2.0 * std::log(diag(i));
        const Eigen::MatrixXd S = llt.solve(Eigen::MatrixXd::Identity(m, m));

        Eigen::VectorXd g(nf);
        std::vector<Eigen::MatrixXd> SA(static_cast<std::size_t>(nf));
        for (int q = 0; q < nf; ++q) {
            const Eigen::MatrixXd& Aq = As[static_cast<std::size_t>(q)];
            g(q) = S.cwiseProduct(Aq).sum() - mu_eff * trA(q); // tr(S A_q), both symmetric
            SA[static_cast<std::size_t>(q)] = S * Aq;
        }
        Eigen::MatrixXd H(nf, nf);
        for (int k = 0; k < nf; ++k)
            for (int q = 0; q < nf; ++q)
                H(k, q) = -SA[static_cast<std::size_t>(k)]
                               .cwiseProduct(SA[static_cast<std::size_t>(q)].transpose())
                               .sum(); // -tr(S A_k S A_q)
        H = 0.5 * (H + H.transpose()).eval();

        Eigen::VectorXd delta = Eigen::LDLT<Eigen::MatrixXd>(-H).solve(g);
        if (!delta.allFinite())
            delta = (-H).completeOrthogonalDecomposition().solve(g);
        double dec = delta.allFinite() ? g.dot(delta) : -1.0;
        if (dec <= 0.0) { // fall back to a gradient step
            delta = g;
            dec = g.squaredNorm();
        }
        double t = 1.0;
        bool stepped = false;
        while (t > 1e-13) {
            try {
                const double ft =
                    shifted_objective(family_at(M0, As, w + t * delta), sigma, mu_eff);
                if (ft >= f0 + 0.25 * t * dec - 1e-12) {
                    stepped = true;
                    break;
                }
            } catch (const chol_fail&) {
                // trial point left the feasible cone; shrink the step
            }
            t *= 0.5;
        }
        if (!stepped) return it;
        w += t * delta;
        if (t * dec < tol) return it;
    }
    return itmax;
}

struct EigPair {
    Eigen::VectorXd ev; // ascending
    Eigen::MatrixXd V;
};

EigPair eigh(const Eigen::MatrixXd& M) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    if (es.info() != Eigen::Success)
        throw error("symmetric eigendecomposition failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

MomentSolution solve_once(const MomentProblem& mp, const SdpOptions& opts,
                          std::uint64_t seed) {
    const int Nn = mp.side();
    const int nf = mp.nfree();
    // Option knobs never loosen the validated operating point: the per-solve
    // iteration cap and decrement tolerance can only be tightened from here.
    const auto eff_itmax = [&](int base) { return std::min(base, opts.max_iterations); };
    const auto eff_tol = [&](double base) { return std::min(base, opts.barrier_tol); };

    Rng rng(seed);
    Eigen::VectorXd y = 1e-3 * rng.gauss_vector(nf);

    // Basis matrices A_q of the affine family, from the free directions B.
    std::vector<Eigen::MatrixXd> As(static_cast<std::size_t>(nf));
    for (int q = 0; q < nf; ++q) {
        Eigen::MatrixXd Aq(Nn, Nn);
        for (int i = 0; i < Nn; ++i)
            for (int j = 0; j < Nn; ++j)
                Aq(i, j) = mp.B(mp.pair_index(i, j), q);
        As[static_cast<std::size_t>(q)] = std::move(Aq);
    }
    Eigen::MatrixXd M0(Nn, Nn);
    for (int i = 0; i < Nn; ++i)
        for (int j = 0; j < Nn; ++j) M0(i, j) = mp.up(mp.pair_index(i, j));
    const double scale = std::max(1.0, M0.cwiseAbs().maxCoeff());
    int iterations = 0;

    // ---- phase 1: coarse shifted-barrier path to locate the face ----
    // The trace penalty bounds the problem when the spectrahedron is
    // unbounded (positive-dimensional variety); it does not change the face.
    {
        const EigPair e0 = eigh(family_at(M0, As, y));
        double sigma = std::max(scale, -2.0 * e0.ev(0));
        const double sigma_pin = opts.sigma_min * scale;
        double local_mu = opts.mu;
        for (int stage = 0; stage < 80; ++stage) {
            const double mu_eff = std::min(local_mu / scale, 0.5 / sigma);
            const double ptol = sigma > 1e-5 * scale ? 1e-9 : 1e-14;
            try {
                iterations += barrier_newton(M0, As, y, sigma, mu_eff,
                                             eff_itmax(40), eff_tol(ptol));
            } catch (const chol_fail&) {
                sigma *= 2.0;
                continue;
            }
            const EigPair e = eigh(family_at(M0, As, y));
            const double lmin = e.ev(0), lmax = e.ev(Nn - 1);
            if (opts.verbose)
                std::cerr << "  p1 sigma=" << sigma << " mu=" << mu_eff
                          << " lmin=" << lmin << " lmax=" << lmax << "\n";
            if (lmax > 1e7 * scale) {
                local_mu *= 4.0; // iterate escaping along an unbounded ray
                continue;
            }
            if (lmin < -0.5 * sigma && local_mu > 1e-7) {
                local_mu *= 0.25; // penalty parking the center on the shifted boundary
                continue;
            }
            if (lmin > 1e-3 * std::max(lmax, 1e-30) || sigma <= sigma_pin) break;
            const double nsig =
                std::max({sigma_pin, 0.1 * sigma, -lmin * 1.05});
            sigma = nsig >= sigma ? 0.5 * sigma : nsig;
        }
    }

    // ---- phase 2: pin near-null directions, barrier on the face ----
    Eigen::VectorXd ypin = y;
    double prev_null_mag = kInf;
    for (int pin_round = 0; pin_round < 12; ++pin_round) {
        const EigPair e = eigh(family_at(M0, As, ypin));
        const double evmax = std::max(e.ev(Nn - 1), 1e-30);
        const double cut = pin_round == 0 ? 1e-2 : 1e-6;
        int knull = 0;
        while (knull < Nn && e.ev(knull) < cut * evmax) ++knull;
        if (knull == 0 || knull == Nn) {
            if (pin_round == 0 && nf > 0) {
                // strictly feasible: polish on the full family
                try {
                    iterations +=
                        barrier_newton(M0, As, ypin, 1e-12 * scale, opts.mu / scale,
                                       eff_itmax(80), eff_tol(1e-13));
                } catch (const chol_fail&) {
                }
                y = ypin;
            }
            break;
        }
        const Eigen::MatrixXd K = e.V.leftCols(knull);
        const double null_mag = e.ev.head(knull).cwiseAbs().maxCoeff();
        if (opts.verbose)
            std::cerr << "  p2 round=" << pin_round << " null=" << knull
                      << " null_mag=" << null_mag << " evmax=" << evmax << "\n";
        if (null_mag <= 5e-14 * evmax) break; // pinning converged
        if (pin_round > 0 && null_mag >= 0.9 * prev_null_mag) break; // stagnated
        prev_null_mag = null_mag;

        // Affine subfamily { y : M(y) k = 0 for every pinned k }, solved by
        // least squares: G y = -vec(M0 K) with G column q = vec(A_q K).
        Eigen::MatrixXd G(Nn * knull, nf);
        for (int q = 0; q < nf; ++q) {
            const Eigen::MatrixXd AK = As[static_cast<std::size_t>(q)] * K;
            for (int i = 0; i < Nn; ++i)
                for (int c = 0; c < knull; ++c) G(i * knull + c, q) = AK(i, c);
        }
        Eigen::VectorXd grhs(Nn * knull);
        {
            const Eigen::MatrixXd MK = M0 * K;
            for (int i = 0; i < Nn; ++i)
                for (int c = 0; c < knull; ++c) grhs(i * knull + c) = -MK(i, c);
        }
        Eigen::VectorXd yp = Eigen::VectorXd::Zero(nf);
        Eigen::MatrixXd Z(nf, 0);
        if (nf > 0) {
            const auto svd =
                detail::robust_svd(G, Eigen::ComputeThinU | Eigen::ComputeFullV);
            const Eigen::VectorXd& sg = svd.s;
            const int rg = detail::svd_rank(sg, 1e-10);
            if (rg > 0) {
                Eigen::VectorXd coef = svd.U.leftCols(rg).transpose() * grhs;
                coef.array() /= sg.head(rg).array();
                yp = svd.V.leftCols(rg) * coef;
            }
            Z = svd.V.rightCols(nf - rg);
        }
        const int nz = static_cast<int>(Z.cols());

        // Barrier on the face: restrict the family to the positive eigenspace.
        const Eigen::MatrixXd Vf = e.V.rightCols(Nn - knull);
        const Eigen::MatrixXd M0f = Vf.transpose() * family_at(M0, As, yp) * Vf;
        std::vector<Eigen::MatrixXd> Aw(static_cast<std::size_t>(nz));
        for (int j = 0; j < nz; ++j) {
            Eigen::MatrixXd Aj = Eigen::MatrixXd::Zero(Nn, Nn);
            for (int q = 0; q < nf; ++q) Aj += Z(q, j) * As[static_cast<std::size_t>(q)];
            Aw[static_cast<std::size_t>(j)] = Vf.transpose() * Aj * Vf;
        }
        Eigen::VectorXd w = Z.transpose() * (ypin - yp);
        const double mu2 = opts.mu / scale;
        const double sig2 = 1e-12 * scale;
        const Eigen::VectorXd evf = eigh(family_at(M0f, Aw, w)).ev;
        double s2 = evf(0) < 0.0 ? std::max(sig2, -2.0 * evf(0)) : sig2;
        for (int ramp = 0; ramp < 60; ++ramp) {
            try {
                iterations += barrier_newton(M0f, Aw, w, s2, mu2, eff_itmax(80),
                                             eff_tol(1e-13));
            } catch (const chol_fail&) {
                s2 *= 4.0;
                continue;
            }
            if (opts.verbose)
                std::cerr << "  p2 pin=" << knull << " sig2=" << s2 << "\n";
            if (s2 <= sig2) break;
            s2 = std::max(sig2, 1e-3 * s2);
        }
        ypin = yp + Z * w;
        y = ypin;
    }

    MomentSolution sol;
    sol.y = y;
    sol.u = mp.up + mp.B * y;
    sol.M = family_at(M0, As, y);
    const EigPair ef = eigh(sol.M);
    // The barrier phases drive lambda_min toward 0 from below whenever a PSD
    // point exists; a final matrix that stays indefinite beyond the rank
    // tolerance means the PSD slice of the family is empty.
    const double evscale =
        std::max({std::abs(ef.ev(0)), std::abs(ef.ev(Nn - 1)), 1e-300});
    if (ef.ev(0) < -1e-6 * evscale) {
        std::ostringstream msg;
        msg << "the moment family has no positive semidefinite point "
               "(barrier phases left lambda_min = "
            << ef.ev(0) << " at scale " << evscale << ")";
        throw infeasible_error(msg.str());
    }
    sol.evals = ef.ev;
    sol.lmin = ef.ev(0);
    int r = 0;
    for (int i = 0; i < Nn; ++i)
        if (ef.ev(i) > 1e-6 * ef.ev(Nn - 1)) ++r;
    sol.rank = r;
    sol.kernel.basis = ef.V.leftCols(Nn - r).transpose();
    sol.kernel.eps = 1e-6;
    if (r > 0 && r < Nn) {
        const double below = Nn - r > 0 ? std::abs(ef.ev(Nn - r - 1)) : 0.0;
        sol.kernel.gap = ef.ev(Nn - r) / std::max(below, 1e-300);
        sol.kernel.gap_warning = sol.kernel.gap < 10.0;
        // achievable kernel-subspace accuracy: rotations below
        // sqrt(eps_mach * lmax / gap) are spectrally invisible
        const double gap = std::max(ef.ev(Nn - r), 1e-300);
        sol.noise = std::sqrt(2.3e-16 * std::max(ef.ev(Nn - 1), 0.0) / gap);
    } else {
        sol.noise = 0.0;
    }
    sol.iterations = iterations;
    sol.seed = seed;
    return sol;
}

} // namespace

unstable_rank_error::unstable_rank_error(const std::string& msg, MomentSolution a,
                                         MomentSolution b)
    : error(msg),
      a_(std::make_shared<const MomentSolution>(std::move(a))),
      b_(std::make_shared<const MomentSolution>(std::move(b))) {}

int unstable_rank_error::rank_a() const noexcept { return a_->rank; }
int unstable_rank_error::rank_b() const noexcept { return b_->rank; }

PsdRank psd_rank(const Eigen::MatrixXd& M, double eps) {
    if (M.rows() != M.cols())
        throw argument_error("psd_rank: matrix must be square");
    const int n = static_cast<int>(M.rows());
    PsdRank out;
    if (n == 0) {
        out.kernel.basis.resize(0, 0);
        out.kernel.eps = eps;
        return out;
    }
    const EigPair e = eigh(0.5 * (M + M.transpose()));
    const double cut = eps * e.ev.cwiseAbs().maxCoeff();
    int knull = 0; // eigenvalues are ascending: |ev| <= cut is a middle band,
    // but for (near-) PSD input it is the leading band.
    while (knull < n && std::abs(e.ev(knull)) <= cut) ++knull;
    out.rank = 0;
    for (int i = 0; i < n; ++i)
        if (std::abs(e.ev(i)) > cut) ++out.rank;
    out.kernel.basis = e.V.leftCols(knull).transpose();
    out.kernel.eps = eps;
    out.lmin = e.ev(0);
    if (knull > 0 && knull < n) {
        out.kernel.gap =
            std::abs(e.ev(knull)) / std::max(std::abs(e.ev(knull - 1)), 1e-300);
        out.kernel.gap_warning = out.kernel.gap < 10.0;
    }
    return out;
}

MomentSolution generic_point(const MomentProblem& mp, const SdpOptions& opts) {
    MomentSolution sol = solve_once(mp, opts, opts.seed);
    if (opts.restart_check) {
        MomentSolution check = solve_once(mp, opts, opts.seed + 8);
        if (check.rank != sol.rank)
            throw unstable_rank_error(
                "seeded restarts disagree on the moment-matrix rank (" +
                    std::to_string(sol.rank) + " vs " + std::to_string(check.rank) +
                    "); the face identification is numerically unstable",
                std::move(sol), std::move(check));
    }
    return sol;
}

} // namespace gibs
