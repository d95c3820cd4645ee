#include "gibs/realradical.hpp"

#include "gibs/errors.hpp"
#include "gibs/io.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

namespace gibs {

namespace {

// Cleaned, monic-normalized copy of a generator list; zero polynomials drop.
PolySystem tidy(const PolySystem& P) {
    PolySystem out(P.nvars, {}, P.varnames);
    for (const auto& p : P.polys) {
        Polynomial q = normalize_monic(p);
        if (!q.is_zero()) out.polys.push_back(std::move(q));
    }
    return out;
}

// Flip the sign of p so that its largest-magnitude coefficient (the first
// such in monomial order, for near-ties) is positive.
Polynomial canonical_sign(const Polynomial& p) {
    const double amax = p.max_abs_coeff();
    if (amax == 0.0) return p;
    for (const auto& [mono, c] : p.terms()) {
        if (std::abs(c) >= amax * (1.0 - 1e-9)) {
            if (c < 0.0) {
                Polynomial q;
                for (const auto& [m2, c2] : p.terms()) q.add_term(m2, -c2);
                return q;
            }
            return p;
        }
    }
    return p;
}

} // namespace

iteration_limit_error::iteration_limit_error(const std::string& msg,
                                             std::vector<IterationRecord> trace)
    : resource_limit_error(msg, trace.empty()
                                    ? std::nullopt
                                    : std::optional<DimensionTable>(trace.back().table)),
      trace_(std::move(trace)) {}

RealRadicalResult gif_mmtx(const PolySystem& P, double eps, std::uint64_t seed,
                           int max_rounds, int kmax, bool verbose) {
    P.validate();
    if (P.polys.empty())
        throw argument_error("gif_mmtx: the input system is empty");
    if (max_rounds < 1)
        throw argument_error("gif_mmtx: max_rounds must be at least 1");

    PolySystem Q = P;
    double eps_round = eps;
    std::vector<IterationRecord> trace;
    for (int rnd = 0; rnd < max_rounds; ++rnd) {
        GifResult gres = gif(Q, eps_round, kmax, seed);
        PolySystem Q1 = tidy(gres.generators);
        if (Q1.polys.empty()) {
            // Degenerate: the projected kernel is all of J^dbar, so the ideal
            // carries no constraints at this degree.
            RealRadicalResult out;
            out.generators = Q1;
            out.trace = std::move(trace);
            out.gif = std::move(gres);
            return out;
        }
        MomentProblem mpb = build_moment_problem(Q1, eps);
        SdpOptions sopt;
        sopt.seed = seed;
        sopt.verbose = verbose;
        MomentSolution sol = generic_point(mpb, sopt);

        IterationRecord rec;
        rec.round = rnd;
        rec.k = gres.k;
        rec.l = gres.l;
        rec.dim = gres.dim;
        rec.rank = sol.rank;
        rec.ngens = static_cast<int>(Q1.polys.size());
        rec.kernel_dim = sol.kernel.dim();
        rec.lmin = sol.lmin;
        rec.noise = sol.noise;
        rec.eps_used = eps_round;
        rec.generators = Q1;
        rec.table = gres.table;
        trace.push_back(std::move(rec));
        if (verbose)
            std::cerr << "  round " << rnd << ": GIF cand=(" << gres.k << ","
                      << gres.l << ") d=" << gres.dim << " #gens=" << Q1.polys.size()
                      << " deg=" << Q1.degree() << " | MMtx rank r=" << sol.rank
                      << " ker=" << sol.kernel.dim() << " lmin=" << sol.lmin
                      << " noise=" << sol.noise << "\n";

        if (sol.rank == gres.dim) {
            RealRadicalResult out;
            out.generators = std::move(Q1);
            out.trace = std::move(trace);
            out.solution = std::move(sol);
            out.gif = std::move(gres);
            return out;
        }
        // Hand the moment-matrix kernel to the next round as polynomials over
        // the moment index basis (monomials up to the generator degree).
        PolySystem next = extract_generators(sol.kernel, mpb.index);
        next.varnames = Q.varnames;
        if (next.polys.empty())
            throw infeasible_error(
                "gif_mmtx: the moment-matrix kernel yielded no polynomials "
                "although rank < dim; the iteration cannot progress");
        Q = std::move(next);
        eps_round = std::max(eps, 3.0 * sol.noise);
    }
    throw iteration_limit_error(
        "gif_mmtx: no rank/dimension agreement within " +
            std::to_string(max_rounds) + " rounds",
        std::move(trace));
}

std::vector<SimplifyEntry> simplify_report(const PolySystem& Q, double eps) {
    Q.validate();
    std::vector<SimplifyEntry> out;
    if (Q.polys.empty()) return out;
    const int d = Q.degree();
    if (d == 0) return out;

    const auto [D0, basis0] = prolong_kernel(Q, 0, eps);
    for (int j = 0; j <= d; ++j) {
        auto [cur, curb] = project_kernel(D0, basis0, j, eps);
        const Subspace comp = orth_complement(cur, eps);
        if (comp.dim() == 0) continue;
        SimplifyEntry e;
        e.depth = j;
        e.degree = d - j;
        e.raw = PolySystem(Q.nvars, {}, Q.varnames);
        for (const auto& p : polys_from_rows(comp.basis, curb)) {
            Polynomial c = clean(p);
            if (!c.is_zero()) e.raw.polys.push_back(canonical_sign(c));
        }
        e.normalized = extract_generators(comp, curb);
        e.normalized.varnames = Q.varnames;
        out.push_back(std::move(e));
    }
    return out;
}

std::string format_simplify_report(const std::vector<SimplifyEntry>& entries,
                                   const PolySystem& Q) {
    std::ostringstream os;
    os << "simplification report: " << Q.polys.size() << " generator(s), degree "
       << Q.degree() << "\n";
    if (entries.empty()) {
        os << "  (nothing to report)\n";
        return os.str();
    }
    const auto names = display_names(Q.nvars, Q.varnames);
    for (const auto& e : entries) {
        os << "depth " << e.depth << " (degree " << e.degree << "): "
           << e.raw.polys.size() << " generator(s)\n";
        for (std::size_t i = 0; i < e.raw.polys.size(); ++i) {
            os << "  raw:        " << format_poly(e.raw.polys[i], names) << "\n";
            if (i < e.normalized.polys.size())
                os << "  normalized: " << format_poly(e.normalized.polys[i], names)
                   << "\n";
        }
    }
    return os.str();
}

} // namespace gibs
