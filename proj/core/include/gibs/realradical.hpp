#pragma once

#include "gibs/involutive.hpp"
#include "gibs/sdp.hpp"

#include <string>
#include <vector>

namespace gibs {

/// One round of the GIF / moment-matrix alternation.
struct IterationRecord {
    int round = 0;          // 0-based round index
    int k = 0, l = 0;       // winning cell of the GIF run
    int dim = 0;            // d = dim of the winning projected kernel
    int rank = 0;           // r = rank of the moment matrix of the GIF output
    int ngens = 0;          // generators handed to the moment problem
    int kernel_dim = 0;     // kernel dimension of the moment matrix
    double lmin = 0.0;      // smallest moment-matrix eigenvalue
    double noise = 0.0;     // spectral noise estimate of the kernel
    double eps_used = 0.0;  // tolerance the GIF run was performed at
    PolySystem generators;  // cleaned, normalized GIF output of this round
    DimensionTable table;   // dimension table of this round's GIF run
};

/// Result of the alternation: generators with rank == dim, the full trace,
/// the final moment solution and the final GIF result.
struct RealRadicalResult {
    PolySystem generators;
    std::vector<IterationRecord> trace;
    MomentSolution solution;
    GifResult gif;
};

/// Round budget exhausted; carries the trace of every completed round and the
/// dimension table of the last one.
class iteration_limit_error : public resource_limit_error {
public:
    iteration_limit_error(const std::string& msg, std::vector<IterationRecord> trace);
    const std::vector<IterationRecord>& trace() const noexcept { return trace_; }

private:
    std::vector<IterationRecord> trace_;
};

/// Alternates geometric involutive form computation with moment-matrix
/// generic points until rank == dim (the rank/dimension/involutive stopping
/// criterion): each round runs gif on the current generators, builds the
/// moment problem of the (cleaned, normalized) output, solves for a generic
/// maximum-rank PSD point, and — if the rank still falls short of the
/// projected-kernel dimension — hands the moment-kernel polynomials to the
/// next round.  Each hand-off floors the GIF tolerance at the solver's
/// spectral noise estimate so rank decisions stay above the noise.  The
/// output spans an ideal between <P> and its real radical.
RealRadicalResult gif_mmtx(const PolySystem& P, double eps = 1e-8,
                           std::uint64_t seed = 0, int max_rounds = 10,
                           int kmax = 10, bool verbose = false);

/// One entry of the simplification report: generators of the complement of
/// the depth-j projection of ker C(Q) — lower-degree polynomials implied by
/// Q that a human reader would prefer (e.g. a linear generator hiding under
/// a quadratic basis).
struct SimplifyEntry {
    int depth = 0;         // projection depth j
    int degree = 0;        // the generators live in J^{deg(Q) - j}
    PolySystem raw;        // cleaned orthonormal-complement rows
    PolySystem normalized; // same generators, monic-normalized
};

/// Scans every projection depth of ker C(Q) and reports the nonempty
/// complements.  Depth 0 restates (an orthonormalized version of) Q itself;
/// deeper entries expose lower-degree consequences.  Purely presentational —
/// Q is not modified.
std::vector<SimplifyEntry> simplify_report(const PolySystem& Q, double eps = 1e-8);

/// Text rendering of the report.
std::string format_simplify_report(const std::vector<SimplifyEntry>& entries,
                                   const PolySystem& Q);

} // namespace gibs
