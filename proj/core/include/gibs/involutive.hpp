#pragma once

#include "gibs/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gibs {

/// Result of a Cartan involutivity test on a system presented at degree d.
struct SymbolInfo {
    int degree = 0;                  // degree at which the symbol was taken
    std::vector<int> betas;          // beta^(k) for k = 1..n (class-k pivots)
    long long cartan_sum = 0;        // sum of k * beta^(k)
    int prolonged_symbol_rank = 0;   // rank of the symbol of the prolongation
    bool involutive = false;         // cartan_sum == prolonged_symbol_rank
    std::string frame = "original";  // "original" or "random"
    std::uint64_t seed = 0;          // seed of the random frame, if used
};

/// Symbol of Q at degree dbar: the columns of C(Q) corresponding to the
/// degree-dbar monomials, sorted by descending class (ties follow the global
/// monomial order).  Requires 1 <= dbar and dbar >= deg(Q).  If classes_out
/// is non-null it receives the class of each returned column.
Eigen::MatrixXd symbol_matrix(const PolySystem& Q, int dbar,
                              std::vector<int>* classes_out = nullptr);

/// Full Cartan test in the current coordinates.  beta^(k) is computed from
/// ranks of the class-sorted symbol truncated to columns of class >= k; the
/// right-hand side is the rank of the degree-(dbar+1) columns of C(Pro Q).
/// The inequality cartan_sum <= prolonged_symbol_rank always holds, so a
/// passing test is definitive while a failure may be an artifact of
/// nongeneric coordinates.
SymbolInfo cartan_test(const PolySystem& Q, int dbar, double eps);

/// Runs cartan_test in the original coordinates and, if it fails, once more
/// in a seeded random coordinate frame (the frame is a throwaway used only
/// for the test).  The result records which frame passed, if any.
SymbolInfo cartan_with_retry(const PolySystem& Q, int dbar, double eps,
                             std::uint64_t seed);

/// dim pi^l D^k P == dim pi^(l+1) D^(k+1) P, read from the table.
bool elimination_test(const DimensionTable& table, int k, int l);

/// Two-variable shortcut: the symbol dimension dim Symbol pi^l D^k, computed
/// as entry(k,l) - entry(k,l+1), is unchanged from prolongation order k to
/// k+1.  Requires a 2-variable table.
bool symbol_involutive_2var(const DimensionTable& table, int k, int l);

/// Zero-dimensional criterion: entry(k,l) == entry(k,l+1) together with the
/// elimination test.
bool zero_dim_involutive_test(const DimensionTable& table, int k, int l);

/// Involutivity flags for one cell.  The symbol condition is accepted when
/// the symbol dimension is stable from column k to k+1 *or* the (retried)
/// Cartan test passes on the projected system; a degree-0 or empty symbol is
/// involutive by convention.  Ensures tower columns k and k+1.
CellFlags cell_flags(KernelTower& tower, int k, int l, double eps,
                     std::uint64_t seed);

/// Output of the geometric-involutive-basis search.
struct GifResult {
    int k = 0;    // prolongation order of the accepted cell
    int l = 0;    // projection order of the accepted cell
    int dim = 0;  // dim pi^l D^k P
    int dbar = 0; // degree of the projected system, d + k - l
    PolySystem generators; // normalized generators of the complement in J^dbar
    Subspace kernel;       // the accepted projected kernel itself
    DimensionTable table;  // entries/flags computed during the search
};

/// Geometric involutive basis: searches k = 0,1,... for cells (k,l) that pass
/// the elimination and symbol tests and whose generators reproduce the
/// original prolonged kernel (subspace inclusion of D^l of the candidate
/// generators in D^k P).  At the smallest such k, the deepest projection
/// (largest l, lowest degree) wins.  Throws resource_limit_error with the
/// partial table when k exceeds kmax.
GifResult gif(const PolySystem& P, double eps = 1e-8, int kmax = 10,
              std::uint64_t seed = 12345);

} // namespace gibs
