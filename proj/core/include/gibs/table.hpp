#pragma once

#include "gibs/errors.hpp"
#include "gibs/subspace.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gibs {

/// Involutivity flags attached to a table cell (k,l).
struct CellFlags {
    bool elimination = false; // dim pi^l D^k = dim pi^(l+1) D^(k+1)
    bool symbol = false;      // symbol involutive (stability or Cartan test)
    bool involutive = false;  // both of the above
};

/// Grid of dim pi^l D^k P values with per-cell involutivity flags.
///
/// `entries` holds every defined cell for k = 0..kmax+1 (one column beyond
/// the reported range, because the elimination and symbol-stability tests at
/// column k compare against column k+1); rendering and flags stop at kmax.
struct DimensionTable {
    int nvars = 0;
    int degree = 0; // input system degree d; cells exist for l <= d + k
    int kmax = 0;
    double eps = 1e-8;
    std::map<std::pair<int, int>, int> entries;
    std::map<std::pair<int, int>, CellFlags> flags;
    bool gap_warning = false;

    bool defined(int k, int l) const;
    /// Entry at (k,l); throws argument_error when the cell is undefined or
    /// was not computed.
    int entry(int k, int l) const;
    /// Entry at (k,l), or `fallback` when the cell is undefined/not computed.
    int entry_or(int k, int l, int fallback) const;

    /// Aligned text grid (rows l, columns k = 0..kmax) with flag marks and a
    /// legend: '*' involutive, 'e' elimination only, 's' symbol only.
    std::string to_text() const;
};

/// Caches the kernels D^k P and their successive projections pi^l so that
/// tables and the involutive-basis search never recompute a column.
class KernelTower {
public:
    KernelTower(PolySystem P, double eps);

    const PolySystem& system() const noexcept { return P_; }
    int nvars() const noexcept { return P_.nvars; }
    int degree() const noexcept { return d_; }
    double eps() const noexcept { return eps_; }

    /// Computes (if needed) column k: D^k and its projections l = 0..d+k.
    void ensure_column(int k);

    bool has_column(int k) const;
    int dim(int k, int l) const;
    const Subspace& space(int k, int l) const;
    const MonomialBasis& basis(int k, int l) const;
    int max_computed_k() const;
    bool gap_warning() const noexcept { return gap_warning_; }

    /// Copies the computed dims into a table skeleton (no flags).
    DimensionTable snapshot(int kmax_report) const;

private:
    PolySystem P_;
    int d_ = 0;
    double eps_ = 1e-8;
    bool gap_warning_ = false;
    // column k -> spaces for l = 0..d+k (index l), and matching bases
    std::map<int, std::vector<Subspace>> columns_;
    std::map<int, std::vector<MonomialBasis>> bases_;
};

/// Builds the dimension table of P for k = 0..kmax with involutivity flags on
/// every defined cell (entries extend to column kmax+1; see DimensionTable).
/// `seed` drives the random coordinate frame used to retry a failed Cartan
/// test on a candidate symbol.
DimensionTable dimension_table(const PolySystem& P, int kmax, double eps,
                               std::uint64_t seed = 12345);

/// Resource exhaustion (k_max or iteration budget hit); carries whatever part
/// of the dimension table was computed before giving up.
class resource_limit_error : public error {
public:
    resource_limit_error(const std::string& msg,
                         std::optional<DimensionTable> partial = std::nullopt)
        : error(msg), partial_(std::move(partial)) {}
    const std::optional<DimensionTable>& partial_table() const noexcept {
        return partial_;
    }

private:
    std::optional<DimensionTable> partial_;
};

} // namespace gibs
