#include "gibs/table.hpp"

#include "gibs/errors.hpp"
#include "gibs/involutive.hpp"

#include <algorithm>
#include <sstream>

namespace gibs {

bool DimensionTable::defined(int k, int l) const {
    return k >= 0 && l >= 0 && l <= degree + k;
}

int DimensionTable::entry(int k, int l) const {
    auto it = entries.find({k, l});
    if (it == entries.end())
        throw argument_error("table entry (" + std::to_string(k) + "," +
                             std::to_string(l) + ") was not computed");
    return it->second;
}

int DimensionTable::entry_or(int k, int l, int fallback) const {
    auto it = entries.find({k, l});
    return it == entries.end() ? fallback : it->second;
}

std::string DimensionTable::to_text() const {
    std::ostringstream os;
    os << "dim pi^l D^k P   (n=" << nvars << ", d=" << degree
       << ", eps=" << eps << ")\n";
    os << " l\\k";
    for (int k = 0; k <= kmax; ++k) {
        os << "   " << k << "    ";
    }
    os << "\n";
    const int lmax = degree + kmax;
    for (int l = 0; l <= lmax; ++l) {
        os << (l < 10 ? "  " : " ") << l << " ";
        for (int k = 0; k <= kmax; ++k) {
            if (!defined(k, l) || entries.find({k, l}) == entries.end()) {
                os << "        ";
                continue;
            }
            const int v = entry(k, l);
            std::string mark;
            auto it = flags.find({k, l});
            if (it != flags.end()) {
                if (it->second.involutive)
                    mark = "*";
                else if (it->second.elimination)
                    mark = "e";
                else if (it->second.symbol)
                    mark = "s";
            }
            std::string cell = std::to_string(v) + mark;
            os << " ";
            for (std::size_t pad = cell.size(); pad < 6; ++pad) os << " ";
            os << cell << " ";
        }
        os << "\n";
    }
    os << "flags: * involutive (elimination and symbol), e elimination only, "
          "s symbol only\n";
    if (gap_warning)
        os << "warning: a rank decision had singular-value gap < 10; entries "
              "may be tolerance-sensitive\n";
    return os.str();
}

KernelTower::KernelTower(PolySystem P, double eps) : P_(std::move(P)), eps_(eps) {
    P_.validate();
    if (P_.empty()) throw argument_error("kernel tower: empty system");
    if (P_.nvars < 1) throw argument_error("kernel tower: system has no variables");
    d_ = P_.degree();
}

void KernelTower::ensure_column(int k) {
    if (k < 0) throw argument_error("kernel tower: negative prolongation order");
    if (columns_.count(k)) return;
    auto [K, basis] = prolong_kernel(P_, k, eps_);
    gap_warning_ = gap_warning_ || K.gap_warning;
    std::vector<Subspace> spaces;
    std::vector<MonomialBasis> bases;
    spaces.reserve(d_ + k + 1);
    bases.reserve(d_ + k + 1);
    // Each level projects the column's kernel directly (truncate the original
    // orthonormal basis by l degree blocks, re-orthonormalize once) rather
    // than projecting level l-1 again: stepwise re-normalization can promote
    // a sub-tolerance direction back above the rank cut.
    for (int l = 0; l <= d_ + k; ++l) {
        auto [proj, lower] = project_kernel(K, basis, l, eps_);
        gap_warning_ = gap_warning_ || proj.gap_warning;
        spaces.push_back(std::move(proj));
        bases.push_back(std::move(lower));
    }
    columns_.emplace(k, std::move(spaces));
    bases_.emplace(k, std::move(bases));
}

bool KernelTower::has_column(int k) const { return columns_.count(k) > 0; }

int KernelTower::dim(int k, int l) const { return space(k, l).dim(); }

const Subspace& KernelTower::space(int k, int l) const {
    auto it = columns_.find(k);
    if (it == columns_.end() || l < 0 || l >= static_cast<int>(it->second.size()))
        throw argument_error("kernel tower: cell not computed");
    return it->second[l];
}

const MonomialBasis& KernelTower::basis(int k, int l) const {
    auto it = bases_.find(k);
    if (it == bases_.end() || l < 0 || l >= static_cast<int>(it->second.size()))
        throw argument_error("kernel tower: cell not computed");
    return it->second[l];
}

int KernelTower::max_computed_k() const {
    return columns_.empty() ? -1 : columns_.rbegin()->first;
}

DimensionTable KernelTower::snapshot(int kmax_report) const {
    DimensionTable t;
    t.nvars = P_.nvars;
    t.degree = d_;
    t.kmax = kmax_report;
    t.eps = eps_;
    t.gap_warning = gap_warning_;
    for (const auto& [k, spaces] : columns_)
        for (int l = 0; l < static_cast<int>(spaces.size()); ++l)
            t.entries[{k, l}] = spaces[l].dim();
    return t;
}

DimensionTable dimension_table(const PolySystem& P, int kmax, double eps,
                               std::uint64_t seed) {
    if (kmax < 0) throw argument_error("dimension_table: need kmax >= 0");
    KernelTower tower(P, eps);
    for (int k = 0; k <= kmax + 1; ++k) tower.ensure_column(k);
    DimensionTable t = tower.snapshot(kmax);
    for (int k = 0; k <= kmax; ++k)
        for (int l = 0; l <= P.degree() + k; ++l)
            t.flags[{k, l}] = cell_flags(tower, k, l, eps, seed);
    return t;
}

} // namespace gibs
