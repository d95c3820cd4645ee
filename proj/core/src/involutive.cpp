#include "gibs/involutive.hpp"

#include "gibs/errors.hpp"
#include "gibs/rng.hpp"

#include <algorithm>
#include <numeric>

namespace gibs {

namespace {

/// Cleaned nonzero polynomials spanning the orthogonal complement of S.
std::vector<Polynomial> cleaned_complement(const Subspace& S,
                                           const MonomialBasis& basis,
                                           double eps) {
    std::vector<Polynomial> out;
    for (auto& p : complement_system(S, basis, eps)) {
        Polynomial q = clean(p);
        if (!q.is_zero()) out.push_back(std::move(q));
    }
    return out;
}

} // namespace

Eigen::MatrixXd symbol_matrix(const PolySystem& Q, int dbar,
                              std::vector<int>* classes_out) {
    if (dbar < 1) throw argument_error("symbol_matrix: need degree >= 1");
    if (dbar < Q.degree())
        throw argument_error("symbol_matrix: degree below system degree");
    CoeffMatrix cm = coefficient_matrix(Q, dbar);
    // Degree-dbar monomials form the leading block of the basis.
    const int ntop = static_cast<int>(count_degree(Q.nvars, dbar));
    std::vector<int> cols(ntop);
    std::iota(cols.begin(), cols.end(), 0);
    std::sort(cols.begin(), cols.end(), [&](int a, int b) {
        const int ca = mono_class(cm.basis.at(a));
        const int cb = mono_class(cm.basis.at(b));
        if (ca != cb) return ca > cb;
        return mono_cmp(cm.basis.at(a), cm.basis.at(b)) > 0;
    });
    Eigen::MatrixXd S(cm.A.rows(), ntop);
    for (int j = 0; j < ntop; ++j) S.col(j) = cm.A.col(cols[j]);
    if (classes_out) {
        classes_out->resize(ntop);
        for (int j = 0; j < ntop; ++j)
            (*classes_out)[j] = mono_class(cm.basis.at(cols[j]));
    }
    return S;
}

SymbolInfo cartan_test(const PolySystem& Q, int dbar, double eps) {
    Q.validate();
    const int n = Q.nvars;
    SymbolInfo info;
    info.degree = dbar;
    if (dbar == 0 || Q.empty()) {
        info.betas.assign(std::max(n, 0), 0);
        info.involutive = true;
        return info;
    }
    std::vector<int> classes;
    const Eigen::MatrixXd S = symbol_matrix(Q, dbar, &classes);
    // Columns are sorted by descending class, so {class >= k} is a prefix.
    auto prefix_rank = [&](int k) {
        int cnt = 0;
        for (int c : classes)
            if (c >= k) ++cnt;
        return rank_of(S.leftCols(cnt), eps);
    };
    info.betas.resize(n);
    for (int k = 1; k <= n; ++k)
        info.betas[k - 1] = prefix_rank(k) - prefix_rank(k + 1);
    info.cartan_sum = 0;
    for (int k = 1; k <= n; ++k)
        info.cartan_sum += static_cast<long long>(k) * info.betas[k - 1];
    // rank of the degree-(dbar+1) block of the one-step prolongation
    CoeffMatrix pm = coefficient_matrix(prolong(Q, 1), dbar + 1);
    const int ntop = static_cast<int>(count_degree(n, dbar + 1));
    info.prolonged_symbol_rank = rank_of(pm.A.leftCols(ntop), eps);
    info.involutive = (info.cartan_sum == info.prolonged_symbol_rank);
    return info;
}

SymbolInfo cartan_with_retry(const PolySystem& Q, int dbar, double eps,
                             std::uint64_t seed) {
    SymbolInfo info = cartan_test(Q, dbar, eps);
    if (info.involutive) return info;
    const Eigen::MatrixXd F = random_frame(Q.nvars, seed);
    SymbolInfo retried = cartan_test(transform(Q, F), dbar, eps);
    retried.frame = "random";
    retried.seed = seed;
    return retried;
}

bool elimination_test(const DimensionTable& table, int k, int l) {
    return table.entry(k, l) == table.entry(k + 1, l + 1);
}

bool symbol_involutive_2var(const DimensionTable& table, int k, int l) {
    if (table.nvars != 2)
        throw argument_error("symbol_involutive_2var: table is not 2-variable");
    const int s0 = table.entry(k, l) - table.entry_or(k, l + 1, 0);
    const int s1 = table.entry(k + 1, l) - table.entry_or(k + 1, l + 1, 0);
    return s0 == s1;
}

bool zero_dim_involutive_test(const DimensionTable& table, int k, int l) {
    return table.entry(k, l) == table.entry_or(k, l + 1, 0) &&
           elimination_test(table, k, l);
}

CellFlags cell_flags(KernelTower& tower, int k, int l, double eps,
                     std::uint64_t seed) {
    tower.ensure_column(k);
    tower.ensure_column(k + 1);
    const int d = tower.degree();
    const int n = tower.nvars();
    if (l < 0 || l > d + k) throw argument_error("cell_flags: l out of range");
    CellFlags f;
    f.elimination = tower.dim(k, l) == tower.dim(k + 1, l + 1);
    const int dbar = d + k - l;
    if (dbar == 0 || n == 1) {
        f.symbol = true;
    } else {
        // symbol dimension of pi^l D^k is dim(k,l) - dim(k,l+1); stability
        // from column k to k+1 certifies an involutive symbol cheaply.
        const int s0 = tower.dim(k, l) - tower.dim(k, l + 1);
        const int s1 = tower.dim(k + 1, l) - tower.dim(k + 1, l + 1);
        if (s1 == s0) {
            f.symbol = true;
        } else {
            std::vector<Polynomial> Q =
                cleaned_complement(tower.space(k, l), tower.basis(k, l), eps);
            if (Q.empty()) {
                f.symbol = true; // empty symbol is involutive by convention
            } else {
                PolySystem sys(n, std::move(Q));
                f.symbol = cartan_with_retry(sys, dbar, eps, seed).involutive;
            }
        }
    }
    f.involutive = f.elimination && f.symbol;
    return f;
}

GifResult gif(const PolySystem& P, double eps, int kmax, std::uint64_t seed) {
    P.validate();
    if (P.empty()) throw argument_error("gif: empty system");
    if (kmax < 0) throw argument_error("gif: need kmax >= 0");
    KernelTower tower(P, eps);
    const int d = tower.degree();
    const int n = tower.nvars();
    std::map<std::pair<int, int>, CellFlags> flag_cache;

    auto make_table = [&](int kreport) {
        DimensionTable t = tower.snapshot(kreport);
        for (const auto& [cell, fl] : flag_cache)
            if (cell.first <= kreport) t.flags[cell] = fl;
        return t;
    };

    for (int k = 0; k <= kmax; ++k) {
        tower.ensure_column(k);
        tower.ensure_column(k + 1);
        std::vector<int> candidates;
        for (int l = 0; l <= d + k; ++l) {
            const CellFlags f = cell_flags(tower, k, l, eps, seed);
            flag_cache[{k, l}] = f;
            if (f.involutive) candidates.push_back(l);
        }
        // Keep candidates whose generators prolong back onto D^k P: the
        // inclusion certifies that the projected system generates the same
        // ideal as the input.
        std::vector<int> survivors;
        for (int l : candidates) {
            const int dbar = d + k - l;
            std::vector<Polynomial> Q =
                cleaned_complement(tower.space(k, l), tower.basis(k, l), eps);
            bool included = false;
            if (Q.empty() && dbar < d + k) {
                // an empty projected system regenerates everything only if
                // the unprojected kernel is already the full space
                included = tower.dim(k, 0) == tower.basis(k, 0).size();
            } else if (l == 0) {
                included = true;
            } else {
                PolySystem sys(n, Q);
                auto [DlQ, dl_basis] =
                    prolong_kernel_to(sys, d + k, eps);
                (void)dl_basis;
                included = subspace_included(DlQ, tower.space(k, 0));
            }
            if (included) survivors.push_back(l);
        }
        if (!survivors.empty()) {
            const int l = *std::max_element(survivors.begin(), survivors.end());
            GifResult res;
            res.k = k;
            res.l = l;
            res.dim = tower.dim(k, l);
            res.dbar = d + k - l;
            res.kernel = tower.space(k, l);
            res.generators =
                extract_generators(orth_complement(tower.space(k, l), eps),
                                   tower.basis(k, l));
            res.generators.varnames = P.varnames;
            res.table = make_table(k);
            return res;
        }
    }
    throw resource_limit_error(
        "gif: no involutive candidate with a certified inclusion up to kmax=" +
            std::to_string(kmax),
        make_table(kmax));
}

} // namespace gibs
