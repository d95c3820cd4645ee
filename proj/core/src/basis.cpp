#include "gibs/basis.hpp"

#include "gibs/errors.hpp"

#include <algorithm>

namespace gibs {

MonomialBasis::MonomialBasis(int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw argument_error("basis: need nvars >= 1");
    if (degree < 0) throw argument_error("basis: need degree >= 0");
    monos_.reserve(static_cast<std::size_t>(count_monomials(nvars, degree)));
    Monomial cur(nvars, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            monos_.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    for (int d = degree; d >= 0; --d) {
        const std::size_t start = monos_.size();
        rec(rec, 0, d);
        std::sort(monos_.begin() + start, monos_.end(), MonoDescOrder{});
    }
    index_.reserve(monos_.size());
    for (int i = 0; i < size(); ++i) index_.emplace(monos_[i], i);
}

int MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw argument_error("basis: monomial outside the degree bound");
    return it->second;
}

int MonomialBasis::first_index_deg_le(int g) const {
    if (g >= degree_) return 0;
    if (g < 0) return size();
    return size() - static_cast<int>(count_monomials(nvars_, g));
}

} // namespace gibs
