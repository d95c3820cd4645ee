#pragma once

#include "gibs/monomial.hpp"

#include <unordered_map>
#include <vector>

namespace gibs {

/// Ordered monomial basis of J^d: all monomials with |a| <= d in n variables,
/// sorted by total degree descending, ties graded-lex descending with
/// x1 > x2 > ... > xn.  Every matrix in the library indexes its columns by
/// this order.
class MonomialBasis {
public:
    MonomialBasis() = default;
    MonomialBasis(int nvars, int degree);

    int nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return degree_; }
    int size() const noexcept { return static_cast<int>(monos_.size()); }
    const std::vector<Monomial>& monomials() const noexcept { return monos_; }
    const Monomial& at(int i) const { return monos_.at(i); }

    /// Column index of a monomial; throws argument_error if absent.
    int index_of(const Monomial& m) const;

    /// First index of the trailing block of monomials with degree <= g
    /// (the whole list if g >= degree, size() if g < 0).  Because degrees are
    /// non-increasing along the list, the block [first_index_deg_le(g), size())
    /// is exactly the basis of J^g in its own order.
    int first_index_deg_le(int g) const;

private:
    int nvars_ = 0;
    int degree_ = 0;
    std::vector<Monomial> monos_;
    std::unordered_map<Monomial, int, MonoHash> index_;
};

} // namespace gibs
