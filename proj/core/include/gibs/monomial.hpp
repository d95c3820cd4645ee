#pragma once

#include <cstddef>
#include <vector>

namespace gibs {

/// A monomial x^a in n variables, stored as its exponent vector a in N^n.
using Monomial = std::vector<int>;

/// |a| = sum of exponents.
int total_degree(const Monomial& m);

/// Class of a nonconstant monomial: the least 1-based index j with a_j != 0.
/// Returns 0 for the constant monomial (class undefined).
int mono_class(const Monomial& m);

/// Three-way comparison in graded-lexicographic order with x1 > x2 > ... > xn:
/// first by total degree, ties by lexicographic comparison of the exponent
/// vectors.  Returns <0, 0, >0 like strcmp.
int mono_cmp(const Monomial& a, const Monomial& b);

/// Strict ordering that puts the *largest* monomial first (total degree
/// descending, ties graded-lex descending).  This is the global column order
/// shared by every matrix in the library.
struct MonoDescOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b) > 0;
    }
};

/// Hash functor so monomials can key unordered containers.
struct MonoHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Componentwise product x^a * x^b = x^(a+b).
Monomial mono_mul(const Monomial& a, const Monomial& b);

/// N(n,d) = C(n+d,d): number of monomials of degree <= d in n variables.
long long count_monomials(int n, int d);

/// N_deg(n,d) = C(n+d-1,d): number of monomials of degree exactly d.
long long count_degree(int n, int d);

/// N_c(n,d,k) = C(n+d-k-1,d-1): number of class-k monomials of degree d.
/// Requires 1 <= k <= n.
long long count_class(int n, int d, int k);

} // namespace gibs
