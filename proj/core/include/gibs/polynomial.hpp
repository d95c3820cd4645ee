#pragma once

#include "gibs/monomial.hpp"

#include <Eigen/Dense>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gibs {

/// Sparse real polynomial.  Terms are kept in the global monomial order
/// (largest first), so iteration starts at the leading term.
class Polynomial {
public:
    using TermMap = std::map<Monomial, double, MonoDescOrder>;

    Polynomial() = default;
    explicit Polynomial(TermMap terms) : terms_(std::move(terms)) {}
    Polynomial(std::initializer_list<std::pair<Monomial, double>> terms);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Number of variables (exponent-vector length); 0 for the zero polynomial.
    int nvars() const noexcept;

    /// Max total degree over stored terms; 0 for the zero polynomial.
    int degree() const noexcept;

    /// Coefficient of a monomial (0.0 if absent).
    double coeff(const Monomial& m) const;

    /// Largest |coefficient|; 0.0 for the zero polynomial.
    double max_abs_coeff() const;

    /// Adds c * x^m, summing with an existing term; drops the term if the sum
    /// becomes exactly zero.
    void add_term(const Monomial& m, double c);

    /// Value at a point.
    double eval(const std::vector<double>& point) const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

private:
    TermMap terms_;
};

/// x^a * p.
Polynomial mul_mono(const Polynomial& p, const Monomial& a);

/// Drops terms with |coeff| < thresh * max|coeff| (relative cleanup).
Polynomial clean(const Polynomial& p, double thresh = 1e-10);

/// Cleans, then divides by the coefficient of the largest monomial whose
/// coefficient is significant (|c| >= sig * max|coeff|).  The significance
/// floor keeps numerical noise in high-degree slots from being chosen as the
/// leading term.  Returns the zero polynomial unchanged.
Polynomial normalize_monic(const Polynomial& p, double sig = 1e-6);

/// Substitution p(x) -> p(F x) for an n x n frame F.  Exact-zero coefficients
/// produced by cancellation are dropped.
Polynomial transform(const Polynomial& p, const Eigen::MatrixXd& frame);

/// A list of polynomials over a common variable set.  `varnames` is optional
/// presentation metadata; when empty, default names are used for display.
struct PolySystem {
    int nvars = 0;
    std::vector<Polynomial> polys;
    std::vector<std::string> varnames; // empty, or exactly nvars entries

    PolySystem() = default;
    PolySystem(int n, std::vector<Polynomial> ps,
               std::vector<std::string> names = {});

    int size() const noexcept { return static_cast<int>(polys.size()); }
    bool empty() const noexcept { return polys.empty(); }

    /// Max degree over members; 0 for an empty system.
    int degree() const noexcept;

    /// Throws argument_error if any member uses a different variable count or
    /// if varnames is present with the wrong length.
    void validate() const;
};

/// Window prolongation: every product x^a * p with p in P and
/// deg(x^a * p) <= deg(P) + k.  Multiples of lower-degree members up to the
/// shared degree window are included.
PolySystem prolong(const PolySystem& P, int k);

/// Applies `transform` to every member.
PolySystem transform(const PolySystem& P, const Eigen::MatrixXd& frame);

/// Default display names: x,y,z,w for n <= 4, else x1..xn.  If `given` is
/// nonempty it is returned unchanged.
std::vector<std::string> display_names(int nvars,
                                       const std::vector<std::string>& given = {});

} // namespace gibs
