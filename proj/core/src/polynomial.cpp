#include "gibs/polynomial.hpp"

#include "gibs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace gibs {

Polynomial::Polynomial(std::initializer_list<std::pair<Monomial, double>> terms) {
    for (const auto& [m, c] : terms) add_term(m, c);
}

int Polynomial::nvars() const noexcept {
    return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

int Polynomial::degree() const noexcept {
    // Terms are sorted by degree descending, so the first term is maximal.
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

double Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::max_abs_coeff() const {
    double mx = 0.0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, std::abs(c));
    return mx;
}

void Polynomial::add_term(const Monomial& m, double c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    } else if (c == 0.0) {
        terms_.erase(it);
    }
}

double Polynomial::eval(const std::vector<double>& point) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        if (m.size() != point.size())
            throw argument_error("eval: point dimension does not match monomial");
        double t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

Polynomial mul_mono(const Polynomial& p, const Monomial& a) {
    Polynomial::TermMap out;
    for (const auto& [m, c] : p.terms()) out.emplace(mono_mul(m, a), c);
    return Polynomial(std::move(out));
}

Polynomial clean(const Polynomial& p, double thresh) {
    if (p.is_zero()) return p;
    const double mx = p.max_abs_coeff();
    if (mx == 0.0) return Polynomial{};
    Polynomial::TermMap out;
    for (const auto& [m, c] : p.terms())
        if (std::abs(c) >= thresh * mx) out.emplace(m, c);
    return Polynomial(std::move(out));
}

Polynomial normalize_monic(const Polynomial& p, double sig) {
    Polynomial q = clean(p);
    if (q.is_zero()) return q;
    const double cmax = q.max_abs_coeff();
    // Terms iterate largest monomial first: the first significant one leads.
    double lead = 0.0;
    for (const auto& [m, c] : q.terms()) {
        if (std::abs(c) >= sig * cmax) {
            lead = c;
            break;
        }
    }
    Polynomial::TermMap out;
    for (const auto& [m, c] : q.terms()) out.emplace(m, c / lead);
    return Polynomial(std::move(out));
}

Polynomial transform(const Polynomial& p, const Eigen::MatrixXd& frame) {
    const int n = static_cast<int>(frame.rows());
    if (frame.cols() != n) throw argument_error("transform: frame must be square");
    using Acc = std::unordered_map<Monomial, double, MonoHash>;
    Acc total;
    for (const auto& [mono, c] : p.terms()) {
        if (static_cast<int>(mono.size()) != n)
            throw argument_error("transform: frame size does not match variables");
        Acc acc;
        acc.emplace(Monomial(n, 0), c);
        for (int i = 0; i < n; ++i) {
            for (int rep = 0; rep < mono[i]; ++rep) {
                Acc next;
                for (const auto& [mm, cc] : acc) {
                    for (int j = 0; j < n; ++j) {
                        if (frame(i, j) == 0.0) continue;
                        Monomial m2 = mm;
                        ++m2[j];
                        next[m2] += cc * frame(i, j);
                    }
                }
                acc = std::move(next);
            }
        }
        for (const auto& [mm, cc] : acc) total[mm] += cc;
    }
    Polynomial out;
    for (const auto& [mm, cc] : total)
        if (cc != 0.0) out.add_term(mm, cc);
    return out;
}

PolySystem::PolySystem(int n, std::vector<Polynomial> ps,
                       std::vector<std::string> names)
    : nvars(n), polys(std::move(ps)), varnames(std::move(names)) {
    validate();
}

int PolySystem::degree() const noexcept {
    int d = 0;
    for (const auto& p : polys) d = std::max(d, p.degree());
    return d;
}

void PolySystem::validate() const {
    if (nvars < 0) throw argument_error("system: negative variable count");
    for (const auto& p : polys)
        if (!p.is_zero() && p.nvars() != nvars)
            throw argument_error("system: member variable count mismatch");
    if (!varnames.empty() && static_cast<int>(varnames.size()) != nvars)
        throw argument_error("system: varnames length must equal nvars");
}

PolySystem prolong(const PolySystem& P, int k) {
    if (k < 0) throw argument_error("prolong: need k >= 0");
    if (P.empty()) return P;
    const int d = P.degree();
    std::vector<Polynomial> out;
    // Multiplier monomials are enumerated largest-first to match the global
    // order; the row order of the prolonged system is not semantically
    // significant but is kept deterministic.
    for (const auto& p : P.polys) {
        const int maxm = d + k - p.degree();
        // all multiplier monomials with degree <= maxm
        std::vector<Monomial> mults;
        mults.reserve(static_cast<std::size_t>(count_monomials(P.nvars, maxm)));
        Monomial cur(P.nvars, 0);
        // enumerate by recursion over variable positions
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == P.nvars - 1) {
                cur[pos] = rem;
                mults.push_back(cur);
                return;
            }
            for (int e = rem; e >= 0; --e) {
                cur[pos] = e;
                self(self, pos + 1, rem - e);
            }
        };
        for (int deg = maxm; deg >= 0; --deg) {
            if (P.nvars == 0) break;
            rec(rec, 0, deg);
        }
        std::sort(mults.begin(), mults.end(), MonoDescOrder{});
        for (const auto& a : mults) out.push_back(mul_mono(p, a));
    }
    return PolySystem(P.nvars, std::move(out), P.varnames);
}

PolySystem transform(const PolySystem& P, const Eigen::MatrixXd& frame) {
    std::vector<Polynomial> out;
    out.reserve(P.polys.size());
    for (const auto& p : P.polys) out.push_back(transform(p, frame));
    return PolySystem(P.nvars, std::move(out), P.varnames);
}

std::vector<std::string> display_names(int nvars,
                                       const std::vector<std::string>& given) {
    if (!given.empty()) return given;
    static const char* kShort[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int i = 0; i < nvars; ++i) {
        if (nvars <= 4)
            names.emplace_back(kShort[i]);
        else
            names.emplace_back("x" + std::to_string(i + 1));
    }
    return names;
}

} // namespace gibs
