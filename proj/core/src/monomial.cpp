#include "gibs/monomial.hpp"

#include "gibs/errors.hpp"

#include <numeric>

namespace gibs {

int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

int mono_class(const Monomial& m) {
    for (std::size_t j = 0; j < m.size(); ++j)
        if (m[j] != 0) return static_cast<int>(j) + 1;
    return 0;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

std::size_t MonoHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ m.size();
    for (int e : m) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) +
             (h >> 2);
    }
    return h;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw argument_error("monomial variable counts differ");
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

namespace {

long long binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return r;
}

} // namespace

long long count_monomials(int n, int d) {
    if (n < 1) throw argument_error("count_monomials: need n >= 1");
    if (d < 0) throw argument_error("count_monomials: need d >= 0");
    return binom(n + d, d);
}

long long count_degree(int n, int d) {
    if (n < 1) throw argument_error("count_degree: need n >= 1");
    if (d < 0) return 0;
    return binom(n + d - 1, d);
}

long long count_class(int n, int d, int k) {
    if (n < 1) throw argument_error("count_class: need n >= 1");
    if (k < 1 || k > n)
        throw argument_error("count_class: class index k must satisfy 1 <= k <= n");
    if (d < 1) return 0;
    return binom(n + d - k - 1, d - 1);
}

} // namespace gibs
