#include "gibs/rng.hpp"

#include <cmath>

namespace gibs {

double Rng::uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

Eigen::VectorXd Rng::gauss_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss();
    return v;
}

Eigen::MatrixXd Rng::gauss_matrix(int rows, int cols) {
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = gauss();
    return m;
}

Eigen::MatrixXd random_frame(int n, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        Eigen::MatrixXd m = rng.gauss_matrix(n, n);
        if (std::abs(m.determinant()) > 1e-3) return m;
    }
}

} // namespace gibs
