#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace gibs {

/// Deterministic random source.  Gaussian variates are produced by an
/// explicit Box-Muller transform over 53-bit uniforms so that streams are
/// bit-reproducible across platforms and standard-library versions
/// (std::normal_distribution is not portable across implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0,1) with 53 random bits.
    double uniform01();

    /// Standard normal variate.
    double gauss();

    Eigen::VectorXd gauss_vector(int n);
    Eigen::MatrixXd gauss_matrix(int rows, int cols);

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Random n x n coordinate frame with standard-normal entries, redrawn until
/// |det| > 1e-3 so the change of variables is safely invertible.
Eigen::MatrixXd random_frame(int n, std::uint64_t seed);

} // namespace gibs
