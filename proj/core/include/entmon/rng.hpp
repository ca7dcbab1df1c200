#ifndef ENTMON_RNG_HPP
#define ENTMON_RNG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace entmon {

/// Seeded random source with platform-independent output. Only the raw
/// mt19937_64 stream is used; uniform and normal variates are derived
/// from it directly so the same seed reproduces the same draws on any
/// standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller.
    double gaussian();

    std::complex<double> complex_gaussian() { return {gaussian(), gaussian()}; }

    /// d x d matrix of independent complex standard gaussians.
    Eigen::MatrixXcd ginibre(int d);

    /// Haar-distributed unitary (QR of a Ginibre matrix with the phase
    /// convention that makes R's diagonal positive).
    Eigen::MatrixXcd random_unitary(int d);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace entmon

#endif
