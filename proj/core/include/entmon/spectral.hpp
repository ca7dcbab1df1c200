#ifndef ENTMON_SPECTRAL_HPP
#define ENTMON_SPECTRAL_HPP

#include "entmon/hermitian.hpp"

namespace entmon {

/// Ascending eigenvalues and orthonormal eigenvectors of a Hermitian
/// matrix. Deterministic for a given input; degenerate spectra are
/// returned as-is (the caller decides whether degeneracy is acceptable).
Spectrum eigendecompose(const HermitianMatrix& m);

/// von Neumann entropy -tr(rho log_b rho). Eigenvalues below 1e-15 are
/// excluded from the sum. Throws validation_error for base <= 1.
double von_neumann_entropy(const DensityState& rho, double base);

/// Natural-log entropy, the common case.
inline double von_neumann_entropy(const DensityState& rho) {
    return von_neumann_entropy(rho, std::exp(1.0));
}

/// Gradient of the entropy functional: -(I + ln rho). Requires a
/// positive definite state.
HermitianMatrix entropy_gradient(const DensityState& rho);

/// Relative entropy S(rho||sigma) = tr(rho ln rho) - tr(rho ln sigma).
/// Returns +infinity when supp(rho) is not contained in supp(sigma).
double relative_entropy(const DensityState& rho, const DensityState& sigma);

/// tr(rho^2), in [1/d, 1].
double purity(const DensityState& rho);

/// Matrix logarithm of a positive definite Hermitian matrix, computed
/// through the eigendecomposition.
HermitianMatrix hermitian_log(const HermitianMatrix& m);

} // namespace entmon

#endif
