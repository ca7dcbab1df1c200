#ifndef ENTMON_TANGENT_HPP
#define ENTMON_TANGENT_HPP

#include "entmon/hermitian.hpp"

namespace entmon {

/// Rank of the eigenbasis pushforward restricted to the orthogonal
/// complement of grad_h in Hermitian space: an orthonormal basis {X_k}
/// of grad_h-perp (d^2 - 1 matrices under <A,B> = tr(AB)) is mapped to
/// the vectors (<phi_i| X_k |phi_i>)_i and the numerical rank of the
/// resulting d x (d^2-1) matrix is returned. Equals d exactly when
/// [rho, grad_h] != 0, and d-1 when grad_h commutes with rho.
int constraint_tangent_rank(const DensityState& rho, const HermitianMatrix& grad_h);

struct RelativeEntropyConstraint {
    HermitianMatrix grad_h;       // ln sigma
    double commutator_norm = 0.0; // ||[rho_tilde, ln sigma]||_F
};

/// Gradient of h(rho) = tr(rho ln sigma) together with the commutator
/// norm that decides whether the constrained level set stays
/// spectrum-only. Requires positive definite sigma.
RelativeEntropyConstraint relent_constraint(const DensityState& sigma,
                                            const DensityState& rho_tilde);

} // namespace entmon

#endif
