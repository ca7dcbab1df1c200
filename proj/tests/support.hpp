#ifndef ENTMON_TESTS_SUPPORT_HPP
#define ENTMON_TESTS_SUPPORT_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "entmon/hermitian.hpp"
#include "entmon/rng.hpp"

namespace entmon::test {

/// Random density state with eigenvalues bounded away from 0 and from
/// each other, conjugated by a Haar unitary.
inline DensityState random_density(Rng& rng, int d, double min_eig = 0.05,
                                   double min_gap = 0.01) {
    for (;;) {
        Eigen::VectorXd lam(d);
        double sum = 0.0;
        for (int i = 0; i < d; ++i) {
            lam(i) = min_eig + rng.uniform();
            sum += lam(i);
        }
        lam /= sum;
        std::sort(lam.data(), lam.data() + d);
        bool ok = lam(0) >= min_eig / (1.0 + d * min_eig);
        for (int i = 0; i + 1 < d; ++i) ok = ok && (lam(i + 1) - lam(i) > min_gap);
        if (!ok) continue;
        const Eigen::MatrixXcd u = rng.random_unitary(d);
        const Eigen::MatrixXcd rho =
            u * lam.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint();
        return DensityState(HermitianMatrix(rho, 1e-12));
    }
}

/// Random traceless Hermitian direction with Frobenius norm `norm`.
inline HermitianMatrix random_traceless(Rng& rng, int d, double norm = 0.1) {
    Eigen::MatrixXcd g = rng.ginibre(d);
    Eigen::MatrixXcd h = 0.5 * (g + g.adjoint().eval());
    h -= (h.trace() / double(d)) * Eigen::MatrixXcd::Identity(d, d);
    h *= norm / h.norm();
    return HermitianMatrix(h, 1e-12);
}

} // namespace entmon::test

#endif
