#include "entmon/tangent.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <vector>

#include "entmon/chart.hpp"
#include "entmon/errors.hpp"
#include "entmon/spectral.hpp"

namespace entmon {

namespace {

double hs_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a.adjoint() * b).trace().real();
}

} // namespace

int constraint_tangent_rank(const DensityState& rho, const HermitianMatrix& grad_h) {
    rho.require_nondegenerate("constraint_tangent_rank");
    const int d = rho.dim();
    if (grad_h.dim() != d)
        throw validation_error("constraint_tangent_rank: dimension mismatch");
    const double gnorm = grad_h.frobenius_norm();
    if (gnorm < 1e-14)
        throw validation_error("constraint_tangent_rank: grad_h must be nonzero");

    const Eigen::MatrixXcd g = grad_h.entries() / gnorm;
    const Spectrum& s = rho.spectrum();

    // Orthonormal basis of grad_h-perp by Gram-Schmidt over the
    // coordinate basis; exactly one direction is absorbed by g.
    std::vector<Eigen::MatrixXcd> ortho;
    ortho.reserve(static_cast<std::size_t>(d) * d - 1);
    for (const Eigen::MatrixXcd& b : coordinate_basis(d)) {
        Eigen::MatrixXcd x = b - hs_inner(g, b) * g;
        for (const Eigen::MatrixXcd& y : ortho) x -= hs_inner(y, x) * y;
        const double nrm = std::sqrt(hs_inner(x, x));
        if (nrm > 1e-10) ortho.push_back(x / nrm);
    }

    Eigen::MatrixXd m(d, static_cast<Eigen::Index>(ortho.size()));
    for (std::size_t k = 0; k < ortho.size(); ++k)
        for (int i = 0; i < d; ++i)
            m(i, static_cast<Eigen::Index>(k)) =
                (s.eigenvectors.col(i).adjoint() * ortho[k] * s.eigenvectors.col(i))(0).real();

    const Eigen::VectorXd sv = m.jacobiSvd().singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-8 * sv(0)) ++rank;
    return rank;
}

RelativeEntropyConstraint relent_constraint(const DensityState& sigma,
                                            const DensityState& rho_tilde) {
    sigma.require_positive_definite("relent_constraint");
    if (sigma.dim() != rho_tilde.dim())
        throw validation_error("relent_constraint: dimension mismatch");
    HermitianMatrix grad_h = hermitian_log(sigma.matrix());
    const Eigen::MatrixXcd comm = rho_tilde.matrix().entries() * grad_h.entries() -
                                  grad_h.entries() * rho_tilde.matrix().entries();
    return RelativeEntropyConstraint{std::move(grad_h), comm.norm()};
}

} // namespace entmon
