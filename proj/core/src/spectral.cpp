#include "entmon/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "entmon/errors.hpp"

namespace entmon {

Spectrum eigendecompose(const HermitianMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.entries());
    if (solver.info() != Eigen::Success)
        throw domain_error("eigendecompose: solver did not converge");
    Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
    // Fix each eigenvector's global phase: largest-modulus entry real positive.
    for (int j = 0; j < s.dim(); ++j) {
        Eigen::Index imax = 0;
        s.eigenvectors.col(j).cwiseAbs().maxCoeff(&imax);
        const Complex z = s.eigenvectors(imax, j);
        if (std::abs(z) > 0.0) s.eigenvectors.col(j) *= std::conj(z) / std::abs(z);
    }
    return s;
}

double von_neumann_entropy(const DensityState& rho, double base) {
    if (!(base > 1.0)) throw validation_error("von_neumann_entropy: base must be > 1");
    const Eigen::VectorXd& lam = rho.spectrum().eigenvalues;
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam(i) > kZeroEigTol) s -= lam(i) * std::log(lam(i));
    }
    return s / std::log(base);
}

HermitianMatrix entropy_gradient(const DensityState& rho) {
    rho.require_positive_definite("entropy_gradient");
    const Spectrum& s = rho.spectrum();
    Eigen::VectorXd g(s.dim());
    for (int i = 0; i < s.dim(); ++i) g(i) = -1.0 - std::log(s.eigenvalues(i));
    const Eigen::MatrixXcd m =
        s.eigenvectors * g.asDiagonal().toDenseMatrix().cast<Complex>() * s.eigenvectors.adjoint();
    return HermitianMatrix(m, 1e-12);
}

double relative_entropy(const DensityState& rho, const DensityState& sigma) {
    if (rho.dim() != sigma.dim())
        throw validation_error("relative_entropy: dimension mismatch");
    const Spectrum& sr = rho.spectrum();
    const Spectrum& ss = sigma.spectrum();

    // Support containment: every eigenvector of rho with weight > 1e-12
    // must project onto range(sigma) with norm >= 1 - 1e-10.
    std::vector<int> sigma_range;
    for (int j = 0; j < ss.dim(); ++j)
        if (ss.eigenvalues(j) > 1e-12) sigma_range.push_back(j);
    for (int i = 0; i < sr.dim(); ++i) {
        if (sr.eigenvalues(i) <= 1e-12) continue;
        double proj = 0.0;
        for (int j : sigma_range)
            proj += std::norm(ss.eigenvectors.col(j).dot(sr.eigenvectors.col(i)));
        if (proj < 1.0 - 1e-10) return std::numeric_limits<double>::infinity();
    }

    double tr_rho_ln_rho = 0.0;
    for (int i = 0; i < sr.dim(); ++i)
        if (sr.eigenvalues(i) > kZeroEigTol)
            tr_rho_ln_rho += sr.eigenvalues(i) * std::log(sr.eigenvalues(i));

    double tr_rho_ln_sigma = 0.0;
    for (int j : sigma_range) {
        const double w = (ss.eigenvectors.col(j).adjoint() * rho.matrix().entries() *
                          ss.eigenvectors.col(j))(0)
                             .real();
        tr_rho_ln_sigma += w * std::log(ss.eigenvalues(j));
    }
    return tr_rho_ln_rho - tr_rho_ln_sigma;
}

double purity(const DensityState& rho) { return rho.matrix().entries().squaredNorm(); }

HermitianMatrix hermitian_log(const HermitianMatrix& m) {
    Spectrum s = eigendecompose(m);
    if (s.eigenvalues(0) <= 0.0)
        throw domain_error("hermitian_log: matrix must be positive definite");
    Eigen::VectorXd lg(s.dim());
    for (int i = 0; i < s.dim(); ++i) lg(i) = std::log(s.eigenvalues(i));
    const Eigen::MatrixXcd out =
        s.eigenvectors * lg.asDiagonal().toDenseMatrix().cast<Complex>() * s.eigenvectors.adjoint();
    return HermitianMatrix(out, 1e-12);
}

} // namespace entmon
