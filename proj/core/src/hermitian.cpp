#include "entmon/hermitian.hpp"

#include <cmath>
#include <string>

#include "entmon/errors.hpp"
#include "entmon/spectral.hpp"

namespace entmon {

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& m, double herm_tol) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw validation_error("HermitianMatrix: expected a non-empty square matrix");
    const double scale = std::max(1.0, m.norm());
    const double asym = (m - m.adjoint()).norm();
    if (asym > herm_tol * scale)
        throw validation_error("HermitianMatrix: input is not Hermitian (|A - A^t| = " +
                               std::to_string(asym) + ")");
    m_ = 0.5 * (m + m.adjoint().eval());
}

HermitianMatrix HermitianMatrix::diagonal(const Eigen::VectorXd& diag) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(diag.size(), diag.size());
    for (Eigen::Index i = 0; i < diag.size(); ++i) m(i, i) = diag(i);
    return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::identity(int d) {
    return HermitianMatrix(Eigen::MatrixXcd::Identity(d, d));
}

double Spectrum::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i + 1 < eigenvalues.size(); ++i)
        g = std::min(g, eigenvalues(i + 1) - eigenvalues(i));
    return g;
}

DensityState::DensityState(HermitianMatrix m) : matrix_(std::move(m)) {
    const double tr = matrix_.trace_real();
    if (std::abs(tr - 1.0) > 1e-12)
        throw validation_error("DensityState: trace must be 1, got " + std::to_string(tr));
    const Spectrum& s = spectrum();
    if (s.eigenvalues(0) < -1e-12)
        throw validation_error("DensityState: negative eigenvalue " +
                               std::to_string(s.eigenvalues(0)));
}

const Spectrum& DensityState::spectrum() const {
    if (!spectrum_cache_) spectrum_cache_ = eigendecompose(matrix_);
    return *spectrum_cache_;
}

bool DensityState::positive_definite() const { return spectrum().eigenvalues(0) > 0.0; }

bool DensityState::nondegenerate(double tol) const {
    const Spectrum& s = spectrum();
    const double scale = std::max(std::abs(s.eigenvalues(s.dim() - 1)), 1e-300);
    return s.min_gap() > tol * scale;
}

void DensityState::require_positive_definite(const char* who) const {
    if (!positive_definite())
        throw domain_error(std::string(who) + ": state must be positive definite");
}

void DensityState::require_nondegenerate(const char* who, double tol) const {
    if (!nondegenerate(tol)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", tol);
        throw domain_error(std::string(who) + ": spectrum is degenerate at tolerance " + buf);
    }
}

DensityState DensityState::from_diagonal(const Eigen::VectorXd& probs) {
    return DensityState(HermitianMatrix::diagonal(probs));
}

DensityState DensityState::maximally_mixed(int d) {
    return from_diagonal(Eigen::VectorXd::Constant(d, 1.0 / d));
}

} // namespace entmon
