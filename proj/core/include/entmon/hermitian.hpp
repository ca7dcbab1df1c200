#ifndef ENTMON_HERMITIAN_HPP
#define ENTMON_HERMITIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>

namespace entmon {

using Complex = std::complex<double>;

// Relative eigenvalue gap below which a spectrum counts as degenerate.
inline constexpr double kDegeneracyTol = 1e-10;

// Eigenvalues smaller than this are treated as exact zeros in entropy
// sums (the 0 log 0 = 0 convention).
inline constexpr double kZeroEigTol = 1e-15;

/// Hermitian d x d matrix. Construction symmetrizes the input and
/// rejects anything farther than `herm_tol` from its own adjoint.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const Eigen::MatrixXcd& m, double herm_tol = 1e-14);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& entries() const { return m_; }

    double trace_real() const { return m_.trace().real(); }
    double frobenius_norm() const { return m_.norm(); }

    static HermitianMatrix diagonal(const Eigen::VectorXd& diag);
    static HermitianMatrix identity(int d);

private:
    Eigen::MatrixXcd m_;
};

/// Eigen-decomposition with ascending eigenvalues and orthonormal
/// eigenvectors (columns). Phases are fixed so that the largest-modulus
/// component of each eigenvector is real positive.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    int dim() const { return static_cast<int>(eigenvalues.size()); }
    double min_gap() const;
};

/// Density matrix: Hermitian, trace one, positive semidefinite.
/// Positive definiteness and a non-degenerate spectrum are required by
/// some operations only; they are separate checks, not construction
/// invariants.
class DensityState {
public:
    explicit DensityState(HermitianMatrix m);

    int dim() const { return matrix_.dim(); }
    const HermitianMatrix& matrix() const { return matrix_; }
    const Spectrum& spectrum() const;

    bool positive_definite() const;
    bool nondegenerate(double tol = kDegeneracyTol) const;
    void require_positive_definite(const char* who) const;
    void require_nondegenerate(const char* who, double tol = kDegeneracyTol) const;

    static DensityState from_diagonal(const Eigen::VectorXd& probs);
    static DensityState maximally_mixed(int d);

private:
    HermitianMatrix matrix_;
    mutable std::optional<Spectrum> spectrum_cache_;
};

} // namespace entmon

#endif
