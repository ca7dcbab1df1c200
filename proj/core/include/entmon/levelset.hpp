#ifndef ENTMON_LEVELSET_HPP
#define ENTMON_LEVELSET_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "entmon/hermitian.hpp"

namespace entmon {

/// Shannon entropy (natural log) of the distribution (x_1, ..., x_{d-1},
/// 1 - sum x). Throws domain_error at or outside the simplex boundary.
double F_full(const Eigen::VectorXd& x);

/// Gradient of F_full: component i is ln(1 - sum_j x_j) - ln x_i.
Eigen::VectorXd grad_F(const Eigen::VectorXd& x);

/// Gauss-map ratio |grad F_1 / grad F_2|, the (1,1)/(2,2) square-root
/// ratio of the normal-space projector grad F grad F^T / |grad F|^2.
/// Throws domain_error when |grad F_2| <= 1e-12.
double gauss_ratio(const Eigen::VectorXd& x);

/// Two-variable slice of the entropy level set: all but the first two
/// coordinates are frozen to the tail (xi_3, ..., xi_{d-1}), leaving
/// the curve lambda_2(lambda_1) at level c inside mass w = 1 - sum tail.
class LevelSetSlice {
public:
    /// Slice through an explicit interior point x (length d-1): level
    /// c = F_full(x), tail = x[2:].
    static LevelSetSlice through(const Eigen::VectorXd& x);

    /// Slice at an explicit level. Verifies that a point lambda_1 <
    /// lambda_2, lambda_1 + lambda_2 < w with F = c exists.
    static LevelSetSlice at_level(int d, double c, const std::vector<double>& tail);

    int dim() const { return d_; }
    double level() const { return c_; }
    double mass() const { return w_; }
    double tail_entropy() const { return tail_entropy_; }
    const std::vector<double>& tail() const { return tail_; }

    /// F restricted to the slice: -u ln u - l1 ln l1 - l2 ln l2 + tail
    /// entropy with u = w - l1 - l2.
    double restricted_entropy(double lambda1, double lambda2) const;

    /// A point (lambda1, lambda2) on the level set with lambda1 <
    /// lambda2 and lambda1 + lambda2 < w, found at construction.
    double witness_lambda1() const { return witness_l1_; }
    double witness_lambda2() const { return witness_l2_; }

private:
    LevelSetSlice() = default;
    void validate_and_witness();

    int d_ = 0;
    double c_ = 0.0;
    double w_ = 1.0;
    double tail_entropy_ = 0.0;
    std::vector<double> tail_;
    double witness_l1_ = 0.0, witness_l2_ = 0.0;
};

/// Point on (or near) the two-variable slice.
struct SlicePoint {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

/// Solves F_slice(lambda1, .) = c by Newton from `seed`, with a
/// bisection fallback on [seed - 0.1, seed + 0.1] clipped to the domain.
/// The root is kept on the seed's side of the fold line lambda2 =
/// (w - lambda1)/2; crossing it is a tracking_error.
double solve_lambda2(double lambda1, const LevelSetSlice& slice, double seed);

struct SliceDerivatives {
    double lambda2_prime = 0.0;  // -f
    double lambda2_second = 0.0; // -(v^T H v) / d2C
    double f_prime = 0.0;        // -lambda2_second
    Eigen::Matrix2d hessian;     // H_ij = -delta_ij / lambda_i - 1/u
};

/// First and second implicit derivatives of lambda2(lambda1) and the
/// derivative of the Gauss ratio along the slice. Throws domain_error
/// on the fold line (d2C = 0) and consistency_error if the concavity
/// certificate v^T H v < 0 fails.
SliceDerivatives lambda2_derivatives(const SlicePoint& p, const LevelSetSlice& slice);

/// d = 2 check that entropy level sets are purity level sets: samples
/// n random qubit states at entropy c and returns the maximum
/// |tr(rho^2) - (lambda^2 + (1-lambda)^2)|.
double d2_witness(double c, int n_samples, std::uint64_t seed = 0);

/// The qubit eigenvalue lambda in (0, 1/2] with binary-entropy(lambda)
/// = c (natural log), used by d2_witness and exposed for tests.
double qubit_eigenvalue_for_entropy(double c);

} // namespace entmon

#endif
