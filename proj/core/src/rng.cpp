#include "entmon/rng.hpp"

#include <cmath>

namespace entmon {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Eigen::MatrixXcd Rng::ginibre(int d) {
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m(i, j) = complex_gaussian();
    return m;
}

Eigen::MatrixXcd Rng::random_unitary(int d) {
    Eigen::MatrixXcd a = ginibre(d);
    // Modified Gram-Schmidt; deterministic and good enough at these sizes.
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < j; ++k) {
            const std::complex<double> coef = a.col(k).dot(a.col(j));
            a.col(j) -= coef * a.col(k);
        }
        a.col(j) /= a.col(j).norm();
    }
    return a;
}

} // namespace entmon
