#include "entmon/levelset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "entmon/errors.hpp"
#include "entmon/log.hpp"
#include "entmon/rng.hpp"

namespace entmon {

namespace {

void check_interior(const Eigen::VectorXd& x) {
    if (x.size() < 1) throw validation_error("F_full: need at least one coordinate");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!(x(i) > 0.0))
            throw domain_error("F_full: coordinate " + std::to_string(i) + " not positive");
        sum += x(i);
    }
    if (!(sum < 1.0)) throw domain_error("F_full: coordinates must sum below 1");
}

double xlnx(double x) { return x * std::log(x); }

} // namespace

double F_full(const Eigen::VectorXd& x) {
    check_interior(x);
    const double rest = 1.0 - x.sum();
    double f = -xlnx(rest);
    for (Eigen::Index i = 0; i < x.size(); ++i) f -= xlnx(x(i));
    return f;
}

Eigen::VectorXd grad_F(const Eigen::VectorXd& x) {
    check_interior(x);
    const double ln_rest = std::log(1.0 - x.sum());
    Eigen::VectorXd g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) g(i) = ln_rest - std::log(x(i));
    return g;
}

double gauss_ratio(const Eigen::VectorXd& x) {
    if (x.size() < 2) throw validation_error("gauss_ratio: need at least two coordinates");
    const Eigen::VectorXd g = grad_F(x);
    if (std::abs(g(1)) <= 1e-12)
        throw domain_error("gauss_ratio: second gradient component vanishes");
    return std::abs(g(0) / g(1));
}

LevelSetSlice LevelSetSlice::through(const Eigen::VectorXd& x) {
    if (x.size() < 2)
        throw validation_error("LevelSetSlice::through: need at least two coordinates");
    LevelSetSlice s;
    s.d_ = static_cast<int>(x.size()) + 1;
    s.c_ = F_full(x);
    s.tail_.assign(x.data() + 2, x.data() + x.size());
    s.w_ = 1.0;
    s.tail_entropy_ = 0.0;
    for (double xi : s.tail_) {
        s.w_ -= xi;
        s.tail_entropy_ -= xlnx(xi);
    }
    s.witness_l1_ = std::min(x(0), x(1));
    s.witness_l2_ = std::max(x(0), x(1));
    s.validate_and_witness();
    return s;
}

LevelSetSlice LevelSetSlice::at_level(int d, double c, const std::vector<double>& tail) {
    if (d < 3) throw validation_error("LevelSetSlice: dimension must be >= 3");
    if (static_cast<int>(tail.size()) != d - 3)
        throw validation_error("LevelSetSlice: tail must have d-3 entries");
    if (!(c > 0.0 && c < std::log(static_cast<double>(d))))
        throw validation_error("LevelSetSlice: level must lie in (0, ln d)");
    LevelSetSlice s;
    s.d_ = d;
    s.c_ = c;
    s.tail_ = tail;
    s.w_ = 1.0;
    s.tail_entropy_ = 0.0;
    for (double xi : tail) {
        if (!(xi > 0.0 && xi < 1.0))
            throw validation_error("LevelSetSlice: tail entries must lie in (0,1)");
        s.w_ -= xi;
        s.tail_entropy_ -= xlnx(xi);
    }
    if (!(s.w_ > 0.0 && s.w_ <= 1.0))
        throw validation_error("LevelSetSlice: tail mass leaves no room, w <= 0");
    s.witness_l1_ = -1.0; // force a search
    s.validate_and_witness();
    return s;
}

double LevelSetSlice::restricted_entropy(double l1, double l2) const {
    const double u = w_ - l1 - l2;
    if (!(l1 > 0.0 && l2 > 0.0 && u > 0.0))
        throw domain_error("restricted_entropy: point outside the open slice domain");
    return -xlnx(u) - xlnx(l1) - xlnx(l2) + tail_entropy_;
}

void LevelSetSlice::validate_and_witness() {
    if (witness_l1_ > 0.0) {
        const double got = restricted_entropy(witness_l1_, witness_l2_);
        if (std::abs(got - c_) > 1e-9)
            throw validation_error("LevelSetSlice: through-point does not reach the level");
        if (!(witness_l1_ + witness_l2_ < w_))
            throw validation_error("LevelSetSlice: through-point has no remaining mass");
        return;
    }
    // Scan lambda1 and bisect the lower lambda2 branch until an ordered
    // on-level point appears.
    const int grid = 400;
    for (int i = 1; i < grid; ++i) {
        const double l1 = w_ * i / (2.0 * grid); // lambda1 in (0, w/2)
        const double mid = 0.5 * (w_ - l1);
        if (mid <= l1) continue;
        const double f_mid = restricted_entropy(l1, mid);
        if (f_mid < c_) continue;
        // Root below mid exists iff F drops under c toward lambda2 -> 0.
        double lo = 1e-14 * w_, hi = mid;
        if (restricted_entropy(l1, lo) > c_) continue;
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (lo + hi);
            (restricted_entropy(l1, m) < c_ ? lo : hi) = m;
        }
        const double l2 = 0.5 * (lo + hi);
        if (l2 > l1 && l1 + l2 < w_ && std::abs(restricted_entropy(l1, l2) - c_) < 1e-10) {
            witness_l1_ = l1;
            witness_l2_ = l2;
            return;
        }
    }
    throw validation_error("LevelSetSlice: no ordered point with F = c exists on this slice");
}

double solve_lambda2(double lambda1, const LevelSetSlice& slice, double seed) {
    const double w = slice.mass();
    const double span = w - lambda1;
    if (!(lambda1 > 0.0 && span > 0.0))
        throw domain_error("solve_lambda2: lambda1 outside (0, w)");
    if (!(seed > 0.0 && seed < span))
        throw domain_error("solve_lambda2: seed outside (0, w - lambda1)");
    const double mid = 0.5 * span;
    const double side = seed - mid; // sign picks the branch
    const double c = slice.level();

    auto residual = [&](double l2) { return slice.restricted_entropy(lambda1, l2) - c; };
    auto dresidual = [&](double l2) {
        return std::log(w - lambda1 - l2) - std::log(l2); // d2 of restricted entropy
    };

    // Polishing to (near) machine precision keeps finite differences of
    // the solved root usable at small steps.
    auto polish = [&](double root) {
        for (int it = 0; it < 3; ++it) {
            const double r = residual(root);
            if (r == 0.0) break;
            const double dr = dresidual(root);
            if (dr == 0.0) break;
            const double next = root - r / dr;
            if (!(next > 0.0 && next < span)) break;
            if (std::abs(residual(next)) >= std::abs(r)) break;
            root = next;
        }
        return root;
    };

    // Newton with domain clamping.
    double l2 = seed;
    bool ok = false;
    for (int it = 0; it < 50; ++it) {
        const double r = residual(l2);
        if (std::abs(r) <= 1e-13) {
            l2 = polish(l2);
            ok = true;
            break;
        }
        const double dr = dresidual(l2);
        if (dr == 0.0) break;
        double next = l2 - r / dr;
        if (!(next > 0.0 && next < span)) break;
        l2 = next;
    }
    if (!ok || (l2 - mid) * side < 0.0) {
        // Bisection fallback on the seed's side of the fold.
        double lo = std::max(seed - 0.1, 1e-15 * w);
        double hi = std::min(seed + 0.1, span - 1e-15 * w);
        if (side < 0.0)
            hi = std::min(hi, mid);
        else
            lo = std::max(lo, mid);
        if (!(lo < hi)) throw tracking_error("solve_lambda2: empty bracket");
        double rlo = residual(lo), rhi = residual(hi);
        if (rlo * rhi > 0.0)
            throw tracking_error("solve_lambda2: Newton diverged and no sign change in bracket");
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (lo + hi);
            const double rm = residual(m);
            if (std::abs(rm) <= 1e-13) {
                lo = hi = m;
                break;
            }
            if (rlo * rm <= 0.0) {
                hi = m;
                rhi = rm;
            } else {
                lo = m;
                rlo = rm;
            }
        }
        l2 = polish(0.5 * (lo + hi));
        if (std::abs(residual(l2)) > 1e-13)
            throw tracking_error("solve_lambda2: bisection stalled above tolerance");
        if ((l2 - mid) * side < 0.0)
            throw tracking_error("solve_lambda2: root crossed the fold line");
    }
    if (!(lambda1 < l2 && l2 < w - lambda1 - l2)) {
        // Repeated violations are normal when sweeping across the
        // lambda1 = lambda2 diagonal; cap the noise.
        static std::atomic<int> warned{0};
        const int n = warned.fetch_add(1);
        if (n < 5)
            log::warn("solve_lambda2: root violates the ascending order lambda1 < lambda2 < u");
        else if (n == 5)
            log::warn("solve_lambda2: further ordering warnings suppressed");
    }
    return l2;
}

SliceDerivatives lambda2_derivatives(const SlicePoint& p, const LevelSetSlice& slice) {
    const double u = slice.mass() - p.lambda1 - p.lambda2;
    if (!(p.lambda1 > 0.0 && p.lambda2 > 0.0 && u > 0.0))
        throw domain_error("lambda2_derivatives: point outside the open slice domain");
    if (std::abs(slice.restricted_entropy(p.lambda1, p.lambda2) - slice.level()) > 1e-9)
        log::warn("lambda2_derivatives: point is off the level set; derivatives describe "
                  "the level through the point itself");

    const double d1 = std::log(u) - std::log(p.lambda1);
    const double d2 = std::log(u) - std::log(p.lambda2);
    if (std::abs(d2) <= 1e-12)
        throw domain_error("lambda2_derivatives: fold line (d2 C = 0), implicit function "
                           "theorem does not apply");

    SliceDerivatives out;
    out.lambda2_prime = -d1 / d2;
    out.hessian << -1.0 / p.lambda1 - 1.0 / u, -1.0 / u, -1.0 / u, -1.0 / p.lambda2 - 1.0 / u;
    const Eigen::Vector2d v(1.0, out.lambda2_prime);
    const double quad = v.dot(out.hessian * v);
    if (!(quad < 0.0))
        throw consistency_error("lambda2_derivatives: v^T H v >= 0 inside the domain");
    out.lambda2_second = -quad / d2;
    out.f_prime = -out.lambda2_second;
    return out;
}

double qubit_eigenvalue_for_entropy(double c) {
    if (!(c > 0.0 && c <= std::log(2.0)))
        throw validation_error("qubit_eigenvalue_for_entropy: c must lie in (0, ln 2]");
    // At the maximum the binary entropy is flat; the root there is 1/2
    // exactly and bisection could only locate it to sqrt(eps).
    if (std::log(2.0) - c <= 1e-15) return 0.5;
    auto h = [](double x) { return -xlnx(x) - xlnx(1.0 - x); };
    double lo = 1e-300, hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (lo + hi);
        (h(m) < c ? lo : hi) = m;
    }
    return 0.5 * (lo + hi);
}

double d2_witness(double c, int n_samples, std::uint64_t seed) {
    const double lam = qubit_eigenvalue_for_entropy(c);
    const double target = lam * lam + (1.0 - lam) * (1.0 - lam);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
    diag(0, 0) = lam;
    diag(1, 1) = 1.0 - lam;
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const Eigen::MatrixXcd u = rng.random_unitary(2);
        const Eigen::MatrixXcd rho = u * diag * u.adjoint();
        worst = std::max(worst, std::abs(rho.squaredNorm() - target));
    }
    return worst;
}

} // namespace entmon
