#include <doctest.h>

#include <cmath>

#include "entmon/errors.hpp"
#include "entmon/spectral.hpp"
#include "support.hpp"

using namespace entmon;

namespace {
Eigen::VectorXd vec3(double a, double b, double c) {
    Eigen::VectorXd v(3);
    v << a, b, c;
    return v;
}
} // namespace

TEST_CASE("eigendecompose: scalar and diagonal inputs") {
    const DensityState id3 = DensityState::maximally_mixed(3);
    const Spectrum& s = id3.spectrum();
    for (int i = 0; i < 3; ++i) CHECK(s.eigenvalues(i) == doctest::Approx(1.0 / 3).epsilon(1e-14));

    const DensityState diag = DensityState::from_diagonal(vec3(0.5, 0.2, 0.3));
    const Spectrum& sd = diag.spectrum();
    CHECK(sd.eigenvalues(0) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(sd.eigenvalues(1) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(sd.eigenvalues(2) == doctest::Approx(0.5).epsilon(1e-14));
    // Standard-basis eigenvectors, up to the fixed phase convention.
    for (int j = 0; j < 3; ++j) {
        int hits = 0;
        for (int i = 0; i < 3; ++i)
            if (std::abs(sd.eigenvectors(i, j)) > 0.999) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("eigendecompose: reconstruction and Gram identity on random Hermitian") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Eigen::MatrixXcd g = rng.ginibre(4);
        HermitianMatrix h(0.5 * (g + g.adjoint().eval()), 1e-12);
        const Spectrum s = eigendecompose(h);
        Eigen::MatrixXcd rebuilt =
            s.eigenvectors * s.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
            s.eigenvectors.adjoint();
        CHECK((h.entries() - rebuilt).norm() <= 1e-10 * h.entries().norm());
        CHECK((s.eigenvectors.adjoint() * s.eigenvectors -
               Eigen::MatrixXcd::Identity(4, 4)).norm() <= 1e-10);
        for (int i = 0; i + 1 < 4; ++i) CHECK(s.eigenvalues(i) <= s.eigenvalues(i + 1));
    }
}

TEST_CASE("eigendecompose rejects non-Hermitian input") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0; // strictly upper, not mirrored
    CHECK_THROWS_AS(HermitianMatrix{m}, validation_error);
}

TEST_CASE("von Neumann entropy: pure, uniform, dyadic") {
    CHECK(von_neumann_entropy(DensityState::from_diagonal(vec3(1.0, 0.0, 0.0))) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(von_neumann_entropy(DensityState::maximally_mixed(3)) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-14));
    // (1/2, 1/4, 1/4) -> (3/2) ln 2, an exact dyadic-log value.
    const double expected = 1.5 * std::log(2.0);
    CHECK(von_neumann_entropy(DensityState::from_diagonal(vec3(0.5, 0.25, 0.25))) ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK(von_neumann_entropy(DensityState::from_diagonal(vec3(0.5, 0.25, 0.25)), 2.0) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK_THROWS_AS(von_neumann_entropy(DensityState::maximally_mixed(2), 1.0),
                    validation_error);
}

TEST_CASE("entropy is unitarily invariant") {
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        const DensityState rho = test::random_density(rng, 3);
        const Eigen::MatrixXcd u = rng.random_unitary(3);
        const DensityState rotated(
            HermitianMatrix(u * rho.matrix().entries() * u.adjoint(), 1e-11));
        CHECK(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(rotated)) <= 1e-12);
    }
}

TEST_CASE("entropy gradient: diagonal formula and identity case") {
    const int d = 4;
    const HermitianMatrix g = entropy_gradient(DensityState::maximally_mixed(d));
    const double expect = std::log(double(d)) - 1.0;
    CHECK((g.entries() - expect * Eigen::MatrixXcd::Identity(d, d)).norm() <= 1e-12);

    const HermitianMatrix g3 = entropy_gradient(DensityState::from_diagonal(vec3(0.2, 0.3, 0.5)));
    CHECK(g3.entries()(0, 0).real() == doctest::Approx(-1.0 - std::log(0.2)).epsilon(1e-13));
    CHECK(g3.entries()(1, 1).real() == doctest::Approx(-1.0 - std::log(0.3)).epsilon(1e-13));
    CHECK(g3.entries()(2, 2).real() == doctest::Approx(-1.0 - std::log(0.5)).epsilon(1e-13));

    CHECK_THROWS_AS(entropy_gradient(DensityState::from_diagonal(vec3(1.0, 0.0, 0.0))),
                    domain_error);
}

TEST_CASE("entropy gradient matches directional finite differences") {
    Rng rng(17);
    const double t = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 3;
        const DensityState rho = test::random_density(rng, d);
        const HermitianMatrix a = test::random_traceless(rng, d);
        const DensityState shifted(
            HermitianMatrix(rho.matrix().entries() + t * a.entries(), 1e-11));
        const double fd = (von_neumann_entropy(shifted) - von_neumann_entropy(rho)) / t;
        const double pairing =
            (a.entries() * entropy_gradient(rho).entries()).trace().real();
        CHECK(std::abs(fd - pairing) <= 1e-6);
    }
}

TEST_CASE("relative entropy: identical states, maximally mixed reference, support") {
    Rng rng(23);
    const DensityState rho = test::random_density(rng, 3);
    CHECK(std::abs(relative_entropy(rho, rho)) <= 1e-12);

    // S(rho || I/d) = ln d - S(rho).
    const DensityState mixed = DensityState::maximally_mixed(3);
    CHECK(relative_entropy(rho, mixed) ==
          doctest::Approx(std::log(3.0) - von_neumann_entropy(rho)).epsilon(1e-12));

    const DensityState pure = DensityState::from_diagonal(vec3(1.0, 0.0, 0.0));
    const DensityState off = DensityState::from_diagonal(vec3(0.0, 0.5, 0.5));
    CHECK(std::isinf(relative_entropy(pure, off)));
    CHECK(relative_entropy(pure, off) > 0);

    // Matching rank-deficient supports stay finite.
    const DensityState rank2a = DensityState::from_diagonal(vec3(0.7, 0.3, 0.0));
    const DensityState rank2b = DensityState::from_diagonal(vec3(0.4, 0.6, 0.0));
    const double s = relative_entropy(rank2a, rank2b);
    CHECK(std::isfinite(s));
    CHECK(s == doctest::Approx(0.7 * std::log(0.7 / 0.4) + 0.3 * std::log(0.3 / 0.6))
                   .epsilon(1e-12));
}

TEST_CASE("relative entropy decomposition S(rho||sigma) + S(rho) + tr(rho ln sigma) = 0") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        const DensityState rho = test::random_density(rng, 3);
        const DensityState sigma = test::random_density(rng, 3);
        const Eigen::MatrixXcd ln_sigma = hermitian_log(sigma.matrix()).entries();
        const double tr_rho_ln_sigma =
            (rho.matrix().entries() * ln_sigma).trace().real();
        const double total =
            relative_entropy(rho, sigma) + von_neumann_entropy(rho) + tr_rho_ln_sigma;
        CHECK(std::abs(total) <= 1e-10);
        CHECK(relative_entropy(rho, sigma) >= -1e-10);
    }
}

TEST_CASE("purity: pure, mixed, explicit") {
    CHECK(purity(DensityState::from_diagonal(vec3(1.0, 0.0, 0.0))) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(purity(DensityState::maximally_mixed(4)) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(purity(DensityState::from_diagonal(vec3(0.5, 0.3, 0.2))) ==
          doctest::Approx(0.38).epsilon(1e-14));
}

TEST_CASE("density state validation") {
    CHECK_THROWS_AS(DensityState::from_diagonal(vec3(0.5,  0.2, 0.2)), validation_error);
    Eigen::VectorXd neg(2);
    neg << 1.2, -0.2;
    CHECK_THROWS_AS(DensityState::from_diagonal(neg), validation_error);
    // Degenerate state constructs fine but fails the non-degeneracy gate.
    const DensityState id3 = DensityState::maximally_mixed(3);
    CHECK(!id3.nondegenerate());
    CHECK_THROWS_AS(id3.require_nondegenerate("test"), domain_error);
}
