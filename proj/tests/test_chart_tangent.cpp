#include <doctest.h>

#include <cmath>

#include "entmon/chart.hpp"
#include "entmon/errors.hpp"
#include "entmon/spectral.hpp"
#include "entmon/tangent.hpp"
#include "support.hpp"

using namespace entmon;

namespace {
Eigen::VectorXd vec3(double a, double b, double c) {
    Eigen::VectorXd v(3);
    v << a, b, c;
    return v;
}
} // namespace

TEST_CASE("coordinate basis spans Hermitian space orthogonally") {
    const auto basis = coordinate_basis(3);
    REQUIRE(basis.size() == 9);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK((basis[i] - basis[i].adjoint().eval()).norm() <= 1e-15);
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            CHECK(std::abs((basis[i].adjoint() * basis[j]).trace().real()) <= 1e-15);
    }
}

TEST_CASE("build_chart: diagonal state is perfectly conditioned") {
    const ChartReport r = build_chart(DensityState::from_diagonal(vec3(0.2, 0.3, 0.5)));
    CHECK(r.full_rank);
    CHECK(r.jacobian_condition == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.eigenvalue_block_rank == 3);
    CHECK(r.selected_rows.size() == 6);
    // For a diagonal state the eigenvalue rows duplicate the diagonal
    // coordinates, so the greedy pass deletes exactly those (indices 6,7,8).
    for (int kept : r.selected_rows) CHECK(kept < 6);
}

TEST_CASE("build_chart: random non-degenerate states have full rank") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const DensityState rho = test::random_density(rng, 3);
        const ChartReport r = build_chart(rho);
        CHECK(r.full_rank);
        CHECK(r.jacobian_condition < 1e8);
        CHECK(r.eigenvalue_block_rank == 3);
    }
}

TEST_CASE("build_chart and tangent rank generalize to d = 4") {
    Rng rng(47);
    const DensityState rho = test::random_density(rng, 4);
    const ChartReport r = build_chart(rho);
    CHECK(r.full_rank);
    CHECK(r.eigenvalue_block_rank == 4);
    CHECK(r.selected_rows.size() == 12);

    CHECK(constraint_tangent_rank(rho, HermitianMatrix::identity(4)) == 3);
    const HermitianMatrix dir = test::random_traceless(rng, 4, 1.0);
    const Eigen::MatrixXcd comm = rho.matrix().entries() * dir.entries() -
                                  dir.entries() * rho.matrix().entries();
    if (comm.norm() > 1e-10) CHECK(constraint_tangent_rank(rho, dir) == 4);
}

TEST_CASE("build_chart rejects degenerate spectra") {
    CHECK_THROWS_AS(build_chart(DensityState::maximally_mixed(3)), domain_error);
    CHECK_THROWS_AS(build_chart(DensityState::from_diagonal(vec3(0.25, 0.25, 0.5))),
                    domain_error);
}

TEST_CASE("constraint tangent rank: commutator dichotomy") {
    const DensityState rho = DensityState::from_diagonal(vec3(0.2, 0.3, 0.5));

    Eigen::MatrixXcd off = Eigen::MatrixXcd::Zero(3, 3);
    off(0, 1) = Complex(1.0, 0.0);
    off(1, 0) = Complex(1.0, 0.0);
    off(0, 2) = Complex(0.5, 0.25);
    off(2, 0) = Complex(0.5, -0.25);
    const HermitianMatrix grad_off(off);
    const Eigen::MatrixXcd comm =
        rho.matrix().entries() * off - off * rho.matrix().entries();
    REQUIRE(comm.norm() > 1e-10);
    CHECK(constraint_tangent_rank(rho, grad_off) == 3);

    // Commuting gradients lose exactly one direction.
    CHECK(constraint_tangent_rank(rho, HermitianMatrix::diagonal(vec3(1.0, 2.0, 3.0))) == 2);
    CHECK(constraint_tangent_rank(rho, HermitianMatrix::identity(3)) == 2);

    CHECK_THROWS_AS(constraint_tangent_rank(DensityState::maximally_mixed(3), grad_off),
                    domain_error);
}

TEST_CASE("relent constraint wiring") {
    const DensityState uniform = DensityState::maximally_mixed(3);
    Rng rng(43);
    const DensityState rho = test::random_density(rng, 3);

    SUBCASE("sigma = I/d gives grad = -ln d * I and zero commutator") {
        const RelativeEntropyConstraint rc = relent_constraint(uniform, rho);
        CHECK((rc.grad_h.entries() +
               std::log(3.0) * Eigen::MatrixXcd::Identity(3, 3)).norm() <= 1e-12);
        CHECK(rc.commutator_norm <= 1e-12);
    }

    SUBCASE("non-commuting pair has positive commutator and full rank") {
        const DensityState sigma = DensityState::from_diagonal(vec3(0.5, 0.3, 0.2));
        Eigen::MatrixXcd m = vec3(0.3, 0.33, 0.37).asDiagonal().toDenseMatrix().cast<Complex>();
        m(0, 1) = Complex(0.05, 0.02);
        m(1, 0) = Complex(0.05, -0.02);
        const DensityState rho_tilde{HermitianMatrix(m)};
        const RelativeEntropyConstraint rc = relent_constraint(sigma, rho_tilde);
        CHECK(rc.commutator_norm > 1e-6);
        CHECK(constraint_tangent_rank(rho_tilde, rc.grad_h) == 3);
    }

    SUBCASE("simultaneously diagonal states commute") {
        const DensityState sigma = DensityState::from_diagonal(vec3(0.5, 0.3, 0.2));
        const DensityState rho_diag = DensityState::from_diagonal(vec3(0.1, 0.35, 0.55));
        CHECK(relent_constraint(sigma, rho_diag).commutator_norm <= 1e-12);
    }

    SUBCASE("singular sigma is rejected") {
        const DensityState singular = DensityState::from_diagonal(vec3(0.0, 0.5, 0.5));
        CHECK_THROWS_AS(relent_constraint(singular, rho), domain_error);
    }
}
