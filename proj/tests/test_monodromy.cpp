#include <doctest.h>

#include <cmath>

#include "entmon/errors.hpp"
#include "entmon/monodromy.hpp"

using namespace entmon;

namespace {

LevelSetSlice default_slice() {
    Eigen::VectorXd x(2);
    x << 0.2, 0.3;
    return LevelSetSlice::through(x);
}

Complex fold_residual(const LevelSetSlice& slice, Complex l1) {
    const Complex half = 0.5 * (slice.mass() - l1);
    return -l1 * std::log(l1) - 2.0 * (half * std::log(half)) + slice.tail_entropy() -
           slice.level();
}

} // namespace

TEST_CASE("find_branch_points: residuals, mandatory singularities, symmetric level") {
    const LevelSetSlice slice = default_slice();
    const auto points = find_branch_points(slice);

    bool has_zero = false, has_mass = false;
    for (const Complex& p : points) {
        if (std::abs(p) < 1e-12) {
            has_zero = true;
            continue;
        }
        if (std::abs(p - Complex(slice.mass(), 0.0)) < 1e-12) {
            has_mass = true;
            continue;
        }
        CHECK(std::abs(fold_residual(slice, p)) <= 1e-10);
    }
    CHECK(has_zero);
    CHECK(has_mass);

    // Near the uniform level the two real folds merge into lambda1 =
    // 1/3 (where lambda1 = lambda2 = u solves both equations): at level
    // ln 3 - delta they sit at 1/3 -+ sqrt(delta / 2.25) + O(delta).
    const double delta = 0.01;
    const LevelSetSlice sym = LevelSetSlice::at_level(3, std::log(3.0) - delta, {});
    const double spread = std::sqrt(delta / 2.25);
    bool below = false, above = false;
    for (const Complex& p : find_branch_points(sym)) {
        if (std::abs(p - Complex(1.0 / 3 - spread, 0.0)) < 5e-3) below = true;
        if (std::abs(p - Complex(1.0 / 3 + spread, 0.0)) < 5e-3) above = true;
    }
    CHECK(below);
    CHECK(above);
}

TEST_CASE("rational_guard: rational starts rejected, the working start accepted") {
    const RationalGuardResult bad = rational_guard(1.0, 1.0);
    CHECK(!bad.ok);
    CHECK(bad.suggested_shift == doctest::Approx(1e-3));

    CHECK(!rational_guard(1.5, 1.0).ok);
    CHECK(!rational_guard(2437.0 / 1209.0, 1.0).ok);

    const double f0 = std::log(2.5) / std::log(5.0 / 3.0);
    CHECK(rational_guard(f0, 1.0).ok);
}

TEST_CASE("lemma_infinity_check: distinctness and engineered collisions") {
    SUBCASE("ln 2 / ln 3 with trivial m stays distinct") {
        const int N = 5;
        std::vector<int> m(2 * N + 1, 0);
        CHECK(lemma_infinity_check(std::log(2.0), std::log(3.0), 1, m, N));
    }
    SUBCASE("a = b with m(n) = n collapses to a single value") {
        const int N = 4;
        std::vector<int> m;
        for (int n = -N; n <= N; ++n) m.push_back(n);
        CHECK(!lemma_infinity_check(std::log(2.0), std::log(2.0), 1, m, N));
    }
    SUBCASE("rational a/b with the staged integer map collides") {
        // a/b = 1/2, k = 1, m(n) = 2n makes every value 1/2.
        const int N = 3;
        std::vector<int> m;
        for (int n = -N; n <= N; ++n) m.push_back(2 * n);
        CHECK(!lemma_infinity_check(std::log(2.0), 2.0 * std::log(2.0), 1, m, N));
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(lemma_infinity_check(0.0, 1.0, 1, {0, 0, 0}, 1), validation_error);
        CHECK_THROWS_AS(lemma_infinity_check(1.0, 1.0, 0, {0, 0, 0}, 1), validation_error);
        CHECK_THROWS_AS(lemma_infinity_check(1.0, 1.0, 1, {0, 0}, 1), validation_error);
    }
}

TEST_CASE("run_monodromy: base-only ledger") {
    const LevelSetSlice slice = default_slice();
    const BranchLedger ledger = run_monodromy(slice, 0.2, 0);
    CHECK(ledger.records.empty());
    CHECK(!ledger.period);
    CHECK(ledger.distinct_count == 1);
    CHECK(ledger.base_f.real() ==
          doctest::Approx(std::log(2.5) / std::log(5.0 / 3.0)).epsilon(1e-12));
    CHECK(ledger.lambda2_start == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("run_monodromy: default five-batch experiment") {
    const LevelSetSlice slice = default_slice();
    const BranchLedger ledger = run_monodromy(slice, 0.2, 5);

    CHECK(ledger.records.size() == 5);
    CHECK(ledger.lattice_ok);
    CHECK(ledger.distinct_ok);
    // Branch growth: every batch lands on a fresh branch, so the count
    // is exactly n_batches + 1 including the base value.
    CHECK(ledger.distinct_count == 6);
    CHECK(ledger.min_separation > 1e-6);

    for (const BranchRecord& r : ledger.records) {
        // Endpoint f equals the lift ratio by construction; returned
        // records must satisfy the lattice identity.
        if (r.lambda2_returned) {
            const Complex expected = (ledger.ln_z0 + Complex(0.0, 2 * M_PI * r.winding_z)) /
                                     (ledger.ln_y0 + Complex(0.0, 2 * M_PI * r.winding_y));
            CHECK(std::abs(r.f_value - expected) <= 1e-8);
        }
    }
}

TEST_CASE("run_monodromy: rational start shifts until the guard passes") {
    // Slice through (0.25, 0.25): the symmetric start has f = 1 exactly.
    Eigen::VectorXd x(2);
    x << 0.25, 0.25;
    const LevelSetSlice slice = LevelSetSlice::through(x);
    const BranchLedger ledger = run_monodromy(slice, 0.25, 0);
    CHECK(ledger.xi1 > 0.25); // shifted away
    CHECK(std::abs(ledger.base_f.real() - 1.0) > 1e-9);
    // Shifted start still sits on the level set.
    CHECK(std::abs(slice.restricted_entropy(ledger.xi1, ledger.lambda2_start) -
                   slice.level()) <= 1e-12);
}

TEST_CASE("run_monodromy: fold-only loop has exact period-2 monodromy") {
    // A circle around the fold at ~0.168 that does not enclose the log
    // singularity at 0: the continuation swaps the two lambda2 sheets
    // and returns after two loops with no windings, so every batch
    // record is a returned one and the lattice check runs for real.
    const LevelSetSlice slice = default_slice();
    MonodromyOptions opts;
    opts.path = PathSpec::circle(Complex(0.17, 0.0), 0.03, +1, 0.0);
    opts.throw_on_inconsistency = true;

    const BranchLedger ledger = run_monodromy(slice, 0.2, 2, opts);
    REQUIRE(ledger.period.has_value());
    CHECK(*ledger.period == 2);
    REQUIRE(ledger.records.size() == 2);
    for (const BranchRecord& r : ledger.records) {
        CHECK(r.lambda2_returned);
        CHECK(r.lattice_ok);
        CHECK(r.winding_z == 0);
        CHECK(r.winding_y == 0);
        CHECK(std::abs(r.f_value - ledger.base_f) <= 1e-9);
    }
    CHECK(ledger.lattice_ok);
    // No log singularity enclosed means no branch growth: the repeated
    // f-value is expected and flagged by the distinctness verdict.
    CHECK(!ledger.distinct_ok);
    CHECK(ledger.distinct_count == 1);
}

TEST_CASE("run_monodromy: exclusion zone rejects paths near branch points") {
    const LevelSetSlice slice = default_slice();
    MonodromyOptions opts;
    opts.exclusion_radius_factor = 0.05; // the fold at ~0.168 is 0.032 from the path
    CHECK_THROWS_AS(run_monodromy(slice, 0.2, 1, opts), config_error);
}

TEST_CASE("run_monodromy: d = 4 slice with a frozen tail and a rational start") {
    // Through (0.1, 0.2, 0.3): tail (0.3), mass 0.7, and the start has
    // f0 = ln(1/4)/ln(1/2) = 2 exactly, so the guard must shift xi1.
    Eigen::VectorXd x(3);
    x << 0.1, 0.2, 0.3;
    const LevelSetSlice slice = LevelSetSlice::through(x);
    CHECK(slice.dim() == 4);
    CHECK(slice.mass() == doctest::Approx(0.7).epsilon(1e-15));

    const BranchLedger ledger = run_monodromy(slice, 0.1, 2);
    CHECK(ledger.xi1 > 0.1);
    CHECK(std::abs(ledger.base_f.real() - 2.0) > 1e-9);
    CHECK(ledger.lattice_ok);
    CHECK(ledger.distinct_ok);
    CHECK(ledger.distinct_count == 3);
}

TEST_CASE("run_monodromy: pinned path must start at xi1") {
    const LevelSetSlice slice = default_slice();
    MonodromyOptions opts;
    opts.path = PathSpec::circle(Complex(0.0, 0.0), 0.25, +1, 0.0);
    CHECK_THROWS_AS(run_monodromy(slice, 0.2, 1, opts), config_error);
}
