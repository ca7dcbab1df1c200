#ifndef ENTMON_MONODROMY_HPP
#define ENTMON_MONODROMY_HPP

#include <optional>
#include <vector>

#include "entmon/tracker.hpp"

namespace entmon {

/// Branch and singular points of the continuation in the lambda_1
/// plane: roots of F_slice(l1, (w-l1)/2) = c found by Newton from a
/// grid of starts over [-2w, 2w]^2 (principal logs), deduplicated at
/// 1e-8, plus the log singularities 0 and w. Best effort; returned
/// points satisfy |g| <= 1e-10.
std::vector<Complex> find_branch_points(const LevelSetSlice& slice);

struct RationalGuardResult {
    bool ok = false;
    double suggested_shift = 0.0; // additive lambda_1 shift when !ok
};

/// Rejects start values whose Gauss ratio is within 1e-9 of a rational
/// with denominator <= 1e4 (continued-fraction convergents); such
/// starts defeat the distinctness argument. The suggested shift is
/// 1e-3 * mass_scale.
RationalGuardResult rational_guard(double f0, double mass_scale = 1.0);

/// Evaluates (a + 2 pi i k n) / (b + 2 pi i m[n]) for n = -N..N, where
/// m is indexed as m[n + N], and reports whether all 2N+1 values are
/// pairwise distinct (relative separation > 1e-12).
bool lemma_infinity_check(double a, double b, int k, const std::vector<int>& m, int N);

/// One continuation batch: the state after batch_index * k loops.
struct BranchRecord {
    int batch_index = 0;
    Complex f_value;     // (L1-L3)/(L2-L3) at the batch endpoint
    Complex lambda2_end;
    int winding_z = 0, winding_y = 0; // accumulated from the base state
    double winding_residual_z = 0.0, winding_residual_y = 0.0;
    bool lambda2_returned = false;
    bool lattice_ok = true; // meaningful only when lambda2_returned
};

struct BranchLedger {
    int dim = 0;
    double level = 0.0;
    double mass = 0.0;
    double xi1 = 0.0;
    double lambda2_start = 0.0;
    Complex ln_z0, ln_y0;
    Complex base_f;
    std::optional<int> period; // loops until lambda2 first returned
    std::vector<BranchRecord> records;

    // Verification verdicts over the whole run.
    bool lattice_ok = true;
    bool distinct_ok = true;
    int distinct_count = 0;
    double min_separation = 0.0; // over all recorded f-values incl. base

    std::vector<LogLiftState> trace; // filled only when requested
};

struct MonodromyOptions {
    std::optional<PathSpec> path;   // default: origin-centered circle through xi1
    int k_max = 12;                 // period-search loop cap
    double return_tol = 1e-8;       // |lambda2 - lambda2(start)| for "returned"
    double lattice_tol = 1e-8;
    double distinct_tol = 1e-6;
    double exclusion_radius_factor = 1e-3; // times mass w
    int guard_attempts = 20;
    bool throw_on_inconsistency = true; // lattice failure -> consistency_error
    bool collect_trace = false;
    TrackOptions track;
};

/// Runs the full monodromy experiment: guards the start value, checks
/// path clearance against the branch points, measures the return
/// period of lambda2 (up to k_max loops), then records n_batches
/// batches of k loops each (single loops when no period was found),
/// verifying the branch-lattice identity for every returned record and
/// the pairwise distinctness of all recorded f-values.
BranchLedger run_monodromy(const LevelSetSlice& slice, double xi1, int n_batches,
                           const MonodromyOptions& opts = {});

} // namespace entmon

#endif
