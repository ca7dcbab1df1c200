#ifndef ENTMON_TRACKER_HPP
#define ENTMON_TRACKER_HPP

#include <complex>
#include <vector>

#include "entmon/levelset.hpp"
#include "entmon/path.hpp"

namespace entmon {

/// Continuation state: the slice point together with analytic lifts of
/// ln lambda1, ln lambda2 and ln(w - lambda1 - lambda2). The imaginary
/// parts of the lifts carry the branch bookkeeping; exp(L_j) always
/// reproduces the corresponding argument.
struct LogLiftState {
    Complex lambda1, lambda2;
    Complex L1, L2, L3;

    Complex log_z() const { return L1 - L3; } // lift of ln(lambda1 / u)
    Complex log_y() const { return L2 - L3; } // lift of ln(lambda2 / u)
    Complex f() const { return log_z() / log_y(); }
};

/// Lift at a real on-slice point, all logs principal (real).
LogLiftState initial_lift(const LevelSetSlice& slice, double lambda1, double lambda2);

/// Residual of the lifted level-set equation
///   -u L3 - lambda1 L1 - lambda2 L2 + tail_entropy - c,  u = w - l1 - l2.
Complex lifted_residual(const LevelSetSlice& slice, const LogLiftState& s);

struct TrackOptions {
    double newton_tol = 1e-12;
    double ratio_bound = 0.5;        // per-step |arg_new/arg_old - 1| limit
    double min_step_fraction = 1e-9; // of total path length; below aborts
    int max_newton_iters = 40;
    bool record_trace = true;
};

struct TrackResult {
    LogLiftState end;
    std::vector<LogLiftState> trace; // includes the start state
    double max_residual = 0.0;       // over accepted states
    long accepted_steps = 0;
};

/// Predictor-corrector continuation of the lifted level-set equation
/// along `path` (which must start at start.lambda1). Euler predictor
/// with slope -(L3-L1)/(L3-L2), Newton corrector with derivative
/// L3-L2; every multiplicative lift update stays within ratio_bound of
/// 1, enforced by adaptive step halving.
TrackResult track(const PathSpec& path, const LogLiftState& start, const LevelSetSlice& slice,
                  const TrackOptions& opts = {});

/// As above but over `loops` traversals of a closed path.
TrackResult track_loops(const PathSpec& path, const LogLiftState& start,
                        const LevelSetSlice& slice, int loops, const TrackOptions& opts = {});

struct WindingMeasurement {
    int k_z = 0, k_y = 0;
    double residual_z = 0.0, residual_y = 0.0; // distance of Im-shift/2pi to k
};

/// Raw winding measurement between two states of one continuation.
WindingMeasurement measure_windings(const LogLiftState& start, const LogLiftState& end);

/// Winding numbers of z and y around the origin over a closed-path
/// trace. Throws consistency_error when a rounding residual reaches
/// 0.01 (the lifts then do not describe closed image curves).
std::pair<int, int> windings(const std::vector<LogLiftState>& trace);

} // namespace entmon

#endif
