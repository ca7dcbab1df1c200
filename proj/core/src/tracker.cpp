#include "entmon/tracker.hpp"

#include <cmath>
#include <string>

#include "entmon/errors.hpp"

namespace entmon {

namespace {

// Principal log shifted to the branch recorded in `lift`: the result R
// satisfies exp(R) = arg exactly while |Im(R) - Im(lift)| < pi.
Complex snap_lift(Complex lift, Complex arg) {
    const Complex p = std::log(arg);
    const double k = std::round((lift.imag() - p.imag()) / (2.0 * M_PI));
    return p + Complex(0.0, 2.0 * M_PI * k);
}

struct StepOutcome {
    bool ok = false;
    LogLiftState state;
};

// One predictor-corrector step to lambda1 = target. Fails (ok=false)
// when any multiplicative update would leave the ratio bound, so the
// caller can halve the step.
StepOutcome attempt_step(const LevelSetSlice& slice, const LogLiftState& s, Complex target,
                         const TrackOptions& opts) {
    StepOutcome out;
    const double w = slice.mass();
    const Complex u = w - s.lambda1 - s.lambda2;

    const Complex slope = -(s.L3 - s.L1) / (s.L3 - s.L2);
    const Complex l2_pred = s.lambda2 + slope * (target - s.lambda1);
    const Complex u_pred = w - target - l2_pred;

    const Complex r1 = target / s.lambda1;
    const Complex r2 = l2_pred / s.lambda2;
    const Complex r3 = u_pred / u;
    if (std::abs(r1 - 1.0) > opts.ratio_bound || std::abs(r2 - 1.0) > opts.ratio_bound ||
        std::abs(r3 - 1.0) > opts.ratio_bound)
        return out;

    LogLiftState n{target, l2_pred, s.L1 + std::log(r1), s.L2 + std::log(r2),
                   s.L3 + std::log(r3)};

    for (int it = 0; it < opts.max_newton_iters; ++it) {
        const Complex res = lifted_residual(slice, n);
        if (std::abs(res) <= opts.newton_tol) {
            // Re-anchor the lifts so exp(L_j) matches exactly, then make
            // sure the residual still clears the tolerance.
            n.L1 = snap_lift(n.L1, n.lambda1);
            n.L2 = snap_lift(n.L2, n.lambda2);
            n.L3 = snap_lift(n.L3, w - n.lambda1 - n.lambda2);
            for (int polish = 0; polish < 6; ++polish) {
                const Complex r = lifted_residual(slice, n);
                if (std::abs(r) <= opts.newton_tol) break;
                const Complex delta = -r / (n.L3 - n.L2);
                const Complex ratio2 = (n.lambda2 + delta) / n.lambda2;
                const Complex uc = w - n.lambda1 - n.lambda2;
                const Complex ratio3 = (uc - delta) / uc;
                if (std::abs(ratio2 - 1.0) > opts.ratio_bound ||
                    std::abs(ratio3 - 1.0) > opts.ratio_bound)
                    return out;
                n.lambda2 += delta;
                n.L2 += std::log(ratio2);
                n.L3 += std::log(ratio3);
            }
            if (std::abs(lifted_residual(slice, n)) > opts.newton_tol) return out;
            out.ok = true;
            out.state = n;
            return out;
        }
        const Complex denom = n.L3 - n.L2;
        if (std::abs(denom) < 1e-14) return out; // fold: corrector has no slope
        const Complex delta = -res / denom;
        const Complex ratio2 = (n.lambda2 + delta) / n.lambda2;
        const Complex uc = w - n.lambda1 - n.lambda2;
        const Complex ratio3 = (uc - delta) / uc;
        if (std::abs(ratio2 - 1.0) > opts.ratio_bound || std::abs(ratio3 - 1.0) > opts.ratio_bound)
            return out;
        n.lambda2 += delta;
        n.L2 += std::log(ratio2);
        n.L3 += std::log(ratio3);
    }
    return out;
}

} // namespace

LogLiftState initial_lift(const LevelSetSlice& slice, double lambda1, double lambda2) {
    const double u = slice.mass() - lambda1 - lambda2;
    if (!(lambda1 > 0.0 && lambda2 > 0.0 && u > 0.0))
        throw domain_error("initial_lift: point outside the open slice domain");
    LogLiftState s{Complex(lambda1), Complex(lambda2), Complex(std::log(lambda1)),
                   Complex(std::log(lambda2)), Complex(std::log(u))};
    if (std::abs(lifted_residual(slice, s)) > 1e-11)
        throw validation_error("initial_lift: start point is not on the level set");
    return s;
}

Complex lifted_residual(const LevelSetSlice& slice, const LogLiftState& s) {
    const Complex u = slice.mass() - s.lambda1 - s.lambda2;
    return -u * s.L3 - s.lambda1 * s.L1 - s.lambda2 * s.L2 + slice.tail_entropy() -
           slice.level();
}

TrackResult track(const PathSpec& path, const LogLiftState& start, const LevelSetSlice& slice,
                  const TrackOptions& opts) {
    return track_loops(path, start, slice, 1, opts);
}

TrackResult track_loops(const PathSpec& path, const LogLiftState& start,
                        const LevelSetSlice& slice, int loops, const TrackOptions& opts) {
    if (std::abs(path.start() - start.lambda1) > 1e-12)
        throw config_error("track: path must start at the state's lambda1");
    const double min_step = opts.min_step_fraction * std::max(path.length(), 1e-300);

    TrackResult result;
    LogLiftState cur = start;
    if (opts.record_trace) result.trace.push_back(cur);

    for (const Complex& target : path.waypoints(loops)) {
        // Adaptive halving toward each waypoint.
        std::vector<Complex> stack{target};
        while (!stack.empty()) {
            const Complex t = stack.back();
            StepOutcome step = attempt_step(slice, cur, t, opts);
            if (!step.ok) {
                if (std::abs(t - cur.lambda1) < min_step)
                    throw tracking_error("track: step underflow near lambda1 = (" +
                                         std::to_string(cur.lambda1.real()) + ", " +
                                         std::to_string(cur.lambda1.imag()) + ")");
                stack.push_back(0.5 * (cur.lambda1 + t));
                continue;
            }
            stack.pop_back();
            cur = step.state;
            result.max_residual =
                std::max(result.max_residual, std::abs(lifted_residual(slice, cur)));
            ++result.accepted_steps;
            if (opts.record_trace) result.trace.push_back(cur);
        }
    }
    result.end = cur;
    return result;
}

WindingMeasurement measure_windings(const LogLiftState& start, const LogLiftState& end) {
    WindingMeasurement m;
    const double dz = (end.log_z() - start.log_z()).imag() / (2.0 * M_PI);
    const double dy = (end.log_y() - start.log_y()).imag() / (2.0 * M_PI);
    m.k_z = static_cast<int>(std::llround(dz));
    m.k_y = static_cast<int>(std::llround(dy));
    m.residual_z = std::abs(dz - m.k_z);
    m.residual_y = std::abs(dy - m.k_y);
    return m;
}

std::pair<int, int> windings(const std::vector<LogLiftState>& trace) {
    if (trace.size() < 2) throw validation_error("windings: trace needs at least two states");
    if (std::abs(trace.back().lambda1 - trace.front().lambda1) > 1e-12)
        throw validation_error("windings: trace is not a closed path in lambda1");
    const WindingMeasurement m = measure_windings(trace.front(), trace.back());
    if (m.residual_z >= 0.01 || m.residual_y >= 0.01)
        throw consistency_error(
            "windings: lift increments are not near integer multiples of 2 pi (z residual " +
            std::to_string(m.residual_z) + ", y residual " + std::to_string(m.residual_y) +
            "); the image curves do not close");
    return {m.k_z, m.k_y};
}

} // namespace entmon
