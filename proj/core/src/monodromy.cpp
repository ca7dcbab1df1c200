#include "entmon/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entmon/errors.hpp"
#include "entmon/log.hpp"

namespace entmon {

namespace {

// g(l1) = F_slice(l1, (w-l1)/2) - c with principal-branch logs.
Complex fold_residual(const LevelSetSlice& slice, Complex l1) {
    const Complex half = 0.5 * (slice.mass() - l1);
    return -l1 * std::log(l1) - 2.0 * (half * std::log(half)) + slice.tail_entropy() -
           slice.level();
}

Complex fold_residual_derivative(const LevelSetSlice& slice, Complex l1) {
    const Complex half = 0.5 * (slice.mass() - l1);
    return std::log(half) - std::log(l1);
}

} // namespace

std::vector<Complex> find_branch_points(const LevelSetSlice& slice) {
    const double w = slice.mass();
    std::vector<Complex> roots;
    auto add_unique = [&](Complex z) {
        for (const Complex& r : roots)
            if (std::abs(r - z) < 1e-8) return;
        roots.push_back(z);
    };

    const int grid = 24;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            Complex z(-2.0 * w + 4.0 * w * (i + 0.5) / grid,
                      -2.0 * w + 4.0 * w * (j + 0.5) / grid);
            bool converged = false;
            for (int it = 0; it < 80; ++it) {
                if (std::abs(z) < 1e-14 || std::abs(z - w) < 1e-14) break;
                const Complex dg = fold_residual_derivative(slice, z);
                if (std::abs(dg) < 1e-14) break;
                const Complex step = fold_residual(slice, z) / dg;
                z -= step;
                if (std::abs(step) < 1e-13) {
                    converged = true;
                    break;
                }
            }
            if (converged && std::abs(fold_residual(slice, z)) <= 1e-10) add_unique(z);
        }
    }
    // Log singularities of the slice equation itself.
    add_unique(Complex(0.0, 0.0));
    add_unique(Complex(w, 0.0));
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

RationalGuardResult rational_guard(double f0, double mass_scale) {
    RationalGuardResult out;
    out.suggested_shift = 1e-3 * mass_scale;

    // Continued-fraction convergents p/q with q <= 1e4.
    const long long qmax = 10000;
    double x = std::abs(f0);
    long long p_prev = 1, q_prev = 0;
    long long p_cur = static_cast<long long>(std::floor(x));
    long long q_cur = 1;
    double best = std::abs(x - static_cast<double>(p_cur));
    double frac = x - std::floor(x);
    for (int it = 0; it < 64 && frac > 1e-18; ++it) {
        const double inv = 1.0 / frac;
        const double a_floor = std::floor(inv);
        if (a_floor > 4e18) break;
        const long long a = static_cast<long long>(a_floor);
        frac = inv - a_floor;
        const long long p_next = a * p_cur + p_prev;
        const long long q_next = a * q_cur + q_prev;
        if (q_next > qmax || q_next <= 0) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        best = std::min(best, std::abs(x - static_cast<double>(p_cur) / q_cur));
    }
    out.ok = best > 1e-9;
    return out;
}

bool lemma_infinity_check(double a, double b, int k, const std::vector<int>& m, int N) {
    if (a == 0.0 || b == 0.0)
        throw validation_error("lemma_infinity_check: a and b must be nonzero");
    if (k <= 0) throw validation_error("lemma_infinity_check: k must be positive");
    if (static_cast<int>(m.size()) != 2 * N + 1)
        throw validation_error("lemma_infinity_check: m must list 2N+1 values");
    std::vector<Complex> values;
    values.reserve(m.size());
    for (int n = -N; n <= N; ++n) {
        const Complex num(a, 2.0 * M_PI * k * n);
        const Complex den(b, 2.0 * M_PI * m[static_cast<std::size_t>(n + N)]);
        values.push_back(num / den);
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const double scale = std::max({std::abs(values[i]), std::abs(values[j]), 1e-300});
            if (std::abs(values[i] - values[j]) <= 1e-12 * scale) return false;
        }
    return true;
}

BranchLedger run_monodromy(const LevelSetSlice& slice, double xi1, int n_batches,
                           const MonodromyOptions& opts) {
    if (n_batches < 0) throw validation_error("run_monodromy: n_batches must be >= 0");
    const double w = slice.mass();
    const double exclusion = opts.exclusion_radius_factor * w;

    // Start point: lower-branch lambda2 at xi1, guarded against rational
    // Gauss ratios; the default path is re-derived when xi1 shifts.
    double start_l1 = xi1;
    double start_l2 = 0.0;
    RationalGuardResult guard;
    int attempt = 0;
    for (;; ++attempt) {
        if (attempt > opts.guard_attempts)
            throw config_error("run_monodromy: no start with irrational Gauss ratio found "
                               "within the shift budget");
        const double mid = 0.5 * (w - start_l1);
        start_l2 = solve_lambda2(start_l1, slice, 0.5 * mid); // seed below the fold
        // Gauss ratio of the full (d-1)-coordinate point; the frozen
        // tail shifts the remaining mass, so the bare pair would lie.
        Eigen::VectorXd x(slice.dim() - 1);
        x(0) = start_l1;
        x(1) = start_l2;
        for (std::size_t t = 0; t < slice.tail().size(); ++t)
            x(static_cast<Eigen::Index>(t) + 2) = slice.tail()[t];
        guard = rational_guard(gauss_ratio(x), w);
        if (guard.ok) break;
        if (opts.path)
            throw config_error("run_monodromy: start value fails the rational guard and the "
                               "path was pinned externally; shift xi1 and rebuild the path");
        log::info("run_monodromy: rational guard rejected xi1 = " + std::to_string(start_l1) +
                  ", shifting by " + std::to_string(guard.suggested_shift));
        start_l1 += guard.suggested_shift;
    }

    const PathSpec path =
        opts.path ? *opts.path : PathSpec::circle(Complex(0.0, 0.0), start_l1, +1, 0.0);
    if (!path.is_closed()) throw config_error("run_monodromy: path must be closed");
    if (std::abs(path.start() - Complex(start_l1)) > 1e-12)
        throw config_error("run_monodromy: path must start at xi1");

    const std::vector<Complex> branch_points = find_branch_points(slice);
    for (const Complex& bp : branch_points) {
        const double dist = path.distance_to(bp);
        if (dist <= exclusion)
            throw config_error("run_monodromy: path passes within the exclusion radius of a "
                               "branch/singular point at (" +
                               std::to_string(bp.real()) + ", " + std::to_string(bp.imag()) +
                               "), distance " + std::to_string(dist));
    }

    BranchLedger ledger;
    ledger.dim = slice.dim();
    ledger.level = slice.level();
    ledger.mass = w;
    ledger.xi1 = start_l1;
    ledger.lambda2_start = start_l2;

    const LogLiftState base = initial_lift(slice, start_l1, start_l2);
    ledger.ln_z0 = base.log_z();
    ledger.ln_y0 = base.log_y();
    ledger.base_f = base.f();

    TrackOptions topts = opts.track;
    topts.record_trace = opts.collect_trace;
    if (opts.collect_trace) ledger.trace.push_back(base);

    std::vector<LogLiftState> loop_ends;
    LogLiftState cur = base;
    auto run_one_loop = [&]() {
        TrackResult r = track(path, cur, slice, topts);
        cur = r.end;
        loop_ends.push_back(cur);
        if (opts.collect_trace)
            ledger.trace.insert(ledger.trace.end(), r.trace.begin() + 1, r.trace.end());
    };

    if (n_batches > 0) {
        // (a) period of lambda2 along the path, up to k_max loops.
        for (int j = 1; j <= opts.k_max && !ledger.period; ++j) {
            run_one_loop();
            if (std::abs(cur.lambda2 - base.lambda2) < opts.return_tol) ledger.period = j;
        }
        const int loops_per_batch = ledger.period.value_or(1);

        // (b) continue until n_batches batches are available.
        while (static_cast<int>(loop_ends.size()) < n_batches * loops_per_batch) run_one_loop();

        for (int n = 1; n <= n_batches; ++n) {
            const LogLiftState& s = loop_ends[static_cast<std::size_t>(n * loops_per_batch) - 1];
            BranchRecord rec;
            rec.batch_index = n;
            rec.f_value = s.f();
            rec.lambda2_end = s.lambda2;
            const WindingMeasurement wm = measure_windings(base, s);
            rec.winding_z = wm.k_z;
            rec.winding_y = wm.k_y;
            rec.winding_residual_z = wm.residual_z;
            rec.winding_residual_y = wm.residual_y;
            rec.lambda2_returned = std::abs(s.lambda2 - base.lambda2) < opts.return_tol;

            // (c) the branch-lattice identity for returned records.
            if (rec.lambda2_returned) {
                const Complex expected =
                    (ledger.ln_z0 + Complex(0.0, 2.0 * M_PI * rec.winding_z)) /
                    (ledger.ln_y0 + Complex(0.0, 2.0 * M_PI * rec.winding_y));
                rec.lattice_ok = std::abs(rec.f_value - expected) <= opts.lattice_tol &&
                                 wm.residual_z < 0.01 && wm.residual_y < 0.01;
                if (!rec.lattice_ok) ledger.lattice_ok = false;
            }
            ledger.records.push_back(rec);
        }
    }

    // (d) pairwise distinctness over base value and all records.
    std::vector<Complex> fvals{ledger.base_f};
    for (const BranchRecord& r : ledger.records) fvals.push_back(r.f_value);
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < fvals.size(); ++i)
        for (std::size_t j = i + 1; j < fvals.size(); ++j)
            min_sep = std::min(min_sep, std::abs(fvals[i] - fvals[j]));
    ledger.min_separation = std::isfinite(min_sep) ? min_sep : 0.0;
    ledger.distinct_ok = fvals.size() < 2 || min_sep > opts.distinct_tol;
    int distinct = 0;
    for (std::size_t i = 0; i < fvals.size(); ++i) {
        bool fresh = true;
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(fvals[i] - fvals[j]) <= opts.distinct_tol) fresh = false;
        if (fresh) ++distinct;
    }
    ledger.distinct_count = distinct;

    if (!ledger.lattice_ok && opts.throw_on_inconsistency)
        throw consistency_error("run_monodromy: a returned batch violates the branch-lattice "
                                "identity; the continuation is inconsistent");
    return ledger;
}

} // namespace entmon
