// entmon: entropy level-set monodromy and transcendence toolkit.
//
// Subcommands: classify, monodromy, levelset, witness-d2, tangent-rank,
// chart. Reports are JSON (schema "1"); traces and level-set samples
// are CSV. Exit codes: 0 success / checks passed, 2 validation error,
// 3 numerical or tracking failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "entmon/chart.hpp"
#include "entmon/errors.hpp"
#include "entmon/io.hpp"
#include "entmon/log.hpp"
#include "entmon/spectral.hpp"
#include "entmon/tangent.hpp"

namespace {

using entmon::Complex;
using json = entmon::io::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_output(const std::string& out_path, const std::string& text) {
    const char* tail = text.ends_with('\n') ? "" : "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text << tail;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw entmon::config_error("cannot open output file " + out_path);
    os << text << tail;
}

// Matrix specs: "diag:0.2,0.3,0.5", "identity/3", "offdiag[:d]", or a
// JSON file path.
entmon::HermitianMatrix parse_matrix_spec(const std::string& spec, int default_dim = 3) {
    if (spec.rfind("diag:", 0) == 0) {
        std::vector<double> vals;
        std::stringstream ss(spec.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
        if (vals.empty()) throw entmon::validation_error("diag: needs at least one entry");
        Eigen::VectorXd d(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) d(static_cast<Eigen::Index>(i)) = vals[i];
        return entmon::HermitianMatrix::diagonal(d);
    }
    if (spec.rfind("identity/", 0) == 0) {
        const int d = std::stoi(spec.substr(9));
        if (d < 1) throw entmon::validation_error("identity/d: d must be positive");
        return entmon::HermitianMatrix(Eigen::MatrixXcd::Identity(d, d) / double(d));
    }
    if (spec.rfind("offdiag", 0) == 0) {
        int d = default_dim;
        if (spec.size() > 8 && spec[7] == ':') d = std::stoi(spec.substr(8));
        // Canonical non-commuting Hermitian test matrix.
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
        for (int i = 0; i + 1 < d; ++i) {
            m(i, i + 1) = Complex(1.0, 0.5);
            m(i + 1, i) = Complex(1.0, -0.5);
        }
        return entmon::HermitianMatrix(m);
    }
    std::ifstream is(spec);
    if (!is) throw entmon::validation_error("matrix spec/file not found: " + spec);
    return entmon::io::matrix_from_json(json::parse(is));
}

struct SliceArgs {
    std::string through;
    std::string slice_file;
    double level = 0.0;
    int dim = 3;
    std::vector<double> tail;
    bool have_level = false;

    entmon::LevelSetSlice build() const {
        if (!slice_file.empty()) {
            std::ifstream is(slice_file);
            if (!is) throw entmon::validation_error("slice file not found: " + slice_file);
            return entmon::io::slice_from_json(json::parse(is));
        }
        if (!through.empty()) {
            std::vector<double> vals;
            std::stringstream ss(through);
            std::string item;
            while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
            Eigen::VectorXd x(vals.size());
            for (std::size_t i = 0; i < vals.size(); ++i)
                x(static_cast<Eigen::Index>(i)) = vals[i];
            return entmon::LevelSetSlice::through(x);
        }
        if (have_level) return entmon::LevelSetSlice::at_level(dim, level, tail);
        throw entmon::validation_error("need --through, --slice, or --c");
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--through", through, "comma-separated interior point, e.g. 0.2,0.3");
        cmd->add_option("--slice", slice_file, "slice JSON file");
        cmd->add_option("--c", level, "entropy level")->each([this](const std::string&) {
            have_level = true;
        });
        cmd->add_option("--d", dim, "dimension (with --c)");
        cmd->add_option("--tail", tail, "frozen tail eigenvalues (with --c)");
    }
};

int run_classify(const std::string& spectrum_arg, const std::string& base_arg,
                 const std::string& out) {
    std::vector<entmon::ExactRational> spectrum;
    std::stringstream ss(spectrum_arg);
    std::string item;
    while (std::getline(ss, item, ',')) spectrum.push_back(entmon::parse_rational(item));
    if (spectrum.empty()) throw entmon::validation_error("classify: empty spectrum");
    const entmon::LogBase base = entmon::LogBase::parse(base_arg);
    const entmon::ClassificationResult result = entmon::classify(spectrum, base);
    write_output(out, entmon::io::classification_report(spectrum, base, result).dump(2));
    return kExitOk;
}

int run_monodromy(const SliceArgs& sargs, std::optional<double> xi1, int batches,
                  const std::string& trace_path, double path_radius, int steps_per_unit_arc,
                  double tol_newton, double tol_lattice, double exclusion_radius,
                  const std::string& out) {
    const entmon::LevelSetSlice slice = sargs.build();
    const double start = xi1.value_or(slice.witness_lambda1());

    entmon::MonodromyOptions opts;
    if (path_radius > 0.0 || steps_per_unit_arc > 0) {
        entmon::PathSpec p = entmon::PathSpec::circle(
            Complex(0.0, 0.0), path_radius > 0.0 ? path_radius : start, +1, 0.0);
        if (steps_per_unit_arc > 0) p.steps_per_unit_arc = steps_per_unit_arc;
        opts.path = p;
    }
    if (tol_newton > 0.0) opts.track.newton_tol = tol_newton;
    if (tol_lattice > 0.0) opts.lattice_tol = tol_lattice;
    if (exclusion_radius > 0.0) opts.exclusion_radius_factor = exclusion_radius / slice.mass();
    opts.collect_trace = !trace_path.empty();
    opts.throw_on_inconsistency = false; // verdicts decide the exit code

    const entmon::BranchLedger ledger = entmon::run_monodromy(slice, start, batches, opts);
    if (!trace_path.empty()) {
        std::ofstream os(trace_path);
        if (!os) throw entmon::config_error("cannot open trace file " + trace_path);
        entmon::io::write_trace_csv(os, ledger.trace, slice);
    }
    write_output(out, entmon::io::ledger_report(ledger).dump(2));
    return (ledger.lattice_ok && ledger.distinct_ok) ? kExitOk : kExitNumerical;
}

int run_levelset(const SliceArgs& sargs, double range_lo, double range_hi, int samples,
                 const std::string& out) {
    const entmon::LevelSetSlice slice = sargs.build();
    if (samples < 2) throw entmon::validation_error("levelset: need at least 2 samples");
    if (!(range_lo > 0.0 && range_hi > range_lo))
        throw entmon::validation_error("levelset: bad --range");

    std::ostringstream os;
    os << "lambda1,lambda2,grad_F1,grad_F2,lambda2_prime,lambda2_second,gauss_ratio,residual\n";
    double seed = slice.witness_lambda2();
    // March from the witness toward the range start, then across it.
    double l1 = slice.witness_lambda1();
    auto advance = [&](double target) {
        const int n = std::max(1, static_cast<int>(std::ceil(std::abs(target - l1) / 0.002)));
        for (int i = 1; i <= n; ++i) {
            const double t = l1 + (target - l1) * i / n;
            seed = entmon::solve_lambda2(t, slice, seed);
        }
        l1 = target;
    };
    advance(range_lo);
    for (int i = 0; i < samples; ++i) {
        const double t = range_lo + (range_hi - range_lo) * i / (samples - 1);
        advance(t);
        const entmon::SliceDerivatives der =
            entmon::lambda2_derivatives({t, seed}, slice);
        Eigen::VectorXd x(2);
        x << t, seed;
        const double u = slice.mass() - t - seed;
        os << fmt17(t) << ',' << fmt17(seed) << ',' << fmt17(std::log(u) - std::log(t)) << ','
           << fmt17(std::log(u) - std::log(seed)) << ',' << fmt17(der.lambda2_prime) << ','
           << fmt17(der.lambda2_second) << ',' << fmt17(entmon::gauss_ratio(x)) << ','
           << fmt17(std::abs(slice.restricted_entropy(t, seed) - slice.level())) << '\n';
    }
    write_output(out, os.str());
    return kExitOk;
}

int run_witness_d2(double c, int samples, std::uint64_t seed, const std::string& out) {
    const double dev = entmon::d2_witness(c, samples, seed);
    const double lam = entmon::qubit_eigenvalue_for_entropy(c);
    json j;
    j["schema"] = entmon::io::kSchemaVersion;
    j["c"] = fmt17(c);
    j["samples"] = samples;
    j["seed"] = seed;
    j["lambda"] = fmt17(lam);
    j["purity"] = fmt17(lam * lam + (1.0 - lam) * (1.0 - lam));
    j["max_deviation"] = fmt17(dev);
    j["pass"] = dev <= 1e-10;
    write_output(out, j.dump(2));
    return dev <= 1e-10 ? kExitOk : kExitNumerical;
}

int run_tangent_rank(const std::string& rho_spec, const std::string& sigma_spec,
                     const std::string& gradh_spec, const std::string& perturb,
                     const std::string& out) {
    entmon::DensityState rho{parse_matrix_spec(rho_spec)};
    if (perturb == "offdiag") {
        // Small fixed off-diagonal coupling, then renormalize.
        Eigen::MatrixXcd m = rho.matrix().entries();
        const int d = rho.dim();
        for (int i = 0; i + 1 < d; ++i) {
            m(i, i + 1) += Complex(0.02, 0.01);
            m(i + 1, i) += Complex(0.02, -0.01);
        }
        rho = entmon::DensityState(entmon::HermitianMatrix(m));
    } else if (!perturb.empty() && perturb != "none") {
        throw entmon::validation_error("--perturb must be offdiag or none");
    }

    json j;
    j["schema"] = entmon::io::kSchemaVersion;
    int rank = 0;
    double commutator_norm = 0.0;
    if (!sigma_spec.empty()) {
        const entmon::DensityState sigma{parse_matrix_spec(sigma_spec)};
        const entmon::RelativeEntropyConstraint rc = entmon::relent_constraint(sigma, rho);
        commutator_norm = rc.commutator_norm;
        rank = entmon::constraint_tangent_rank(rho, rc.grad_h);
        j["mode"] = "relative-entropy";
    } else if (!gradh_spec.empty()) {
        const entmon::HermitianMatrix grad_h = parse_matrix_spec(gradh_spec, rho.dim());
        const Eigen::MatrixXcd comm = rho.matrix().entries() * grad_h.entries() -
                                      grad_h.entries() * rho.matrix().entries();
        commutator_norm = comm.norm();
        rank = entmon::constraint_tangent_rank(rho, grad_h);
        j["mode"] = "explicit-gradient";
    } else {
        throw entmon::validation_error("tangent-rank: need --sigma or --gradh");
    }
    j["dim"] = rho.dim();
    j["commutator_norm"] = fmt17(commutator_norm);
    j["rank"] = rank;
    write_output(out, j.dump(2));
    return kExitOk;
}

int run_chart(const std::string& rho_spec, const std::string& out) {
    const entmon::DensityState rho{parse_matrix_spec(rho_spec)};
    const entmon::ChartReport report = entmon::build_chart(rho);
    json j;
    j["schema"] = entmon::io::kSchemaVersion;
    j["dim"] = rho.dim();
    j["selected_rows"] = report.selected_rows;
    j["jacobian_condition"] = fmt17(report.jacobian_condition);
    j["full_rank"] = report.full_rank;
    j["eigenvalue_block_rank"] = report.eigenvalue_block_rank;
    write_output(out, j.dump(2));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy level-set monodromy and transcendence toolkit"};
    app.require_subcommand(1);

    std::string out;
    std::uint64_t seed = 0;
    double tol_newton = 0.0, tol_lattice = 0.0, exclusion_radius = 0.0;
    app.add_option("--out", out, "output file (default stdout)");
    app.add_option("--seed", seed, "seed for randomized subcommands");
    app.add_option("--tol-newton", tol_newton, "Newton corrector tolerance override")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol-lattice", tol_lattice, "lattice identity tolerance override")
        ->check(CLI::PositiveNumber);
    app.add_option("--exclusion-radius", exclusion_radius,
                   "absolute branch-point exclusion radius override")
        ->check(CLI::PositiveNumber);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "entropy trichotomy for rational spectra");
    std::string spectrum_arg, base_arg = "e";
    classify_cmd->add_option("--spectrum", spectrum_arg, "comma-separated exact rationals")
        ->required();
    classify_cmd->add_option("--base", base_arg, "logarithm base: e or a rational > 1");

    // monodromy
    auto* mono_cmd = app.add_subcommand("monodromy", "branch-lattice continuation experiment");
    SliceArgs mono_slice;
    mono_slice.attach(mono_cmd);
    double xi1_val = 0.0;
    bool have_xi1 = false;
    mono_cmd->add_option("--xi1", xi1_val, "start lambda1 (default: slice witness)")
        ->each([&](const std::string&) { have_xi1 = true; });
    int batches = 0;
    mono_cmd->add_option("--batches", batches, "number of continuation batches")->required();
    std::string trace_path;
    mono_cmd->add_option("--trace", trace_path, "write the full trace CSV here");
    double path_radius = 0.0;
    mono_cmd->add_option("--path-radius", path_radius, "origin-centered circle radius override");
    int steps_arc = 0;
    mono_cmd->add_option("--steps-per-unit-arc", steps_arc, "path discretization density");

    // levelset
    auto* level_cmd = app.add_subcommand("levelset", "sample the real level set to CSV");
    SliceArgs level_slice;
    level_slice.attach(level_cmd);
    std::pair<double, double> range{0.0, 0.0};
    level_cmd->add_option("--range", range, "lambda1 range lo hi")->required();
    int level_samples = 100;
    level_cmd->add_option("--samples", level_samples, "number of sample points");

    // witness-d2
    auto* witness_cmd = app.add_subcommand("witness-d2", "qubit purity witness");
    double witness_c = 0.5;
    int witness_samples = 200;
    witness_cmd->add_option("--c", witness_c, "entropy level in (0, ln 2]")->required();
    witness_cmd->add_option("--samples", witness_samples, "number of random states");

    // tangent-rank
    auto* tangent_cmd = app.add_subcommand("tangent-rank", "constrained tangent-space rank");
    std::string rho_spec, sigma_spec, gradh_spec, perturb;
    tangent_cmd->add_option("--rho", rho_spec, "state spec")->required();
    tangent_cmd->add_option("--sigma", sigma_spec, "sigma spec (relative-entropy constraint)");
    tangent_cmd->add_option("--gradh", gradh_spec, "explicit constraint gradient spec");
    tangent_cmd->add_option("--perturb", perturb, "offdiag|none: perturb rho before the test");

    // chart
    auto* chart_cmd = app.add_subcommand("chart", "diagonalizing chart construction");
    std::string chart_rho;
    chart_cmd->add_option("--rho", chart_rho, "state spec")->required();

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the parse message
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(spectrum_arg, base_arg, out);
        if (mono_cmd->parsed())
            return run_monodromy(mono_slice,
                                 have_xi1 ? std::optional<double>(xi1_val) : std::nullopt,
                                 batches, trace_path, path_radius, steps_arc, tol_newton,
                                 tol_lattice, exclusion_radius, out);
        if (level_cmd->parsed())
            return run_levelset(level_slice, range.first, range.second, level_samples, out);
        if (witness_cmd->parsed()) return run_witness_d2(witness_c, witness_samples, seed, out);
        if (tangent_cmd->parsed())
            return run_tangent_rank(rho_spec, sigma_spec, gradh_spec, perturb, out);
        if (chart_cmd->parsed()) return run_chart(chart_rho, out);
    } catch (const entmon::validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const entmon::unsupported_error& e) {
        std::cerr << "unsupported input: " << e.what() << '\n';
        return kExitValidation;
    } catch (const entmon::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const entmon::config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const entmon::tracking_error& e) {
        std::cerr << "tracking error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const entmon::consistency_error& e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}
