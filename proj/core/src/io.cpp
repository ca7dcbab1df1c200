#include "entmon/io.hpp"

#include <cstdio>

#include "entmon/errors.hpp"
#include "entmon/tracker.hpp"

namespace entmon::io {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Eigen::MatrixXd real_grid(const json& rows, int d, const char* what) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
        throw validation_error(std::string("matrix_from_json: ") + what + " must be a " +
                               std::to_string(d) + "-row array");
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw validation_error(std::string("matrix_from_json: bad row length in ") + what);
        for (int j = 0; j < d; ++j) m(i, j) = row[j].get<double>();
    }
    return m;
}

} // namespace

HermitianMatrix matrix_from_json(const json& j) {
    if (j.contains("spectrum")) {
        const json& spec = j["spectrum"];
        if (!spec.is_array() || spec.empty())
            throw validation_error("matrix_from_json: spectrum must be a non-empty array");
        Eigen::VectorXd diag(spec.size());
        for (std::size_t i = 0; i < spec.size(); ++i)
            diag(static_cast<Eigen::Index>(i)) =
                rational_to_double(parse_rational(spec[i].get<std::string>()));
        return HermitianMatrix::diagonal(diag);
    }
    if (!j.contains("dim") || !j.contains("re"))
        throw validation_error("matrix_from_json: need either spectrum or dim+re");
    const int d = j["dim"].get<int>();
    if (d < 1) throw validation_error("matrix_from_json: dim must be positive");
    const Eigen::MatrixXd re = real_grid(j["re"], d, "re");
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(d, d);
    if (j.contains("im")) im = real_grid(j["im"], d, "im");
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) m(i, k) = Complex(re(i, k), im(i, k));
    return HermitianMatrix(m);
}

DensityState density_from_json(const json& j) { return DensityState(matrix_from_json(j)); }

LevelSetSlice slice_from_json(const json& j) {
    if (j.contains("through")) {
        const json& th = j["through"];
        if (!th.is_array() || th.size() < 2)
            throw validation_error("slice_from_json: through needs at least two coordinates");
        Eigen::VectorXd x(th.size());
        for (std::size_t i = 0; i < th.size(); ++i)
            x(static_cast<Eigen::Index>(i)) = th[i].get<double>();
        return LevelSetSlice::through(x);
    }
    if (!j.contains("d") || !j.contains("c"))
        throw validation_error("slice_from_json: need either through or d+c");
    std::vector<double> tail;
    if (j.contains("tail")) tail = j["tail"].get<std::vector<double>>();
    return LevelSetSlice::at_level(j["d"].get<int>(), j["c"].get<double>(), tail);
}

json exponent_vector_json(const PrimeExponentVector& v) {
    json out = json::object();
    for (const auto& [p, e] : v.exponents()) out[std::to_string(p)] = rational_to_string(e);
    return out;
}

json classification_report(const std::vector<ExactRational>& spectrum, const LogBase& base,
                           const ClassificationResult& result) {
    json j;
    j["schema"] = kSchemaVersion;
    json spec = json::array();
    for (const ExactRational& lam : spectrum) spec.push_back(rational_to_string(lam));
    j["spectrum"] = spec;
    j["base"] = base.natural ? "e" : rational_to_string(base.value);
    j["verdict"] = verdict_name(result.verdict);
    if (result.value) j["value"] = rational_to_string(*result.value);
    j["ln_a_vector"] = exponent_vector_json(result.ln_a);
    j["ln_b_vector"] = exponent_vector_json(result.ln_b);
    j["float_entropy"] = fmt17(result.numeric_check);
    return j;
}

std::string format_complex(const Complex& z) {
    return "(" + fmt17(z.real()) + ", " + fmt17(z.imag()) + ")";
}

json ledger_report(const BranchLedger& ledger) {
    json j;
    j["schema"] = kSchemaVersion;
    j["dim"] = ledger.dim;
    j["level"] = fmt17(ledger.level);
    j["mass"] = fmt17(ledger.mass);
    j["xi1"] = fmt17(ledger.xi1);
    j["lambda2_start"] = fmt17(ledger.lambda2_start);
    j["ln_z0"] = format_complex(ledger.ln_z0);
    j["ln_y0"] = format_complex(ledger.ln_y0);
    j["base_f"] = format_complex(ledger.base_f);
    if (ledger.period)
        j["period"] = *ledger.period;
    else
        j["period"] = nullptr;
    json records = json::array();
    for (const BranchRecord& r : ledger.records) {
        json rec;
        rec["batch_index"] = r.batch_index;
        rec["f_value"] = format_complex(r.f_value);
        rec["lambda2_end"] = format_complex(r.lambda2_end);
        rec["winding_z"] = r.winding_z;
        rec["winding_y"] = r.winding_y;
        rec["winding_residual_z"] = fmt17(r.winding_residual_z);
        rec["winding_residual_y"] = fmt17(r.winding_residual_y);
        rec["lambda2_returned"] = r.lambda2_returned;
        rec["lattice_ok"] = r.lattice_ok;
        records.push_back(rec);
    }
    j["records"] = records;
    j["lattice_ok"] = ledger.lattice_ok;
    j["distinct_ok"] = ledger.distinct_ok;
    j["distinct_count"] = ledger.distinct_count;
    j["min_separation"] = fmt17(ledger.min_separation);
    return j;
}

void write_trace_csv(std::ostream& os, const std::vector<LogLiftState>& trace,
                     const LevelSetSlice& slice) {
    os << "step,re_lambda1,im_lambda1,re_lambda2,im_lambda2,re_L1,im_L1,re_L2,im_L2,"
          "re_L3,im_L3,residual\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const LogLiftState& s = trace[i];
        os << i << ',' << fmt17(s.lambda1.real()) << ',' << fmt17(s.lambda1.imag()) << ','
           << fmt17(s.lambda2.real()) << ',' << fmt17(s.lambda2.imag()) << ','
           << fmt17(s.L1.real()) << ',' << fmt17(s.L1.imag()) << ',' << fmt17(s.L2.real()) << ','
           << fmt17(s.L2.imag()) << ',' << fmt17(s.L3.real()) << ',' << fmt17(s.L3.imag()) << ','
           << fmt17(std::abs(lifted_residual(slice, s))) << '\n';
    }
}

} // namespace entmon::io
