#ifndef ENTMON_IO_HPP
#define ENTMON_IO_HPP

#include <json.hpp>
#include <ostream>
#include <string>

#include "entmon/classifier.hpp"
#include "entmon/hermitian.hpp"
#include "entmon/levelset.hpp"
#include "entmon/monodromy.hpp"

namespace entmon::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Hermitian matrix from {"dim": d, "re": [[..]], "im": [[..]]} (im
/// optional) or {"spectrum": ["1/2", "1/4", ...]} with exact-rational
/// strings, which yields the diagonal matrix of those values.
HermitianMatrix matrix_from_json(const json& j);
DensityState density_from_json(const json& j);

/// Slice from {"d": 3, "c": 1.03, "tail": [...]} or {"through": [0.2,
/// 0.3, ...]}; "through" wins when both are present.
LevelSetSlice slice_from_json(const json& j);

json classification_report(const std::vector<ExactRational>& spectrum, const LogBase& base,
                           const ClassificationResult& result);

json ledger_report(const BranchLedger& ledger);

/// Trace CSV: step, re/im of lambda1, lambda2, L1, L2, L3, residual.
void write_trace_csv(std::ostream& os, const std::vector<LogLiftState>& trace,
                     const LevelSetSlice& slice);

json exponent_vector_json(const PrimeExponentVector& v);

std::string format_complex(const Complex& z);

} // namespace entmon::io

#endif
