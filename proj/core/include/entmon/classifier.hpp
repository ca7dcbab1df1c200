#ifndef ENTMON_CLASSIFIER_HPP
#define ENTMON_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "entmon/primelog.hpp"
#include "entmon/rational.hpp"

namespace entmon {

enum class Verdict { Zero, Rational, Transcendental };

const char* verdict_name(Verdict v);

/// Logarithm base for the classifier: the natural base or an exact
/// rational > 1.
struct LogBase {
    bool natural = true;
    ExactRational value; // meaningful when !natural

    static LogBase e() { return LogBase{}; }
    static LogBase rational(ExactRational b);
    /// "e" or an exact rational literal such as "2" or "10/3".
    static LogBase parse(std::string_view text);
};

struct ClassificationResult {
    Verdict verdict = Verdict::Zero;
    std::optional<ExactRational> value; // set for Rational verdicts
    double numeric_check = 0.0;         // floating entropy in the base
    PrimeExponentVector ln_a;           // prime-log expansion of ln a
    PrimeExponentVector ln_b;           // prime-log expansion of ln b (empty for base e)
};

/// Entropy trichotomy for exact rational spectra.
///
/// Base e: the entropy equals ln a with a = prod lambda_i^{-lambda_i},
/// a nonzero rational combination of prime logarithms unless it is
/// empty; it is therefore zero or (being a nonzero rational combination
/// of Q-linearly independent logarithms of rationals) transcendental.
///
/// Rational base b: the entropy is (ln a)/(ln b). It is rational
/// exactly when the two prime-exponent vectors are parallel, in which
/// case the ratio is returned exactly; otherwise ln a and ln b are
/// Q-linearly independent and the value is transcendental.
ClassificationResult classify(const std::vector<ExactRational>& spectrum, const LogBase& base);

} // namespace entmon

#endif
