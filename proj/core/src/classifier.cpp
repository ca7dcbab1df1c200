#include "entmon/classifier.hpp"

#include <cmath>

#include "entmon/errors.hpp"

namespace entmon {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Zero: return "zero";
        case Verdict::Rational: return "rational";
        default: return "transcendental";
    }
}

LogBase LogBase::rational(ExactRational b) {
    if (b <= 1) throw validation_error("LogBase: rational base must exceed 1");
    LogBase out;
    out.natural = false;
    out.value = std::move(b);
    return out;
}

LogBase LogBase::parse(std::string_view text) {
    if (text == "e" || text == "E") return LogBase::e();
    return LogBase::rational(parse_rational(text));
}

namespace {

double float_entropy(const std::vector<ExactRational>& spectrum, const LogBase& base) {
    double s = 0.0;
    for (const ExactRational& lam : spectrum) {
        const double x = rational_to_double(lam);
        if (x > 0.0) s -= x * std::log(x);
    }
    if (!base.natural) s /= std::log(rational_to_double(base.value));
    return s;
}

} // namespace

ClassificationResult classify(const std::vector<ExactRational>& spectrum, const LogBase& base) {
    ClassificationResult out;
    out.ln_a = entropy_log_vector(spectrum);
    out.numeric_check = float_entropy(spectrum, base);

    if (out.ln_a.empty()) {
        out.verdict = Verdict::Zero;
        out.value = ExactRational(0);
        return out;
    }
    if (base.natural) {
        // Nonzero rational combination of prime logs: transcendental.
        out.verdict = Verdict::Transcendental;
        return out;
    }
    out.ln_b = prime_log_vector(base.value);
    if (const auto ratio = out.ln_a.ratio_to(out.ln_b); ratio) {
        out.verdict = Verdict::Rational;
        out.value = *ratio;
        const double err = std::abs(rational_to_double(*ratio) - out.numeric_check);
        if (err > 1e-12)
            throw consistency_error("classify: exact rational value disagrees with the "
                                    "floating entropy by " +
                                    std::to_string(err));
        return out;
    }
    out.verdict = Verdict::Transcendental;
    return out;
}

} // namespace entmon
