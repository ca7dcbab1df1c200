#include "entmon/rational.hpp"

#include <cctype>

#include "entmon/errors.hpp"

namespace entmon {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_int(std::string_view s) {
    s = trimmed(s);
    if (s.empty()) throw validation_error("parse_rational: empty integer field");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) throw validation_error("parse_rational: sign without digits");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw validation_error("parse_rational: non-digit in '" + std::string(s) + "'");
    return BigInt(std::string(s));
}

} // namespace

ExactRational parse_rational(std::string_view text) {
    const std::string_view s = trimmed(text);
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return ExactRational(parse_int(s));
    const BigInt num = parse_int(s.substr(0, slash));
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw validation_error("parse_rational: zero denominator");
    return ExactRational(num, den);
}

std::string rational_to_string(const ExactRational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double rational_to_double(const ExactRational& q) { return q.convert_to<double>(); }

} // namespace entmon
