#ifndef ENTMON_RATIONAL_HPP
#define ENTMON_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace entmon {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept reduced with positive denominator
// by the backing type.
using ExactRational = boost::multiprecision::cpp_rational;

/// Parses "3/4", "-1/2", "7" (optionally with surrounding spaces).
/// Throws validation_error on malformed input or zero denominator.
ExactRational parse_rational(std::string_view text);

std::string rational_to_string(const ExactRational& q);

double rational_to_double(const ExactRational& q);

} // namespace entmon

#endif
