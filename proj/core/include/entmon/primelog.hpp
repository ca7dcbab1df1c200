#ifndef ENTMON_PRIMELOG_HPP
#define ENTMON_PRIMELOG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "entmon/rational.hpp"

namespace entmon {

/// Prime factorization of n >= 1 (trial division for small factors,
/// Brent's Pollard rho above), as ascending (prime, multiplicity).
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Sparse exact-rational exponent vector over the prime-logarithm
/// basis: represents sum_p e_p ln p. Zero exponents are never stored.
class PrimeExponentVector {
public:
    void add(std::uint64_t prime, const ExactRational& exponent);

    bool empty() const { return exps_.empty(); }
    std::size_t support_size() const { return exps_.size(); }
    const std::map<std::uint64_t, ExactRational>& exponents() const { return exps_; }

    /// Floating value of sum e_p ln p.
    double log_value() const;

    PrimeExponentVector& operator+=(const PrimeExponentVector& other);
    bool operator==(const PrimeExponentVector& other) const { return exps_ == other.exps_; }

    /// The exact ratio r with *this == r * other, if one exists.
    /// other must be nonempty for a Rational verdict to make sense;
    /// an empty *this against nonempty other yields r = 0.
    std::optional<ExactRational> ratio_to(const PrimeExponentVector& other) const;

private:
    std::map<std::uint64_t, ExactRational> exps_;
};

/// ln q expanded over prime logarithms with integer exponents from the
/// factorizations of numerator and denominator. Components above 2^64
/// raise unsupported_error.
PrimeExponentVector prime_log_vector(const ExactRational& q);

/// ln a for a = prod lambda_i^{-lambda_i} over the nonzero eigenvalues:
/// the exact-rational prime-log expansion of the natural-log entropy.
/// The spectrum must be nonnegative and sum to exactly 1.
PrimeExponentVector entropy_log_vector(const std::vector<ExactRational>& spectrum);

} // namespace entmon

#endif
