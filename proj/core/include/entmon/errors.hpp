#ifndef ENTMON_ERRORS_HPP
#define ENTMON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entmon {

// Malformed or out-of-contract input (bad shapes, non-Hermitian data,
// spectra that do not sum to one, base <= 1, ...).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input is well-formed but outside the mathematical domain of the
// operation (singular state, degenerate spectrum, boundary point).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Inputs exceed a documented implementation limit (e.g. factor > 2^64).
class unsupported_error : public std::invalid_argument {
public:
    explicit unsupported_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical continuation failed: corrector divergence, step underflow
// near a singularity, or a root-finder leaving its branch.
class tracking_error : public std::runtime_error {
public:
    explicit tracking_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A run was configured in a way the engine refuses: path through an
// exclusion zone, no acceptable start shift, path/start mismatch.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed (lattice identity, lift rounding).
// These indicate a bug or a loss of precision, not bad user input.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace entmon

#endif
