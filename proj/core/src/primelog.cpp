#include "entmon/primelog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entmon/errors.hpp"

namespace entmon {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Brent's cycle variant of Pollard rho; n must be odd composite.
u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    u64 seed = 1;
    for (;;) {
        ++seed;
        u64 y = seed % n, c = (seed * 2654435761ULL) % n, m = 128;
        if (c == 0) c = 1;
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                const u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
        // rare cycle failure: retry with the next seed
    }
}

void factor_into(u64 n, std::map<u64, int>& out) {
    while (n > 1) {
        if (is_prime_u64(n)) {
            ++out[n];
            return;
        }
        u64 d = pollard_brent(n);
        factor_into(d, out);
        n /= d;
    }
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic witness set for 64-bit integers.
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
    if (n == 0) throw validation_error("factor_u64: zero has no factorization");
    std::map<u64, int> acc;
    // Trial division knocks out the common small factors first.
    for (u64 p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    if (n > 1) factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

void PrimeExponentVector::add(std::uint64_t prime, const ExactRational& exponent) {
    if (exponent == 0) return;
    auto it = exps_.find(prime);
    if (it == exps_.end()) {
        exps_.emplace(prime, exponent);
        return;
    }
    it->second += exponent;
    if (it->second == 0) exps_.erase(it);
}

double PrimeExponentVector::log_value() const {
    double s = 0.0;
    for (const auto& [p, e] : exps_) s += rational_to_double(e) * std::log(double(p));
    return s;
}

PrimeExponentVector& PrimeExponentVector::operator+=(const PrimeExponentVector& other) {
    for (const auto& [p, e] : other.exps_) add(p, e);
    return *this;
}

std::optional<ExactRational> PrimeExponentVector::ratio_to(const PrimeExponentVector& other) const {
    if (other.empty()) return std::nullopt;
    if (empty()) return ExactRational(0);
    if (exps_.size() != other.exps_.size()) return std::nullopt;
    std::optional<ExactRational> ratio;
    auto it = exps_.begin();
    auto jt = other.exps_.begin();
    for (; it != exps_.end(); ++it, ++jt) {
        if (it->first != jt->first) return std::nullopt;
        ExactRational r = it->second / jt->second;
        if (!ratio)
            ratio = r;
        else if (*ratio != r)
            return std::nullopt;
    }
    return ratio;
}

PrimeExponentVector prime_log_vector(const ExactRational& q) {
    if (q <= 0) throw validation_error("prime_log_vector: argument must be positive");
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const BigInt cap = BigInt(1) << 64;
    if (num >= cap || den >= cap)
        throw unsupported_error("prime_log_vector: numerator or denominator exceeds 2^64");
    PrimeExponentVector v;
    for (const auto& [p, e] : factor_u64(num.convert_to<u64>())) v.add(p, ExactRational(e));
    for (const auto& [p, e] : factor_u64(den.convert_to<u64>())) v.add(p, ExactRational(-e));
    return v;
}

PrimeExponentVector entropy_log_vector(const std::vector<ExactRational>& spectrum) {
    ExactRational total(0);
    for (const ExactRational& lam : spectrum) {
        if (lam < 0) throw validation_error("entropy_log_vector: negative eigenvalue");
        total += lam;
    }
    if (total != 1) throw validation_error("entropy_log_vector: spectrum must sum to exactly 1");
    PrimeExponentVector v;
    for (const ExactRational& lam : spectrum) {
        if (lam == 0) continue; // 0 log 0 = 0
        const PrimeExponentVector parts = prime_log_vector(lam);
        for (const auto& [p, e] : parts.exponents()) v.add(p, ExactRational(-lam * e));
    }
    return v;
}

} // namespace entmon
