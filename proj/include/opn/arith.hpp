#pragma once

// Exact integer and rational arithmetic, primality and factorization.
//
// BigInt and Rational are GMP values. Every Rational produced by this module
// is canonical: gcd(|num|, den) = 1 and den >= 1.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opn {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws InvalidInput when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Decimal encoding; round-trips through parse_bigint.
std::string to_string(const BigInt& n);
/// "p/q", or just "p" when the denominator is 1 (e.g. "-187/37", "1").
std::string to_string(const Rational& q);

BigInt parse_bigint(std::string_view text);
Rational parse_rational(std::string_view text);

/// Largest value for which is_prime is a proof rather than a probable-prime test.
inline constexpr std::uint64_t kDeterministicPrimeLimit = UINT64_MAX;
/// Miller-Rabin rounds handed to GMP above kDeterministicPrimeLimit.
inline constexpr int kProbablePrimeRounds = 40;

enum class PrimalityCertainty { Proven, Probable };

/// Certainty of an is_prime answer for n; Probable above 2^64.
PrimalityCertainty primality_certainty(const BigInt& n);

bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer with its complete prime factorization.
///
/// Primes are strictly increasing and each one passed is_prime when the
/// factorization was built; value equals the product of prime^exponent.
class FactoredInteger {
public:
    FactoredInteger() : value_(1) {}
    /// Validates the invariants and throws InvalidInput if any fails.
    FactoredInteger(BigInt value, std::vector<PrimePower> factors);

    const BigInt& value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    /// Number of prime factors counted with multiplicity.
    unsigned omega_total() const;
    std::size_t distinct() const { return factors_.size(); }
    /// Throws InvalidInput on the empty factorization of 1.
    const BigInt& largest_prime() const;
    const BigInt& smallest_prime() const;
    unsigned exponent_of(const BigInt& p) const;
    /// Primes with multiplicity, ascending.
    std::vector<BigInt> prime_multiset() const;

    /// "7^2 * 6343", or "1".
    std::string to_string() const;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    BigInt value_;
    std::vector<PrimePower> factors_;
};

struct FactorOptions {
    /// Trial division runs over primes up to this value (capped at 2^20).
    std::uint64_t trial_bound = 100'000;
    /// Basic steps (trial divisions plus rho iterations) before BudgetExceeded.
    std::uint64_t budget = 100'000'000;
};

/// Complete factorization of n >= 1. Throws InvalidInput for n < 1 and
/// BudgetExceeded when options.budget runs out.
FactoredInteger factor(const BigInt& n, const FactorOptions& options = {});

struct SqrtResult {
    BigInt root;
    bool exact = false;
};

/// floor(sqrt(n)) and whether it is exact. Throws InvalidInput for n < 0.
SqrtResult isqrt(const BigInt& n);

/// All nonnegative integers x with A x^2 + B x + C = 0, ascending.
/// Uses the discriminant and an exact square root; no floating point.
std::vector<BigInt> quadratic_integer_roots(const BigInt& a, const BigInt& b, const BigInt& c);

/// Primes up to limit (ascending) from a cached sieve.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Exact conversion helpers; throw InvalidInput when out of range.
std::uint64_t to_u64(const BigInt& n);
BigInt from_u64(std::uint64_t n);

} // namespace opn
