#pragma once

// Factorizations of x^2 + x + 1 for every 0 <= x <= bound.
//
// For x <= bound the value is below (x + 1)^2, so once every prime smaller than
// x is divided out what remains is 1 or a single prime q > x, and x is then the
// smaller root of t^2 + t + 1 = 0 mod q. Sieving q along both roots as it is
// discovered factors the whole range without trial division.

#include "opn/arith.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace opn {

struct SmallPrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const SmallPrimePower&, const SmallPrimePower&) = default;
};

class TrinomialTable {
public:
    /// Largest bound accepted by the sieving constructor.
    static constexpr std::uint64_t kMaxBound = 5'000'000;

    /// Sieves 0..bound. Throws InvalidInput above kMaxBound.
    explicit TrinomialTable(std::uint64_t bound);

    /// Table from explicit factorizations, entry x describing x^2 + x + 1.
    /// Entries are taken as given, which lets tests plant fake factorizations.
    explicit TrinomialTable(std::vector<std::vector<SmallPrimePower>> factorizations);

    std::uint64_t bound() const { return values_.size() - 1; }
    /// Product of the recorded factors of entry x.
    std::uint64_t value(std::uint64_t x) const { return values_.at(x); }
    std::span<const SmallPrimePower> factors(std::uint64_t x) const;
    unsigned omega_total(std::uint64_t x) const;
    /// Largest prime of entry x; 0 when the entry is 1.
    std::uint64_t largest_prime(std::uint64_t x) const;
    FactoredInteger factored(std::uint64_t x) const;

private:
    std::vector<std::uint64_t> values_;
    std::vector<std::uint32_t> offsets_;
    std::vector<SmallPrimePower> factors_;
};

inline constexpr std::uint64_t trinomial(std::uint64_t x) { return x * x + x + 1; }

} // namespace opn
