#include "opn/arith.hpp"

#include "opn/errors.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace opn {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool is_decimal_integer(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        i = 1;
    }
    if (i == text.size()) {
        return false;
    }
    return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

BigInt parse_bigint(std::string_view text) {
    if (!is_decimal_integer(text)) {
        throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_bigint(text));
    }
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den <= 0) {
        throw InvalidInput("rational denominator must be positive: '" + std::string(text) + "'");
    }
    return make_rational(parse_bigint(text.substr(0, slash)), den);
}

std::uint64_t to_u64(const BigInt& n) {
    if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
        throw InvalidInput("value does not fit in 64 bits: " + to_string(n));
    }
    static_assert(sizeof(unsigned long) == 8, "LP64 platform expected");
    return n.get_ui();
}

BigInt from_u64(std::uint64_t n) {
    static_assert(sizeof(unsigned long) == 8, "LP64 platform expected");
    return BigInt(static_cast<unsigned long>(n));
}

// ---------------------------------------------------------------------------
// Primality

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// The first twelve primes are a deterministic witness set for n < 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2) {
        return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        return is_prime(to_u64(n));
    }
    return mpz_probab_prime_p(n.get_mpz_t(), kProbablePrimeRounds) != 0;
}

PrimalityCertainty primality_certainty(const BigInt& n) {
    return (n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) ? PrimalityCertainty::Proven
                                                               : PrimalityCertainty::Probable;
}

// ---------------------------------------------------------------------------
// Roots

SqrtResult isqrt(const BigInt& n) {
    if (n < 0) {
        throw InvalidInput("isqrt of a negative number");
    }
    SqrtResult r;
    BigInt rem;
    mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    r.exact = (rem == 0);
    return r;
}

std::vector<BigInt> quadratic_integer_roots(const BigInt& a, const BigInt& b, const BigInt& c) {
    if (a == 0) {
        throw InvalidInput("quadratic_integer_roots requires a nonzero leading coefficient");
    }
    std::vector<BigInt> roots;
    const BigInt disc = b * b - 4 * a * c;
    if (disc < 0) {
        return roots;
    }
    const SqrtResult s = isqrt(disc);
    if (!s.exact) {
        return roots;
    }
    const BigInt two_a = 2 * a;
    for (const BigInt& numer : {BigInt(-b - s.root), BigInt(-b + s.root)}) {
        if (numer % two_a != 0) {
            continue;
        }
        BigInt x = numer / two_a;
        if (x >= 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) {
            roots.push_back(std::move(x));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Sieve

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    static std::mutex mutex;
    static std::vector<std::uint32_t> cache;
    static std::uint32_t cached_limit = 1;

    std::lock_guard lock(mutex);
    if (limit > cached_limit) {
        std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
        cache.clear();
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (composite[i]) {
                continue;
            }
            cache.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= limit; j += i) {
                composite[j] = true;
            }
        }
        cached_limit = limit;
    }
    const auto end = std::upper_bound(cache.begin(), cache.end(), limit);
    return {cache.begin(), end};
}

} // namespace opn
