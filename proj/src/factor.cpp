#include "opn/arith.hpp"

#include "opn/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace opn {

// ---------------------------------------------------------------------------
// FactoredInteger

FactoredInteger::FactoredInteger(BigInt value, std::vector<PrimePower> factors)
    : value_(std::move(value)), factors_(std::move(factors)) {
    if (value_ < 1) {
        throw InvalidInput("factored value must be positive");
    }
    BigInt product = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const PrimePower& pp = factors_[i];
        if (pp.exponent == 0) {
            throw InvalidInput("zero exponent in factorization");
        }
        if (i > 0 && !(factors_[i - 1].prime < pp.prime)) {
            throw InvalidInput("factorization primes not strictly increasing");
        }
        if (!is_prime(pp.prime)) {
            throw InvalidInput("non-prime factor " + opn::to_string(pp.prime));
        }
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        product *= power;
    }
    if (product != value_) {
        throw InvalidInput("factor product " + opn::to_string(product) + " != " + opn::to_string(value_));
    }
}

unsigned FactoredInteger::omega_total() const {
    unsigned total = 0;
    for (const auto& pp : factors_) {
        total += pp.exponent;
    }
    return total;
}

const BigInt& FactoredInteger::largest_prime() const {
    if (factors_.empty()) {
        throw InvalidInput("1 has no prime factors");
    }
    return factors_.back().prime;
}

const BigInt& FactoredInteger::smallest_prime() const {
    if (factors_.empty()) {
        throw InvalidInput("1 has no prime factors");
    }
    return factors_.front().prime;
}

unsigned FactoredInteger::exponent_of(const BigInt& p) const {
    for (const auto& pp : factors_) {
        if (pp.prime == p) {
            return pp.exponent;
        }
    }
    return 0;
}

std::vector<BigInt> FactoredInteger::prime_multiset() const {
    std::vector<BigInt> out;
    for (const auto& pp : factors_) {
        out.insert(out.end(), pp.exponent, pp.prime);
    }
    return out;
}

std::string FactoredInteger::to_string() const {
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& pp : factors_) {
        if (!out.empty()) {
            out += " * ";
        }
        out += opn::to_string(pp.prime);
        if (pp.exponent > 1) {
            out += "^" + std::to_string(pp.exponent);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// factor

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::uint32_t kTrialCap = 1u << 20;

const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> primes = primes_up_to(kTrialCap);
    return primes;
}

class Budget {
public:
    explicit Budget(u64 limit) : limit_(limit) {}

    void spend(u64 steps = 1) {
        used_ += steps;
        if (used_ > limit_) {
            throw BudgetExceeded("factorization budget of " + std::to_string(limit_) + " steps exhausted");
        }
    }

private:
    u64 limit_;
    u64 used_ = 0;
};

using FactorMap = std::map<BigInt, unsigned>;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 abs_diff(u64 a, u64 b) { return a > b ? a - b : b - a; }

// Brent's variant of Pollard rho; returns a nontrivial divisor of composite odd n.
u64 rho_u64(u64 n, Budget& budget) {
    constexpr u64 kBlock = 128;
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                y = step(y);
            }
            budget.spend(r);
            for (u64 k = 0; k < r && g == 1; k += kBlock) {
                ys = y;
                const u64 lim = std::min(kBlock, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = step(y);
                    q = mul_mod(q, abs_diff(x, y), n);
                }
                budget.spend(lim);
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = step(ys);
                budget.spend();
                g = std::gcd(abs_diff(x, ys), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

// Montgomery arithmetic modulo an odd n < 2^126, R = 2^128.
class Mont128 {
public:
    explicit Mont128(u128 n) : n_(n) {
        u128 inv = n;
        for (int i = 0; i < 7; ++i) {
            inv *= 2 - n * inv;
        }
        neg_inv_ = -inv;
    }

    // a * b / R mod n, for a, b < n.
    u128 mul(u128 a, u128 b) const {
        u128 hi, lo;
        mul256(a, b, hi, lo);
        u128 mh, ml;
        mul256(lo * neg_inv_, n_, mh, ml);
        u128 u = hi + mh + (lo != 0);
        return u >= n_ ? u - n_ : u;
    }

    u128 add(u128 a, u128 b) const {
        const u128 s = a + b;
        return s >= n_ ? s - n_ : s;
    }

private:
    static void mul256(u128 a, u128 b, u128& hi, u128& lo) {
        const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
        const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
        const u128 p00 = static_cast<u128>(a0) * b0, p01 = static_cast<u128>(a0) * b1;
        const u128 p10 = static_cast<u128>(a1) * b0, p11 = static_cast<u128>(a1) * b1;
        const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
        lo = (mid << 64) | static_cast<u64>(p00);
        hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    }

    u128 n_;
    u128 neg_inv_;
};

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u128 abs_diff128(u128 a, u128 b) { return a > b ? a - b : b - a; }

constexpr unsigned kMontBits = 126;

// Brent rho in the Montgomery domain: iterates x -> x^2 / R + c, which is as
// good a pseudo-random map as x^2 + c, and R is a unit so gcds are unaffected.
u128 rho_u128(u128 n, Budget& budget) {
    constexpr u64 kBlock = 128;
    const Mont128 m(n);
    for (u128 c = 1;; ++c) {
        auto step = [&](u128 v) { return m.add(m.mul(v, v), c); };
        u128 y = 2, x = 2, ys = 2, q = 1, g = 1;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                y = step(y);
            }
            budget.spend(r);
            for (u64 k = 0; k < r && g == 1; k += kBlock) {
                ys = y;
                const u64 lim = std::min(kBlock, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = step(y);
                    q = m.mul(q, abs_diff128(x, y));
                }
                budget.spend(lim);
                g = gcd128(q, n);
            }
        }
        if (g == n) {
            do {
                ys = step(ys);
                budget.spend();
                g = gcd128(abs_diff128(x, ys), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

BigInt from_u128(u128 v) {
    BigInt out = from_u64(static_cast<u64>(v >> 64));
    out <<= 64;
    out += from_u64(static_cast<u64>(v));
    return out;
}

u128 to_u128(const BigInt& v) {
    BigInt hi = v >> 64;
    BigInt lo = v - (hi << 64);
    return (static_cast<u128>(to_u64(hi)) << 64) | to_u64(lo);
}

BigInt rho_big(const BigInt& n, Budget& budget) {
    constexpr u64 kBlock = 128;
    for (unsigned long c = 1;; ++c) {
        auto step = [&](BigInt& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        BigInt y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                step(y);
            }
            budget.spend(r);
            for (u64 k = 0; k < r && g == 1; k += kBlock) {
                ys = y;
                const u64 lim = std::min(kBlock, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    step(y);
                    diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                budget.spend(lim);
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g == n) {
            do {
                step(ys);
                budget.spend();
                diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

// n has no prime factors below the trial bound (or n is small enough that
// trial division finished); split it into primes.
void split_u64(u64 n, FactorMap& out, Budget& budget) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out[from_u64(n)] += 1;
        return;
    }
    if (n % 2 == 0) {
        out[BigInt(2)] += 1;
        split_u64(n / 2, out, budget);
        return;
    }
    const u64 d = rho_u64(n, budget);
    split_u64(d, out, budget);
    split_u64(n / d, out, budget);
}

void split_big(const BigInt& n, FactorMap& out, Budget& budget) {
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        split_u64(to_u64(n), out, budget);
        return;
    }
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    if (mpz_even_p(n.get_mpz_t())) {
        out[BigInt(2)] += 1;
        split_big(n / 2, out, budget);
        return;
    }
    const BigInt d = mpz_sizeinbase(n.get_mpz_t(), 2) <= kMontBits ? from_u128(rho_u128(to_u128(n), budget))
                                                                    : rho_big(n, budget);
    split_big(d, out, budget);
    split_big(BigInt(n / d), out, budget);
}

void trial_divide_u64(u64& n, u64 bound, FactorMap& out, Budget& budget) {
    for (std::uint32_t p : trial_primes()) {
        if (p > bound || static_cast<u64>(p) * p > n) {
            break;
        }
        budget.spend();
        if (n % p != 0) {
            continue;
        }
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        out[BigInt(p)] += e;
        if (n > 1 && is_prime(n)) {
            break;
        }
    }
}

void trial_divide_big(BigInt& n, u64 bound, FactorMap& out, Budget& budget) {
    for (std::uint32_t p : trial_primes()) {
        if (p > bound) {
            break;
        }
        if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
            u64 small = to_u64(n);
            // Resume at p; primes below p are already gone.
            for (std::uint32_t q : trial_primes()) {
                if (q < p) {
                    continue;
                }
                if (q > bound || static_cast<u64>(q) * q > small) {
                    break;
                }
                budget.spend();
                if (small % q != 0) {
                    continue;
                }
                unsigned e = 0;
                do {
                    small /= q;
                    ++e;
                } while (small % q == 0);
                out[BigInt(q)] += e;
                if (small > 1 && is_prime(small)) {
                    break;
                }
            }
            n = from_u64(small);
            return;
        }
        budget.spend();
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            continue;
        }
        unsigned e = 0;
        do {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        out[BigInt(p)] += e;
        if (is_prime(n)) {
            break;
        }
    }
}

} // namespace

FactoredInteger factor(const BigInt& n, const FactorOptions& options) {
    if (n < 1) {
        throw InvalidInput("factor requires n >= 1, got " + to_string(n));
    }
    Budget budget(options.budget);
    FactorMap found;
    const u64 bound = std::min<u64>(options.trial_bound, kTrialCap);

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        u64 rest = to_u64(n);
        if (rest > 1 && !is_prime(rest)) {
            trial_divide_u64(rest, bound, found, budget);
        }
        split_u64(rest, found, budget);
    } else {
        BigInt rest = n;
        if (!is_prime(rest)) {
            trial_divide_big(rest, bound, found, budget);
        }
        split_big(rest, found, budget);
    }

    std::vector<PrimePower> factors;
    factors.reserve(found.size());
    for (auto& [p, e] : found) {
        factors.push_back({p, e});
    }
    return FactoredInteger(n, std::move(factors));
}

} // namespace opn
