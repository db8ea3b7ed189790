#include "opn/trinomial_sieve.hpp"

#include "opn/errors.hpp"

#include <algorithm>

namespace opn {

namespace {

struct Event {
    std::uint32_t x;
    std::uint32_t exponent;
    std::uint64_t prime;
};

} // namespace

TrinomialTable::TrinomialTable(std::uint64_t bound) {
    if (bound > kMaxBound) {
        throw InvalidInput("trinomial sieve bound " + std::to_string(bound) + " exceeds " +
                           std::to_string(kMaxBound));
    }
    const std::size_t n = bound + 1;
    std::vector<std::uint64_t> residual(n);
    values_.resize(n);
    for (std::uint64_t x = 0; x <= bound; ++x) {
        values_[x] = residual[x] = trinomial(x);
    }

    std::vector<Event> events;
    events.reserve(3 * n);
    auto strike = [&](std::uint64_t start, std::uint64_t q) {
        for (std::uint64_t y = start; y <= bound; y += q) {
            std::uint32_t e = 0;
            while (residual[y] % q == 0) {
                residual[y] /= q;
                ++e;
            }
            if (e == 0) {
                throw std::logic_error("trinomial sieve visited a non-root");
            }
            events.push_back({static_cast<std::uint32_t>(y), e, q});
        }
    };
    for (std::uint64_t x = 1; x <= bound; ++x) {
        const std::uint64_t q = residual[x];
        if (q == 1) {
            continue;
        }
        // q is prime and x is its smaller root; the other root is q - 1 - x.
        strike(x, q);
        const std::uint64_t other = q - 1 - x;
        if (other != x && other <= bound) {
            strike(other, q);
        }
    }

    offsets_.assign(n + 1, 0);
    for (const Event& ev : events) {
        ++offsets_[ev.x + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        offsets_[i + 1] += offsets_[i];
    }
    factors_.resize(events.size());
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Event& ev : events) {
        factors_[cursor[ev.x]++] = {ev.prime, ev.exponent};
    }
    for (std::size_t x = 0; x < n; ++x) {
        std::sort(factors_.begin() + offsets_[x], factors_.begin() + offsets_[x + 1],
                  [](const SmallPrimePower& a, const SmallPrimePower& b) { return a.prime < b.prime; });
    }
}

TrinomialTable::TrinomialTable(std::vector<std::vector<SmallPrimePower>> factorizations) {
    if (factorizations.empty()) {
        throw InvalidInput("trinomial table needs at least the entry for 0");
    }
    offsets_.push_back(0);
    for (auto& entry : factorizations) {
        std::sort(entry.begin(), entry.end(),
                  [](const SmallPrimePower& a, const SmallPrimePower& b) { return a.prime < b.prime; });
        std::uint64_t v = 1;
        for (const auto& pp : entry) {
            for (unsigned i = 0; i < pp.exponent; ++i) {
                v *= pp.prime;
            }
            factors_.push_back(pp);
        }
        values_.push_back(v);
        offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
    }
}

std::span<const SmallPrimePower> TrinomialTable::factors(std::uint64_t x) const {
    if (x >= values_.size()) {
        throw InvalidInput("trinomial table index out of range");
    }
    return {factors_.data() + offsets_[x], factors_.data() + offsets_[x + 1]};
}

unsigned TrinomialTable::omega_total(std::uint64_t x) const {
    unsigned total = 0;
    for (const auto& pp : factors(x)) {
        total += pp.exponent;
    }
    return total;
}

std::uint64_t TrinomialTable::largest_prime(std::uint64_t x) const {
    const auto f = factors(x);
    return f.empty() ? 0 : f.back().prime;
}

FactoredInteger TrinomialTable::factored(std::uint64_t x) const {
    std::vector<PrimePower> pps;
    for (const auto& pp : factors(x)) {
        pps.push_back({from_u64(pp.prime), pp.exponent});
    }
    return FactoredInteger(from_u64(value(x)), std::move(pps));
}

} // namespace opn
