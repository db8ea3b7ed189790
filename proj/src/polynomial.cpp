#include "opn/polynomial.hpp"

#include "opn/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace opn {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPoly IntPoly::monomial(unsigned degree, const BigInt& coefficient) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = coefficient;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt IntPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::eval(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const BigInt mag = abs(c);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || k == 0) {
            out += opn::to_string(mag);
        }
        if (k >= 1) {
            out += "x";
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPoly psi(unsigned n) {
    if (n == 0) {
        throw InvalidInput("psi requires n >= 1");
    }
    return IntPoly(std::vector<BigInt>(n, BigInt(1)));
}

const IntPoly& cyclotomic(unsigned d) {
    if (d == 0) {
        throw InvalidInput("cyclotomic requires d >= 1");
    }
    // Entries are never erased, so references stay valid after unlocking.
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<IntPoly>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(d); it != memo.end()) {
            return *it->second;
        }
    }
    IntPoly value = IntPoly::monomial(d) - IntPoly{1};
    for (unsigned k = 1; k < d; ++k) {
        if (d % k != 0) {
            continue;
        }
        DivisionResult step = exact_divides(cyclotomic(k), value);
        if (!step.divides) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
        value = std::move(*step.quotient);
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = memo.try_emplace(d, std::make_unique<IntPoly>(std::move(value)));
    return *it->second;
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
    IntPoly acc;
    const auto& c = outer.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * inner + IntPoly(std::vector<BigInt>{*it});
    }
    return acc;
}

DivisionResult exact_divides(const IntPoly& divisor, const IntPoly& dividend) {
    if (divisor.is_zero()) {
        throw InvalidInput("division by the zero polynomial");
    }
    if (dividend.is_zero()) {
        return {true, IntPoly{}};
    }
    if (dividend.degree() < divisor.degree()) {
        return {false, std::nullopt};
    }
    std::vector<Rational> rem;
    rem.reserve(dividend.coefficients().size());
    for (const BigInt& c : dividend.coefficients()) {
        rem.emplace_back(c);
    }
    const auto dd = static_cast<std::size_t>(divisor.degree());
    const Rational lead(divisor.leading());
    std::vector<Rational> quot(rem.size() - dd);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + dd] / lead;
        quot[k] = q;
        if (q == 0) {
            continue;
        }
        for (std::size_t i = 0; i <= dd; ++i) {
            rem[k + i] -= q * Rational(divisor.coefficients()[i]);
        }
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (rem[i] != 0) {
            return {false, std::nullopt};
        }
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(quot.size());
    for (const Rational& q : quot) {
        if (q.get_den() != 1) {
            return {false, std::nullopt};
        }
        coeffs.push_back(q.get_num());
    }
    return {true, IntPoly(std::move(coeffs))};
}

PropositionCheck check_proposition_report(unsigned t, unsigned r) {
    if (t < 3 || !is_prime(static_cast<std::uint64_t>(t))) {
        throw InvalidInput("t must be an odd prime, got " + std::to_string(t));
    }
    if (r == 0 || r % 2 == 0) {
        throw InvalidInput("r must be a positive odd integer, got " + std::to_string(r));
    }
    const unsigned long degree = static_cast<unsigned long>(t - 1) * (r - 1);
    if (degree > kPropositionDegreeLimit) {
        throw BudgetExceeded("(t-1)(r-1) = " + std::to_string(degree) + " exceeds the degree limit of " +
                             std::to_string(kPropositionDegreeLimit));
    }
    PropositionCheck out;
    out.t = t;
    out.r = r;
    out.hypothesis_holds = (r + 1) % (2 * t) == 0;
    const IntPoly composed = compose(cyclotomic(t), psi(r));
    out.composed_degree = composed.degree();
    out.divides = exact_divides(cyclotomic(2 * t), composed).divides;
    return out;
}

bool check_proposition(unsigned t, unsigned r) { return check_proposition_report(t, r).divides; }

} // namespace opn
