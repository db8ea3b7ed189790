#pragma once

// Integer-coefficient polynomials: cyclotomic Phi_d, all-ones Psi_n,
// composition and exact division.

#include "opn/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace opn {

/// Dense polynomial with BigInt coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly monomial(unsigned degree, const BigInt& coefficient = 1);
    static IntPoly x() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// Zero past the end.
    BigInt coefficient(std::size_t i) const;
    const BigInt& leading() const { return coeffs_.back(); }

    BigInt eval(const BigInt& at) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Human form, highest degree first: "x^2 - x + 1".
    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// 1 + x + ... + x^(n-1). Throws InvalidInput for n == 0.
IntPoly psi(unsigned n);

/// d-th cyclotomic polynomial, by dividing x^d - 1 by Phi_k for every proper
/// divisor k of d. Results are memoized; safe to call concurrently.
const IntPoly& cyclotomic(unsigned d);

/// outer(inner(x)) by Horner's scheme.
IntPoly compose(const IntPoly& outer, const IntPoly& inner);

/// eval_at(f, x) is f.eval(x); kept as a free function for symmetry with the rest.
inline BigInt eval_at(const IntPoly& f, const BigInt& x) { return f.eval(x); }

struct DivisionResult {
    bool divides = false;
    /// Present iff divides.
    std::optional<IntPoly> quotient;
};

/// Long division over the rationals. `divides` holds when the remainder is
/// identically zero and the quotient has integer coefficients (always the case
/// for a monic divisor). Throws InvalidInput on a zero divisor.
DivisionResult exact_divides(const IntPoly& divisor, const IntPoly& dividend);

/// Largest (t-1)(r-1) that check_proposition will expand.
inline constexpr unsigned long kPropositionDegreeLimit = 20000;

struct PropositionCheck {
    unsigned t = 0;
    unsigned r = 0;
    /// r = -1 (mod 2t): the hypothesis under which divisibility is expected.
    bool hypothesis_holds = false;
    bool divides = false;
    long composed_degree = 0;
};

/// Whether Phi_{2t} divides Phi_t(Psi_r). t must be an odd prime and r odd.
/// Throws InvalidInput on bad arguments and BudgetExceeded past the degree limit.
PropositionCheck check_proposition_report(unsigned t, unsigned r);
bool check_proposition(unsigned t, unsigned r);

} // namespace opn
