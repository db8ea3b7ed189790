#pragma once

// Dense two-phase simplex over exact rationals, Bland's pivot rule.
// All variables are nonnegative; free variables are split by the caller.

#include "opn/arith.hpp"

#include <vector>

namespace opn {

enum class Sense { LE, GE, EQ };

struct LpConstraint {
    std::vector<Rational> coeffs;
    Sense sense = Sense::LE;
    Rational rhs;
};

struct LpProblem {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<LpConstraint> constraints;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

/// Maximize objective . x subject to the constraints and x >= 0.
/// Throws InvalidInput when coefficient vectors do not match num_vars.
LpSolution simplex_maximize(const LpProblem& problem);

} // namespace opn
