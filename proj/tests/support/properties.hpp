#pragma once

// Randomized property checks shared by the unit tests and the acceptance run.
// Oracles here are written independently of the library code they check.

#include "opn/lp.hpp"

#include <cstdint>
#include <vector>

namespace opn::testing {

/// n <= max_n for which the product of Phi_d over d | n differs from x^n - 1.
std::vector<unsigned> cyclotomic_product_failures(unsigned max_n);

struct SoundnessReport {
    std::size_t samples = 0;
    std::size_t rejected = 0;
    std::size_t certificates = 0;
    std::size_t violations = 0;
};

/// Draws `samples` nonnegative integer points satisfying every relation of the
/// variant's system and checks a*omega + b <= Omega for each accepted
/// certificate (the optimum, the trivial one, and the adjusted printed table
/// for the standard variant).
SoundnessReport certificate_soundness(Variant variant, std::size_t samples, std::uint64_t seed);

struct DualityReport {
    std::size_t problems = 0;
    std::size_t optimal = 0;
    std::size_t infeasible = 0;
    std::size_t disagreements = 0;
};

/// Random LPs with at most 6 variables, bounded by a box; compares
/// simplex_maximize against brute-force vertex enumeration.
DualityReport simplex_vs_vertices(std::size_t problems, std::uint64_t seed);

/// Table 2 multipliers with relation 5.10 set to `c10`.
Certificate printed_table2(const Rational& c10);

} // namespace opn::testing
