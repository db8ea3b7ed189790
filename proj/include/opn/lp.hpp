#pragma once

// The linear system over class cardinalities, multiplier certificates and the
// two-phase search for the best bound a*omega + b <= Omega.

#include "opn/arith.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opn {

enum class Variant { Standard, No3 };

std::string_view to_string(Variant v);
/// "standard" or "no3"; throws InvalidInput otherwise.
Variant parse_variant(std::string_view text);

/// Registered symbols, in report order.
inline constexpr std::array<std::string_view, 27> kSymbols = {
    "Omega", "omega", "e0",     "f3",     "g4",     "S",      "T",         "S1",        "S2",
    "S3",    "S4p",   "S21",    "S22",    "S31",    "S32",    "S41",       "S42",       "S1_S",
    "S1_T",  "S1_p0", "S31_SS", "S31_TT", "S31_ST", "S31_SnF_T", "S31_S_TnF", "S32_SnF", "S32_TnF",
};

bool is_symbol(std::string_view name);

enum class RelationKind { EQ, LE };

std::string_view to_string(RelationKind k);

/// sum(terms) + constant  KIND  0. Zero coefficients are never stored.
struct LinearRelation {
    std::string id;
    RelationKind kind = RelationKind::LE;
    std::map<std::string, Rational> terms;
    Rational constant;

    /// Throws InvalidInput for unregistered symbols.
    LinearRelation(std::string id, RelationKind kind, std::map<std::string, Rational> terms, Rational constant);

    Rational coefficient(std::string_view symbol) const;
};

class ConstraintSystem {
public:
    /// Throws InvalidInput on duplicate ids.
    ConstraintSystem(Variant variant, std::vector<LinearRelation> relations);

    Variant variant() const { return variant_; }
    const std::vector<LinearRelation>& relations() const { return relations_; }
    const LinearRelation* find(std::string_view id) const;

private:
    Variant variant_;
    std::vector<LinearRelation> relations_;
};

ConstraintSystem build_system(Variant variant);

struct Certificate {
    Variant variant = Variant::Standard;
    /// Relation id -> multiplier. Ids left out count as 0.
    std::map<std::string, Rational> multipliers;
};

struct Expansion {
    /// Nonzero coefficients only.
    std::map<std::string, Rational> residual;
    Rational constant;

    Rational coefficient(std::string_view symbol) const;
};

/// Sum of multiplier * relation. Throws UnknownRelation for ids not in the system.
Expansion expand(const ConstraintSystem& system, const Certificate& cert);

struct BoundResult {
    Rational a;
    Rational b;
    std::map<std::string, Rational> residual;
    Rational constant;
};

/// Validates the certificate and returns the bound it proves. Throws
/// InvalidCertificate naming the first failed condition.
BoundResult check_certificate(const ConstraintSystem& system, const Certificate& cert);

struct Optimum {
    Certificate certificate;
    BoundResult result;
    /// Optimal omega coefficient from the first phase.
    Rational phase1_a;
};

/// Maximize a, then b with a fixed. Every relation id appears in the returned
/// certificate. Throws LpUnsolvable if either phase has no optimum and
/// InvalidInput if the system lacks relation "5.1".
Optimum optimize(const ConstraintSystem& system);

} // namespace opn
