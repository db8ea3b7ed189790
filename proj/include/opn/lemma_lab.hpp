#pragma once

// Exhaustive bounded verification of the divisibility lemmas behind the linking
// map, the linking census itself, and the search for S32 primes sharing their
// largest contributed prime.
//
// "bound" limits the squared-side variables (the x in x^2 + x + 1); primes
// obtained as factors of those values are unbounded consequences.

#include "opn/arith.hpp"
#include "opn/contribution.hpp"
#include "opn/trinomial_sieve.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opn {

enum class LemmaId {
    OnlyOne3,
    Modularity,
    Simplifying,
    Factorization1,
    Factorization2,
    Factorization3,
    ZelProof1,
    ZelProof2,
    UniqueS1S2,
    SemiS31,
    SemiS22S31,
    UniqueS1S31,
    UniqueS21S31,
    SmallFactor,
    Census,
};

/// CLI spelling, e.g. "zelproof2", "unique-s1-s31".
std::string_view cli_name(LemmaId id);
/// Throws InvalidInput for unknown names.
LemmaId parse_lemma(std::string_view name);
std::span<const LemmaId> all_lemmas();

enum class FactorizationLemma { F1, F2, F3 };
enum class NonexistenceLemma { ZP2, U_S1S2, SEMI_S31, SEMI_S22S31, U_S1S31, U_S21S31, SMALL };

LemmaId lemma_id(FactorizationLemma which);
LemmaId lemma_id(NonexistenceLemma which);

using Tuple = std::vector<BigInt>;

struct SearchReport {
    std::string lemma_id;
    std::uint64_t bound = 0;
    /// Names of the counterexample tuple entries.
    std::vector<std::string> fields;
    /// Names of the witness tuple entries (differs from `fields` for
    /// nonexistence lemmas, whose witnesses satisfy only the premise).
    std::vector<std::string> witness_fields;
    std::uint64_t tuples_examined = 0;
    std::uint64_t witnesses_found = 0;
    /// Never capped; sorted.
    std::vector<Tuple> counterexamples;
    /// Lexicographically smallest witnesses, capped; sorted.
    std::vector<Tuple> witnesses;
    std::chrono::milliseconds elapsed{0};
    /// Free-form notes carried into reports (interpretation choices, caveats).
    std::vector<std::string> notes;

    bool passed() const { return counterexamples.empty(); }
};

struct SweepOptions {
    unsigned jobs = 1;
    std::size_t witness_cap = 100;
    FactorOptions factor;
};

/// Minimum bound accepted by the verifiers.
inline constexpr std::uint64_t kMinVerifierBound = 10;

SearchReport verify_factorization_identity(FactorizationLemma which, std::uint64_t bound,
                                           const SweepOptions& options = {});
SearchReport verify_factorization_identity(FactorizationLemma which, const TrinomialTable& table,
                                           const SweepOptions& options = {});

SearchReport verify_nonexistence(NonexistenceLemma which, std::uint64_t bound, const SweepOptions& options = {});
SearchReport verify_nonexistence(NonexistenceLemma which, const TrinomialTable& table,
                                 const SweepOptions& options = {});

SearchReport verify_zelproof1(std::uint64_t bound, const SweepOptions& options = {});
SearchReport verify_zelproof1(const TrinomialTable& table, const SweepOptions& options = {});

SearchReport verify_simplifying(std::uint64_t bound, const SweepOptions& options = {});
SearchReport verify_simplifying(const TrinomialTable& table, const SweepOptions& options = {});

/// 3 || sigma(p^2) for primes p = 1 (mod 3), and 3 does not divide it for p = 2 (mod 3).
SearchReport verify_only_one_3(std::uint64_t bound, const SweepOptions& options = {});

/// Every prime a dividing sigma(b^(c-1)) is c or 1 mod c, for primes b <= bound, c in {3, 5, 7}.
SearchReport verify_modularity(std::uint64_t bound, const SweepOptions& options = {});

/// Dispatch by id. Census runs linking_census and returns its report.
SearchReport verify(LemmaId id, std::uint64_t bound, const SweepOptions& options = {});

/// Independent re-check of a reported witness against the lemma's hypothesis
/// (or premise, for nonexistence lemmas), from scratch arithmetic.
bool witness_valid(LemmaId id, const Tuple& witness);

struct ReconstructedTriple {
    BigInt a;
    BigInt b;
    BigInt c;

    friend bool operator==(const ReconstructedTriple&, const ReconstructedTriple&) = default;
};

/// The unique primes a, b, c with a^2+a+1 = cd, b^2+b+1 = 3c and c > d, if any,
/// from b = (5 + sqrt(12d - 3)) / 2. d must be an odd prime above 3.
std::optional<ReconstructedTriple> reconstruct_from_d(const BigInt& d);

struct FiberMember {
    BigInt p;
    ClassTag cls = ClassTag::S1;
    bool exceptional = false;

    friend bool operator==(const FiberMember&, const FiberMember&) = default;
};

struct FiberReport {
    BigInt shared_prime;
    /// "S22+S31", "S31+S31", ... for the census; "S32:largest" for collisions.
    std::string pattern;
    /// Sorted by p.
    std::vector<FiberMember> members;
};

struct LinkingCensus {
    /// Sorted by shared prime.
    std::vector<FiberReport> fibers;
    SearchReport report;
};

/// Linked prime of every odd prime p <= bound in S1, S21, S22 or S31, grouped
/// by value. Each fiber must hold at most one element of S1 u S21, at most two
/// elements overall, and a two-element fiber must be {S31, S31} or {S22, S31}.
LinkingCensus linking_census(std::uint64_t bound, const SweepOptions& options = {});

/// Primes p <= bound of class `cls`, grouped by largest contributed prime;
/// fibers with at least min_share members, sorted by shared prime.
std::vector<FiberReport> find_shared_largest(ClassTag cls, std::uint64_t min_share, std::uint64_t bound,
                                             const SweepOptions& options = {});

} // namespace opn
