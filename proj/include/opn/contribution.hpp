#pragma once

// Contributed primes, the S_{m,j} classes and the linked-prime map.
//
// A prime p with p^e || N contributes every prime dividing sigma(p^e). Elements
// of S have e = 2 and are classified by m = Omega(sigma(p^2)) and j = p mod 3.

#include "opn/arith.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opn {

/// sigma(p^e) = 1 + p + ... + p^e. Throws InvalidInput unless p is prime and e >= 1.
BigInt sigma_pe(const BigInt& p, unsigned e);

/// Factorization of sigma(p^e); p must be an odd prime.
FactoredInteger contributed_primes(const BigInt& p, unsigned e, const FactorOptions& options = {});

enum class ClassTag { S1, S21, S22, S31, S32, S4plus_1, S4plus_2 };

std::string_view to_string(ClassTag tag);
ClassTag parse_class_tag(std::string_view text);

/// Class from the contributed-prime count m and the residue j of p mod 3.
/// m >= 4 collapses to S4plus_j. Throws InvalidInput for m == 0 or j not in {1, 2}.
ClassTag class_from(unsigned m, unsigned j);

struct ContributionProfile {
    BigInt p;
    unsigned e = 2;
    BigInt sigma;
    FactoredInteger contributed;
    /// Omega(sigma), primes counted with multiplicity.
    unsigned m = 0;
    /// p mod 3.
    unsigned j = 0;
    /// Only set for e = 2.
    std::optional<ClassTag> class_tag;
};

/// Profile for p^e. Class tags are only assigned for e = 2.
ContributionProfile profile(const BigInt& p, unsigned e, const FactorOptions& options = {});

/// Profile with e = 2 built from an already known factorization of p^2 + p + 1.
/// Throws InvalidInput when the factorization's value is not sigma(p^2).
ContributionProfile profile_from(const BigInt& p, FactoredInteger contributed);

/// Profile with e = 2 and its class. p must be an odd prime other than 3.
ContributionProfile classify(const BigInt& p, const FactorOptions& options = {});

struct LinkedPrime {
    BigInt ell;
    /// The S22 case where the smaller contributed prime is taken instead.
    bool exceptional = false;
    /// Primes b with b^2 + b + 1 = 3c for the larger prime c. Non-empty iff exceptional.
    std::vector<BigInt> partners;
};

/// The linked prime of a profile in class S1, S21, S22 or S31: the largest
/// contributed prime, except for S22 when some prime b has b^2 + b + 1 = 3c for
/// the larger prime c (b would lie in S21 and share c); then the smaller prime.
/// Throws InvalidInput for S32 and S4plus.
LinkedPrime linked_prime(const ContributionProfile& profile);
LinkedPrime linked_prime(const BigInt& p, const FactorOptions& options = {});

enum class Role { S, T, Special };

std::string_view to_string(Role role);

/// Role assignment for a population of primes. Built once, then read-only.
class RoleContext {
public:
    RoleContext() = default;
    /// Throws InvalidInput for overlapping roles, more than one special prime,
    /// or an S-role prime that is not an odd prime other than 3.
    explicit RoleContext(std::map<BigInt, Role> roles, const FactorOptions& options = {});

    std::optional<Role> role_of(const BigInt& q) const;
    /// f(S1): primes contributed by the S-role primes of class S1.
    const std::set<BigInt>& f_s1() const { return f_s1_; }
    const std::map<BigInt, Role>& roles() const { return roles_; }

private:
    std::map<BigInt, Role> roles_;
    std::set<BigInt> f_s1_;
};

/// Role sets appearing as class superscripts.
enum class RoleSet {
    S,            // S
    T,            // T
    P0,           // {p0}
    TP0,          // T u {p0}
    SnF,          // S \ f(S1)
    TP0nF,        // (T u {p0}) \ f(S1)
};

bool in_role_set(const BigInt& q, RoleSet set, const RoleContext& ctx);

/// Whether the contributed primes of `profile` can be matched, up to
/// reordering, to distinct slots so that the i-th slot lies in sets[i].
/// Requires sets.size() <= m.
bool matches(const ContributionProfile& profile, std::span<const RoleSet> sets, const RoleContext& ctx);

enum class Refinement {
    S1_S,
    S1_T,
    S1_p0,
    S31_SS,
    S31_TT,
    S31_ST,
    S31_SnF_T,
    S31_S_TnF,
    S32_SnF,
    S32_TnF,
};

std::string_view to_string(Refinement r);

/// Superscripted classes that `profile` belongs to under `ctx`. Every
/// contributed prime other than 3 must have a role (3 is never in S, T or {p0}).
std::set<Refinement> refine(const ContributionProfile& profile, const RoleContext& ctx);

} // namespace opn
