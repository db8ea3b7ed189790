#include "opn/contribution.hpp"

#include "opn/errors.hpp"

#include <array>
#include <functional>

namespace opn {

namespace {

void require_prime(const BigInt& p, const char* what) {
    if (!is_prime(p)) {
        throw InvalidInput(std::string(what) + ": " + to_string(p) + " is not prime");
    }
}

void require_odd_prime(const BigInt& p, const char* what) {
    require_prime(p, what);
    if (p == 2) {
        throw InvalidInput(std::string(what) + ": 2 is not an odd prime");
    }
}

unsigned mod3(const BigInt& p) {
    return static_cast<unsigned>(mpz_fdiv_ui(p.get_mpz_t(), 3));
}

} // namespace

BigInt sigma_pe(const BigInt& p, unsigned e) {
    require_prime(p, "sigma_pe");
    if (e == 0) {
        throw InvalidInput("sigma_pe requires e >= 1");
    }
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e + 1);
    return BigInt((power - 1) / (p - 1));
}

FactoredInteger contributed_primes(const BigInt& p, unsigned e, const FactorOptions& options) {
    require_odd_prime(p, "contributed_primes");
    return factor(sigma_pe(p, e), options);
}

std::string_view to_string(ClassTag tag) {
    switch (tag) {
    case ClassTag::S1: return "S1";
    case ClassTag::S21: return "S21";
    case ClassTag::S22: return "S22";
    case ClassTag::S31: return "S31";
    case ClassTag::S32: return "S32";
    case ClassTag::S4plus_1: return "S4plus_1";
    case ClassTag::S4plus_2: return "S4plus_2";
    }
    return "?";
}

ClassTag parse_class_tag(std::string_view text) {
    for (ClassTag tag : {ClassTag::S1, ClassTag::S21, ClassTag::S22, ClassTag::S31, ClassTag::S32,
                         ClassTag::S4plus_1, ClassTag::S4plus_2}) {
        if (to_string(tag) == text) {
            return tag;
        }
    }
    throw InvalidInput("unknown class tag '" + std::string(text) + "'");
}

ClassTag class_from(unsigned m, unsigned j) {
    if (m == 0 || (j != 1 && j != 2)) {
        throw InvalidInput("class_from: need m >= 1 and j in {1, 2}");
    }
    switch (m) {
    case 1:
        // sigma(p^2) is divisible by 3 when j = 1, so S_{1,1} is empty; both map to S1.
        return ClassTag::S1;
    case 2: return j == 1 ? ClassTag::S21 : ClassTag::S22;
    case 3: return j == 1 ? ClassTag::S31 : ClassTag::S32;
    default: return j == 1 ? ClassTag::S4plus_1 : ClassTag::S4plus_2;
    }
}

ContributionProfile profile(const BigInt& p, unsigned e, const FactorOptions& options) {
    ContributionProfile out;
    out.p = p;
    out.e = e;
    out.contributed = contributed_primes(p, e, options);
    out.sigma = out.contributed.value();
    out.m = out.contributed.omega_total();
    out.j = mod3(p);
    if (e == 2 && out.j != 0) {
        out.class_tag = class_from(out.m, out.j);
    }
    return out;
}

ContributionProfile profile_from(const BigInt& p, FactoredInteger contributed) {
    require_odd_prime(p, "profile_from");
    if (contributed.value() != p * p + p + 1) {
        throw InvalidInput("profile_from: factorization is not of sigma(p^2)");
    }
    ContributionProfile out;
    out.p = p;
    out.e = 2;
    out.sigma = contributed.value();
    out.m = contributed.omega_total();
    out.contributed = std::move(contributed);
    out.j = mod3(p);
    if (out.j != 0) {
        out.class_tag = class_from(out.m, out.j);
    }
    return out;
}

ContributionProfile classify(const BigInt& p, const FactorOptions& options) {
    require_odd_prime(p, "classify");
    if (p == 3) {
        throw InvalidInput("classify: 3 is never an element of S");
    }
    return profile(p, 2, options);
}

LinkedPrime linked_prime(const ContributionProfile& prof) {
    if (!prof.class_tag) {
        throw InvalidInput("linked_prime: profile has no class");
    }
    LinkedPrime out;
    switch (*prof.class_tag) {
    case ClassTag::S1:
    case ClassTag::S21:
    case ClassTag::S31:
        out.ell = prof.contributed.largest_prime();
        return out;
    case ClassTag::S22: {
        const BigInt& c = prof.contributed.largest_prime();
        const BigInt& d = prof.contributed.smallest_prime();
        for (BigInt& b : quadratic_integer_roots(1, 1, BigInt(1 - 3 * c))) {
            if (is_prime(b)) {
                out.partners.push_back(std::move(b));
            }
        }
        out.exceptional = !out.partners.empty();
        out.ell = out.exceptional ? d : c;
        return out;
    }
    default:
        throw InvalidInput("linked_prime: not defined for class " + std::string(to_string(*prof.class_tag)));
    }
}

LinkedPrime linked_prime(const BigInt& p, const FactorOptions& options) {
    return linked_prime(classify(p, options));
}

// ---------------------------------------------------------------------------
// Roles

std::string_view to_string(Role role) {
    switch (role) {
    case Role::S: return "S";
    case Role::T: return "T";
    case Role::Special: return "special";
    }
    return "?";
}

RoleContext::RoleContext(std::map<BigInt, Role> roles, const FactorOptions& options) : roles_(std::move(roles)) {
    int specials = 0;
    for (const auto& [q, role] : roles_) {
        if (role == Role::Special) {
            require_prime(q, "special prime");
            ++specials;
            continue;
        }
        require_odd_prime(q, "role assignment");
        if (q == 3) {
            throw InvalidInput("3 cannot have role S or T");
        }
        if (role == Role::S) {
            const ContributionProfile prof = classify(q, options);
            if (prof.class_tag == ClassTag::S1) {
                for (const auto& pp : prof.contributed.factors()) {
                    f_s1_.insert(pp.prime);
                }
            }
        }
    }
    if (specials > 1) {
        throw InvalidInput("at most one special prime");
    }
}

std::optional<Role> RoleContext::role_of(const BigInt& q) const {
    if (auto it = roles_.find(q); it != roles_.end()) {
        return it->second;
    }
    return std::nullopt;
}

bool in_role_set(const BigInt& q, RoleSet set, const RoleContext& ctx) {
    const auto role = ctx.role_of(q);
    if (!role) {
        return false;
    }
    const bool in_f = ctx.f_s1().contains(q);
    switch (set) {
    case RoleSet::S: return *role == Role::S;
    case RoleSet::T: return *role == Role::T;
    case RoleSet::P0: return *role == Role::Special;
    case RoleSet::TP0: return *role != Role::S;
    case RoleSet::SnF: return *role == Role::S && !in_f;
    case RoleSet::TP0nF: return *role != Role::S && !in_f;
    }
    return false;
}

bool matches(const ContributionProfile& prof, std::span<const RoleSet> sets, const RoleContext& ctx) {
    const std::vector<BigInt> q = prof.contributed.prime_multiset();
    if (sets.size() > q.size()) {
        throw InvalidInput("more superscript sets than contributed primes");
    }
    std::vector<bool> used(q.size(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t slot) {
        if (slot == sets.size()) {
            return true;
        }
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (used[i] || !in_role_set(q[i], sets[slot], ctx)) {
                continue;
            }
            used[i] = true;
            if (assign(slot + 1)) {
                return true;
            }
            used[i] = false;
        }
        return false;
    };
    return assign(0);
}

std::string_view to_string(Refinement r) {
    switch (r) {
    case Refinement::S1_S: return "S1_S";
    case Refinement::S1_T: return "S1_T";
    case Refinement::S1_p0: return "S1_p0";
    case Refinement::S31_SS: return "S31_SS";
    case Refinement::S31_TT: return "S31_TT";
    case Refinement::S31_ST: return "S31_ST";
    case Refinement::S31_SnF_T: return "S31_SnF_T";
    case Refinement::S31_S_TnF: return "S31_S_TnF";
    case Refinement::S32_SnF: return "S32_SnF";
    case Refinement::S32_TnF: return "S32_TnF";
    }
    return "?";
}

std::set<Refinement> refine(const ContributionProfile& prof, const RoleContext& ctx) {
    for (const auto& pp : prof.contributed.factors()) {
        if (pp.prime != 3 && !ctx.role_of(pp.prime)) {
            throw InvalidInput("refine: contributed prime " + to_string(pp.prime) + " has no role");
        }
    }
    std::set<Refinement> tags;
    if (!prof.class_tag) {
        return tags;
    }
    using RS = RoleSet;
    struct Rule {
        Refinement tag;
        std::vector<RoleSet> sets;
    };
    std::vector<Rule> rules;
    switch (*prof.class_tag) {
    case ClassTag::S1:
        rules = {{Refinement::S1_S, {RS::S}}, {Refinement::S1_T, {RS::T}}, {Refinement::S1_p0, {RS::P0}}};
        break;
    case ClassTag::S31:
        rules = {{Refinement::S31_SS, {RS::S, RS::S}},
                 {Refinement::S31_TT, {RS::TP0, RS::TP0}},
                 {Refinement::S31_ST, {RS::S, RS::TP0}},
                 {Refinement::S31_SnF_T, {RS::SnF, RS::TP0}},
                 {Refinement::S31_S_TnF, {RS::S, RS::TP0nF}}};
        break;
    case ClassTag::S32:
        rules = {{Refinement::S32_SnF, {RS::SnF}}, {Refinement::S32_TnF, {RS::TP0nF}}};
        break;
    default:
        break;
    }
    for (const Rule& rule : rules) {
        if (matches(prof, rule.sets, ctx)) {
            tags.insert(rule.tag);
        }
    }
    return tags;
}

} // namespace opn
