#include "opn/errors.hpp"
#include "opn/lemma_lab.hpp"
#include "opn/parallel.hpp"

#include <algorithm>
#include <map>

namespace opn {

namespace {

using u64 = std::uint64_t;

bool linkable(ClassTag c) {
    return c == ClassTag::S1 || c == ClassTag::S21 || c == ClassTag::S22 || c == ClassTag::S31;
}

ClassTag table_class(const TrinomialTable& table, u64 p) {
    return class_from(table.omega_total(p), static_cast<unsigned>(p % 3));
}

bool pair_allowed(ClassTag x, ClassTag y) {
    if (x > y) {
        std::swap(x, y);
    }
    return y == ClassTag::S31 && (x == ClassTag::S31 || x == ClassTag::S22);
}

std::string pattern_of(const std::vector<FiberMember>& members) {
    std::vector<ClassTag> tags;
    for (const auto& m : members) {
        tags.push_back(m.cls);
    }
    std::sort(tags.begin(), tags.end());
    std::string out;
    for (ClassTag t : tags) {
        if (!out.empty()) {
            out += '+';
        }
        out += to_string(t);
    }
    return out;
}

struct Linked {
    u64 ell;
    FiberMember member;
};

} // namespace

LinkingCensus linking_census(std::uint64_t bound, const SweepOptions& options) {
    if (bound < kMinVerifierBound) {
        throw InvalidInput("census bound must be at least " + std::to_string(kMinVerifierBound));
    }
    const auto start = std::chrono::steady_clock::now();
    const TrinomialTable table(bound);

    auto parts = run_chunks<std::vector<Linked>>(5, bound + 1, options.jobs, [&](u64 lo, u64 hi, auto& out) {
        for (u64 p = lo | 1; p < hi; p += 2) {
            if (!is_prime(p)) {
                continue;
            }
            const ClassTag cls = table_class(table, p);
            if (!linkable(cls)) {
                continue;
            }
            const LinkedPrime lp = linked_prime(profile_from(from_u64(p), table.factored(p)));
            out.push_back({to_u64(lp.ell), {from_u64(p), cls, lp.exceptional}});
        }
    });

    std::map<u64, std::vector<FiberMember>> fibers;
    u64 examined = 0;
    for (auto& part : parts) {
        for (auto& l : part) {
            fibers[l.ell].push_back(std::move(l.member));
            ++examined;
        }
    }

    LinkingCensus census;
    SearchReport& report = census.report;
    report.lemma_id = "census";
    report.bound = bound;
    report.fields = {"q", "p1", "p2"};
    report.witness_fields = {"q", "p1", "p2"};
    report.tuples_examined = examined;
    for (auto& [ell, members] : fibers) {
        std::sort(members.begin(), members.end(), [](const auto& x, const auto& y) { return x.p < y.p; });
        const BigInt q = from_u64(ell);
        const bool too_big = members.size() > 2;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t k = i + 1; k < members.size(); ++k) {
                Tuple t{q, members[i].p, members[k].p};
                if (too_big || !pair_allowed(members[i].cls, members[k].cls)) {
                    report.counterexamples.push_back(std::move(t));
                } else {
                    ++report.witnesses_found;
                    if (report.witnesses.size() < options.witness_cap) {
                        report.witnesses.push_back(std::move(t));
                    }
                }
            }
        }
        census.fibers.push_back({q, pattern_of(members), std::move(members)});
    }
    report.notes.push_back("witnesses are two-element fibers");
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return census;
}

std::vector<FiberReport> find_shared_largest(ClassTag cls, std::uint64_t min_share, std::uint64_t bound,
                                             const SweepOptions& options) {
    if (bound < kMinVerifierBound) {
        throw InvalidInput("bound must be at least " + std::to_string(kMinVerifierBound));
    }
    if (min_share < 1) {
        throw InvalidInput("min-share must be at least 1");
    }
    const TrinomialTable table(bound);
    using Pair = std::pair<u64, u64>;
    auto parts = run_chunks<std::vector<Pair>>(5, bound + 1, options.jobs, [&](u64 lo, u64 hi, auto& out) {
        for (u64 p = lo | 1; p < hi; p += 2) {
            if (is_prime(p) && table_class(table, p) == cls) {
                out.emplace_back(table.largest_prime(p), p);
            }
        }
    });
    std::map<u64, std::vector<u64>> groups;
    for (auto& part : parts) {
        for (auto [q, p] : part) {
            groups[q].push_back(p);
        }
    }
    std::vector<FiberReport> out;
    const std::string pattern = std::string(to_string(cls)) + ":largest";
    for (auto& [q, ps] : groups) {
        if (ps.size() < min_share) {
            continue;
        }
        std::sort(ps.begin(), ps.end());
        FiberReport f{from_u64(q), pattern, {}};
        for (u64 p : ps) {
            f.members.push_back({from_u64(p), cls, false});
        }
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace opn
