#include "opn/lemma_lab.hpp"

#include "opn/errors.hpp"
#include "opn/parallel.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace opn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct LemmaName {
    LemmaId id;
    std::string_view cli;
};

constexpr std::array<LemmaName, 15> kLemmaNames = {{
    {LemmaId::OnlyOne3, "only-one-3"},
    {LemmaId::Modularity, "modularity"},
    {LemmaId::Simplifying, "simplifying"},
    {LemmaId::Factorization1, "factorization1"},
    {LemmaId::Factorization2, "factorization2"},
    {LemmaId::Factorization3, "factorization3"},
    {LemmaId::ZelProof1, "zelproof1"},
    {LemmaId::ZelProof2, "zelproof2"},
    {LemmaId::UniqueS1S2, "unique-s1-s2"},
    {LemmaId::SemiS31, "semi-s31"},
    {LemmaId::SemiS22S31, "semi-s22-s31"},
    {LemmaId::UniqueS1S31, "unique-s1-s31"},
    {LemmaId::UniqueS21S31, "unique-s21-s31"},
    {LemmaId::SmallFactor, "small-factor"},
    {LemmaId::Census, "census"},
}};

constexpr std::array<LemmaId, 15> kAllLemmas = {
    LemmaId::OnlyOne3,     LemmaId::Modularity,  LemmaId::Simplifying, LemmaId::Factorization1,
    LemmaId::Factorization2, LemmaId::Factorization3, LemmaId::ZelProof1, LemmaId::ZelProof2,
    LemmaId::UniqueS1S2,   LemmaId::SemiS31,     LemmaId::SemiS22S31,  LemmaId::UniqueS1S31,
    LemmaId::UniqueS21S31, LemmaId::SmallFactor, LemmaId::Census,
};

// ---------------------------------------------------------------------------
// Tuple collection

constexpr std::size_t kMaxArity = 8;
using SmallTuple = std::array<u64, kMaxArity>;

SmallTuple tup(std::initializer_list<u64> values) {
    SmallTuple t{};
    std::copy(values.begin(), values.end(), t.begin());
    return t;
}

// Keeps the lexicographically smallest `cap` tuples seen plus a total count.
class WitnessSink {
public:
    explicit WitnessSink(std::size_t cap = 0) : cap_(cap) {}

    void add(const SmallTuple& t) {
        ++total_;
        if (cap_ == 0) {
            return;
        }
        if (items_.size() >= cap_ && !(t < ceiling_)) {
            return;
        }
        items_.push_back(t);
        if (items_.size() >= 4 * cap_) {
            compact();
        }
    }

    void compact() {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
        if (items_.size() > cap_) {
            items_.resize(cap_);
        }
        if (items_.size() == cap_ && cap_ > 0) {
            ceiling_ = items_.back();
        }
    }

    u64 total() const { return total_; }
    std::vector<SmallTuple>& items() { return items_; }

private:
    std::size_t cap_;
    u64 total_ = 0;
    std::vector<SmallTuple> items_;
    SmallTuple ceiling_{};
};

struct Partial {
    u64 examined = 0;
    std::vector<SmallTuple> counterexamples;
    WitnessSink witnesses;
};

Tuple to_tuple(const SmallTuple& t, std::size_t arity) {
    Tuple out;
    out.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        out.push_back(from_u64(t[i]));
    }
    return out;
}

SearchReport merge(std::vector<Partial>& parts, const SweepOptions& options, SearchReport report) {
    std::vector<SmallTuple> cex;
    std::vector<SmallTuple> wit;
    for (Partial& p : parts) {
        report.tuples_examined += p.examined;
        cex.insert(cex.end(), p.counterexamples.begin(), p.counterexamples.end());
        p.witnesses.compact();
        report.witnesses_found += p.witnesses.total();
        wit.insert(wit.end(), p.witnesses.items().begin(), p.witnesses.items().end());
    }
    std::sort(cex.begin(), cex.end());
    std::sort(wit.begin(), wit.end());
    if (wit.size() > options.witness_cap) {
        wit.resize(options.witness_cap);
    }
    for (const auto& t : cex) {
        report.counterexamples.push_back(to_tuple(t, report.fields.size()));
    }
    for (const auto& t : wit) {
        report.witnesses.push_back(to_tuple(t, report.witness_fields.size()));
    }
    return report;
}

template <class Body>
SearchReport sweep(std::string_view name, u64 bound, std::vector<std::string> fields,
                   std::vector<std::string> witness_fields, const SweepOptions& options, u64 begin, u64 end,
                   Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    auto parts = run_chunks<Partial>(begin, end, options.jobs, [&](u64 lo, u64 hi, Partial& part) {
        part.witnesses = WitnessSink(options.witness_cap);
        body(lo, hi, part);
    });
    SearchReport report;
    report.lemma_id = std::string(name);
    report.bound = bound;
    report.fields = std::move(fields);
    report.witness_fields = std::move(witness_fields);
    report = merge(parts, options, std::move(report));
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

void require_bound(u64 bound) {
    if (bound < kMinVerifierBound) {
        throw InvalidInput("verifier bound must be at least " + std::to_string(kMinVerifierBound));
    }
}

bool odd_prime(u64 x) { return x > 2 && is_prime(x); }

// ---------------------------------------------------------------------------
// Index of "large" prime divisors: q | F(x) with 3 q^2 >= F(x). Every equation
// the lemmas pair up (F(a) = q*u, F(b) = q*v with q at least the cofactor, or
// F = 3*q*u with q >= u) has its shared prime in this index.

struct Hit {
    u64 x;
    u64 cofactor;
};

class LargeFactorIndex {
public:
    explicit LargeFactorIndex(const TrinomialTable& table) {
        for (u64 x = 1; x <= table.bound(); ++x) {
            const u64 v = table.value(x);
            for (const auto& pp : table.factors(x)) {
                if (3 * static_cast<u128>(pp.prime) * pp.prime >= v) {
                    hits_[pp.prime].push_back({x, v / pp.prime});
                }
            }
        }
    }

    std::span<const Hit> operator[](u64 q) const {
        if (auto it = hits_.find(q); it != hits_.end()) {
            return it->second;
        }
        return {};
    }

private:
    std::unordered_map<u64, std::vector<Hit>> hits_;
};

// ---------------------------------------------------------------------------
// Factorization identities

SearchReport run_f1(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // a, b positive integers; F(a) = c d, F(b) = c e, c prime, c > d > e.
    // Conclusion: c = a + b + 1 and a - b = d - e.
    return sweep("factorization1", table.bound(), {"a", "b", "c", "d", "e"}, {"a", "b", "c", "d", "e"}, opt, 1,
                 table.bound() + 1, [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         const u64 fa = table.value(a);
                         for (const auto& pp : table.factors(a)) {
                             const u64 c = pp.prime;
                             if (static_cast<u128>(c) * c <= fa) {
                                 continue;
                             }
                             const u64 d = fa / c;
                             for (const Hit& h : index[c]) {
                                 const u64 b = h.x, e = h.cofactor;
                                 if (!(d > e) || b > table.bound()) {
                                     continue;
                                 }
                                 ++part.examined;
                                 const bool ok = c == a + b + 1 && static_cast<i128>(a) - static_cast<i128>(b) ==
                                                                       static_cast<i128>(d) - static_cast<i128>(e);
                                 (ok ? part.witnesses.add(tup({a, b, c, d, e}))
                                     : part.counterexamples.push_back(tup({a, b, c, d, e})));
                             }
                         }
                     }
                 });
}

SearchReport run_f2(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // a, b, d prime; F(a) = 3 d e, F(b) = d f, d > e > f.
    // Conclusion: d = a + b + 1 and a - b = 3e - f.
    return sweep("factorization2", table.bound(), {"a", "b", "d", "e", "f"}, {"a", "b", "d", "e", "f"}, opt, 1,
                 table.bound() + 1, [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         const u64 fa = table.value(a);
                         if (fa % 3 != 0 || !is_prime(a)) {
                             continue;
                         }
                         for (const auto& pp : table.factors(a)) {
                             const u64 d = pp.prime;
                             const u64 cof = fa / d;
                             if (cof % 3 != 0 || !(d > cof / 3)) {
                                 continue;
                             }
                             const u64 e = cof / 3;
                             for (const Hit& h : index[d]) {
                                 const u64 b = h.x, f = h.cofactor;
                                 if (!(e > f) || !is_prime(b)) {
                                     continue;
                                 }
                                 ++part.examined;
                                 const bool ok = d == a + b + 1 && static_cast<i128>(a) - static_cast<i128>(b) ==
                                                                       3 * static_cast<i128>(e) - static_cast<i128>(f);
                                 (ok ? part.witnesses.add(tup({a, b, d, e, f}))
                                     : part.counterexamples.push_back(tup({a, b, d, e, f})));
                             }
                         }
                     }
                 });
}

SearchReport run_f3(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // a, b, d prime; F(a) = 3 d e, F(b) = 3 d f, d >= e > f.
    // Conclusion: 3d = a + b + 1 and a - b = e - f.
    return sweep("factorization3", table.bound(), {"a", "b", "d", "e", "f"}, {"a", "b", "d", "e", "f"}, opt, 1,
                 table.bound() + 1, [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         const u64 fa = table.value(a);
                         if (fa % 3 != 0 || !is_prime(a)) {
                             continue;
                         }
                         for (const auto& pp : table.factors(a)) {
                             const u64 d = pp.prime;
                             const u64 cof = fa / d;
                             if (cof % 3 != 0 || !(d >= cof / 3)) {
                                 continue;
                             }
                             const u64 e = cof / 3;
                             for (const Hit& h : index[d]) {
                                 const u64 b = h.x;
                                 if (h.cofactor % 3 != 0 || !(e > h.cofactor / 3) || !is_prime(b)) {
                                     continue;
                                 }
                                 const u64 f = h.cofactor / 3;
                                 ++part.examined;
                                 const bool ok = 3 * d == a + b + 1 && static_cast<i128>(a) - static_cast<i128>(b) ==
                                                                           static_cast<i128>(e) - static_cast<i128>(f);
                                 (ok ? part.witnesses.add(tup({a, b, d, e, f}))
                                     : part.counterexamples.push_back(tup({a, b, d, e, f})));
                             }
                         }
                     }
                 });
}

SearchReport run_zelproof1(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // a, b positive integers; F(a) = c d, F(b) = c, c prime, c > d > 1. Conclusion: a = b^2.
    return sweep("zelproof1", table.bound(), {"a", "b", "c", "d"}, {"a", "b", "c", "d"}, opt, 1, table.bound() + 1,
                 [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         const u64 fa = table.value(a);
                         for (const auto& pp : table.factors(a)) {
                             const u64 c = pp.prime;
                             if (static_cast<u128>(c) * c <= fa) {
                                 continue;
                             }
                             const u64 d = fa / c;
                             if (d <= 1) {
                                 continue;
                             }
                             for (const Hit& h : index[c]) {
                                 if (h.cofactor != 1) {
                                     continue;
                                 }
                                 const u64 b = h.x;
                                 ++part.examined;
                                 const bool ok = static_cast<u128>(b) * b == a;
                                 (ok ? part.witnesses.add(tup({a, b, c, d}))
                                     : part.counterexamples.push_back(tup({a, b, c, d})));
                             }
                         }
                     }
                 });
}

SearchReport run_simplifying(const TrinomialTable& table, const SweepOptions& opt) {
    // a, b, c, d <= bound positive integers, b >= c, F(a) = b c d. Conclusion: b^2 d > a^2.
    const u64 bound = table.bound();
    return sweep("simplifying", bound, {"a", "b", "c", "d"}, {"a", "b", "c", "d"}, opt, 1, bound + 1,
                 [&](u64 lo, u64 hi, Partial& part) {
                     std::vector<u64> divisors;
                     for (u64 a = lo; a < hi; ++a) {
                         const u64 fa = table.value(a);
                         divisors.assign(1, 1);
                         for (const auto& pp : table.factors(a)) {
                             const std::size_t n = divisors.size();
                             u64 power = 1;
                             for (unsigned k = 0; k < pp.exponent; ++k) {
                                 power *= pp.prime;
                                 for (std::size_t i = 0; i < n; ++i) {
                                     divisors.push_back(divisors[i] * power);
                                 }
                             }
                         }
                         std::sort(divisors.begin(), divisors.end());
                         for (u64 d : divisors) {
                             if (d > bound) {
                                 break;
                             }
                             const u64 rest = fa / d;
                             for (u64 c : divisors) {
                                 if (c > bound || static_cast<u128>(c) * c > rest) {
                                     break;
                                 }
                                 if (rest % c != 0) {
                                     continue;
                                 }
                                 const u64 b = rest / c;
                                 if (b > bound) {
                                     continue;
                                 }
                                 ++part.examined;
                                 const bool ok = static_cast<u128>(b) * b * d > static_cast<u128>(a) * a;
                                 (ok ? part.witnesses.add(tup({a, b, c, d}))
                                     : part.counterexamples.push_back(tup({a, b, c, d})));
                             }
                         }
                     }
                 });
}

// ---------------------------------------------------------------------------
// Nonexistence lemmas. Witnesses record tuples meeting the premise; any tuple
// meeting the full hypothesis is a counterexample.

SearchReport run_zp2(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // a, b, c, d, f odd primes > 3, c > d > f; F(a) = c d and F(b) = c f cannot both hold.
    auto big_prime = [](u64 x) { return x > 3 && is_prime(x); };
    return sweep("zelproof2", table.bound(), {"a", "b", "c", "d", "f"}, {"a", "c", "d"}, opt, 1, table.bound() + 1,
                 [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         if (!big_prime(a)) {
                             continue;
                         }
                         const u64 fa = table.value(a);
                         for (const auto& pp : table.factors(a)) {
                             const u64 c = pp.prime;
                             if (static_cast<u128>(c) * c <= fa || !big_prime(c)) {
                                 continue;
                             }
                             const u64 d = fa / c;
                             if (!big_prime(d)) {
                                 continue;
                             }
                             part.witnesses.add(tup({a, c, d}));
                             ++part.examined;
                             for (const Hit& h : index[c]) {
                                 const u64 b = h.x, f = h.cofactor;
                                 if (!(d > f)) {
                                     continue;
                                 }
                                 ++part.examined;
                                 if (big_prime(b) && big_prime(f)) {
                                     part.counterexamples.push_back(tup({a, b, c, d, f}));
                                 }
                             }
                         }
                     }
                 });
}

SearchReport run_u_s1s2(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // a, b, c, d odd primes, c > d, d != 3, F(a) = c d, F(b) = 3c: no odd prime g with
    // F(g) = d h, d > h, h = 1 or an odd prime.
    return sweep("unique-s1-s2", table.bound(), {"a", "b", "c", "d", "g", "h"}, {"a", "b", "c", "d"}, opt, 1,
                 table.bound() + 1, [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         if (!odd_prime(a)) {
                             continue;
                         }
                         const u64 fa = table.value(a);
                         for (const auto& pp : table.factors(a)) {
                             const u64 c = pp.prime;
                             if (static_cast<u128>(c) * c <= fa || !odd_prime(c)) {
                                 continue;
                             }
                             const u64 d = fa / c;
                             if (d == 3 || !odd_prime(d)) {
                                 continue;
                             }
                             for (const Hit& hb : index[c]) {
                                 if (hb.cofactor != 3 || !odd_prime(hb.x)) {
                                     continue;
                                 }
                                 const u64 b = hb.x;
                                 part.witnesses.add(tup({a, b, c, d}));
                                 ++part.examined;
                                 for (const Hit& hg : index[d]) {
                                     const u64 g = hg.x, h = hg.cofactor;
                                     if (!(d > h)) {
                                         continue;
                                     }
                                     ++part.examined;
                                     if (odd_prime(g) && (h == 1 || odd_prime(h))) {
                                         part.counterexamples.push_back(tup({a, b, c, d, g, h}));
                                     }
                                 }
                             }
                         }
                     }
                 });
}

// a odd prime with F(a) = 3 d e, d and e odd primes, d >= e. Calls fn(d, e).
template <class Fn>
void for_each_s31_split(const TrinomialTable& table, u64 a, Fn&& fn) {
    if (!odd_prime(a)) {
        return;
    }
    const u64 fa = table.value(a);
    if (fa % 3 != 0) {
        return;
    }
    for (const auto& pp : table.factors(a)) {
        const u64 d = pp.prime;
        const u64 cof = fa / d;
        if (d == 3 || cof % 3 != 0) {
            continue;
        }
        const u64 e = cof / 3;
        if (d >= e && odd_prime(e)) {
            fn(d, e);
        }
    }
}

SearchReport run_semi_s31(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // Distinct odd primes a..g with F(a) = 3de, F(b) = 3df, F(c) = 3dg, d >= e > f > g do not exist.
    return sweep("semi-s31", table.bound(), {"a", "b", "c", "d", "e", "f", "g"}, {"a", "b", "d", "e", "f"}, opt, 1,
                 table.bound() + 1, [&](u64 lo, u64 hi, Partial& part) {
                     std::vector<std::pair<u64, u64>> partners;
                     for (u64 a = lo; a < hi; ++a) {
                         for_each_s31_split(table, a, [&](u64 d, u64 e) {
                             partners.clear();
                             for (const Hit& h : index[d]) {
                                 if (h.cofactor % 3 != 0 || !odd_prime(h.x)) {
                                     continue;
                                 }
                                 const u64 y = h.cofactor / 3;
                                 if (y < e && odd_prime(y)) {
                                     partners.emplace_back(h.x, y);
                                 }
                             }
                             for (const auto& [b, f] : partners) {
                                 std::array<u64, 5> v{a, b, d, e, f};
                                 std::sort(v.begin(), v.end());
                                 if (std::adjacent_find(v.begin(), v.end()) == v.end()) {
                                     part.witnesses.add(tup({a, b, d, e, f}));
                                     ++part.examined;
                                 }
                                 for (const auto& [c, g] : partners) {
                                     if (!(f > g)) {
                                         continue;
                                     }
                                     ++part.examined;
                                     std::array<u64, 7> all{a, b, c, d, e, f, g};
                                     std::sort(all.begin(), all.end());
                                     if (std::adjacent_find(all.begin(), all.end()) == all.end()) {
                                         part.counterexamples.push_back(tup({a, b, c, d, e, f, g}));
                                     }
                                 }
                             }
                         });
                     }
                 });
}

SearchReport run_semi_s22s31(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // Odd primes with F(a) = 3de, F(b) = 3df, F(c) = dg, d >= e, f, g and e != f do not exist.
    // Pairs are enumerated with e > f; the hypothesis is symmetric in (a, e) <-> (b, f).
    return sweep("semi-s22-s31", table.bound(), {"a", "b", "c", "d", "e", "f", "g"}, {"a", "b", "d", "e", "f"}, opt,
                 1, table.bound() + 1, [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         for_each_s31_split(table, a, [&](u64 d, u64 e) {
                             const auto hits = index[d];
                             for (const Hit& hb : hits) {
                                 if (hb.cofactor % 3 != 0 || !odd_prime(hb.x)) {
                                     continue;
                                 }
                                 const u64 b = hb.x, f = hb.cofactor / 3;
                                 if (!(e > f) || !odd_prime(f)) {
                                     continue;
                                 }
                                 part.witnesses.add(tup({a, b, d, e, f}));
                                 ++part.examined;
                                 for (const Hit& hc : hits) {
                                     const u64 c = hc.x, g = hc.cofactor;
                                     if (g > d) {
                                         continue;
                                     }
                                     ++part.examined;
                                     if (odd_prime(c) && odd_prime(g)) {
                                         part.counterexamples.push_back(tup({a, b, c, d, e, f, g}));
                                     }
                                 }
                             }
                         });
                     }
                 });
}

SearchReport run_u_s31(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt,
                       bool s21) {
    // Odd primes with F(a) = 3de, d >= e and F(b) = d (S1 form) or F(b) = 3d (S21 form) do not exist.
    const u64 wanted = s21 ? 3 : 1;
    return sweep(s21 ? "unique-s21-s31" : "unique-s1-s31", table.bound(), {"a", "b", "d", "e"}, {"a", "d", "e"},
                 opt, 1, table.bound() + 1, [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         for_each_s31_split(table, a, [&](u64 d, u64 e) {
                             part.witnesses.add(tup({a, d, e}));
                             ++part.examined;
                             for (const Hit& h : index[d]) {
                                 if (h.cofactor != wanted) {
                                     continue;
                                 }
                                 ++part.examined;
                                 if (odd_prime(h.x)) {
                                     part.counterexamples.push_back(tup({a, h.x, d, e}));
                                 }
                             }
                         });
                     }
                 });
}

SearchReport run_small(const TrinomialTable& table, const LargeFactorIndex& index, const SweepOptions& opt) {
    // Odd primes a, b, d, f, d > f > 3, F(a) = d f, F(b) = 3d: no odd primes c, g with
    // F(c) = 3 f g and f > g.
    return sweep("small-factor", table.bound(), {"a", "b", "d", "f", "c", "g"}, {"a", "b", "d", "f"}, opt, 1,
                 table.bound() + 1, [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 a = lo; a < hi; ++a) {
                         if (!odd_prime(a)) {
                             continue;
                         }
                         const u64 fa = table.value(a);
                         for (const auto& pp : table.factors(a)) {
                             const u64 d = pp.prime;
                             if (static_cast<u128>(d) * d <= fa) {
                                 continue;
                             }
                             const u64 f = fa / d;
                             if (f <= 3 || !odd_prime(f)) {
                                 continue;
                             }
                             for (const Hit& hb : index[d]) {
                                 if (hb.cofactor != 3 || !odd_prime(hb.x)) {
                                     continue;
                                 }
                                 const u64 b = hb.x;
                                 part.witnesses.add(tup({a, b, d, f}));
                                 ++part.examined;
                                 for (const Hit& hc : index[f]) {
                                     if (hc.cofactor % 3 != 0) {
                                         continue;
                                     }
                                     const u64 c = hc.x, g = hc.cofactor / 3;
                                     if (!(f > g)) {
                                         continue;
                                     }
                                     ++part.examined;
                                     if (odd_prime(c) && odd_prime(g)) {
                                         part.counterexamples.push_back(tup({a, b, d, f, c, g}));
                                     }
                                 }
                             }
                         }
                     }
                 });
}

} // namespace

// ---------------------------------------------------------------------------
// Names

std::string_view cli_name(LemmaId id) {
    for (const auto& n : kLemmaNames) {
        if (n.id == id) {
            return n.cli;
        }
    }
    return "?";
}

LemmaId parse_lemma(std::string_view name) {
    for (const auto& n : kLemmaNames) {
        if (n.cli == name) {
            return n.id;
        }
    }
    throw InvalidInput("unknown lemma '" + std::string(name) + "'");
}

std::span<const LemmaId> all_lemmas() { return kAllLemmas; }

LemmaId lemma_id(FactorizationLemma which) {
    switch (which) {
    case FactorizationLemma::F1: return LemmaId::Factorization1;
    case FactorizationLemma::F2: return LemmaId::Factorization2;
    case FactorizationLemma::F3: return LemmaId::Factorization3;
    }
    return LemmaId::Factorization1;
}

LemmaId lemma_id(NonexistenceLemma which) {
    switch (which) {
    case NonexistenceLemma::ZP2: return LemmaId::ZelProof2;
    case NonexistenceLemma::U_S1S2: return LemmaId::UniqueS1S2;
    case NonexistenceLemma::SEMI_S31: return LemmaId::SemiS31;
    case NonexistenceLemma::SEMI_S22S31: return LemmaId::SemiS22S31;
    case NonexistenceLemma::U_S1S31: return LemmaId::UniqueS1S31;
    case NonexistenceLemma::U_S21S31: return LemmaId::UniqueS21S31;
    case NonexistenceLemma::SMALL: return LemmaId::SmallFactor;
    }
    return LemmaId::ZelProof2;
}

// ---------------------------------------------------------------------------
// Public verifiers

SearchReport verify_factorization_identity(FactorizationLemma which, const TrinomialTable& table,
                                           const SweepOptions& options) {
    const LargeFactorIndex index(table);
    switch (which) {
    case FactorizationLemma::F1: return run_f1(table, index, options);
    case FactorizationLemma::F2: return run_f2(table, index, options);
    case FactorizationLemma::F3: return run_f3(table, index, options);
    }
    throw InvalidInput("unknown factorization lemma");
}

SearchReport verify_factorization_identity(FactorizationLemma which, std::uint64_t bound,
                                           const SweepOptions& options) {
    require_bound(bound);
    return verify_factorization_identity(which, TrinomialTable(bound), options);
}

SearchReport verify_nonexistence(NonexistenceLemma which, const TrinomialTable& table, const SweepOptions& options) {
    const LargeFactorIndex index(table);
    SearchReport report;
    switch (which) {
    case NonexistenceLemma::ZP2: report = run_zp2(table, index, options); break;
    case NonexistenceLemma::U_S1S2: report = run_u_s1s2(table, index, options); break;
    case NonexistenceLemma::SEMI_S31: report = run_semi_s31(table, index, options); break;
    case NonexistenceLemma::SEMI_S22S31: report = run_semi_s22s31(table, index, options); break;
    case NonexistenceLemma::U_S1S31: report = run_u_s31(table, index, options, false); break;
    case NonexistenceLemma::U_S21S31: report = run_u_s31(table, index, options, true); break;
    case NonexistenceLemma::SMALL:
        report = run_small(table, index, options);
        report.notes.push_back("c is a squared-side variable and is limited to the bound");
        break;
    }
    report.notes.push_back("witnesses satisfy the premise only; a tuple meeting the full hypothesis is a counterexample");
    return report;
}

SearchReport verify_nonexistence(NonexistenceLemma which, std::uint64_t bound, const SweepOptions& options) {
    require_bound(bound);
    return verify_nonexistence(which, TrinomialTable(bound), options);
}

SearchReport verify_zelproof1(const TrinomialTable& table, const SweepOptions& options) {
    const LargeFactorIndex index(table);
    return run_zelproof1(table, index, options);
}

SearchReport verify_zelproof1(std::uint64_t bound, const SweepOptions& options) {
    require_bound(bound);
    return verify_zelproof1(TrinomialTable(bound), options);
}

SearchReport verify_simplifying(const TrinomialTable& table, const SweepOptions& options) {
    return run_simplifying(table, options);
}

SearchReport verify_simplifying(std::uint64_t bound, const SweepOptions& options) {
    require_bound(bound);
    return verify_simplifying(TrinomialTable(bound), options);
}

SearchReport verify_only_one_3(std::uint64_t bound, const SweepOptions& options) {
    require_bound(bound);
    if (bound > UINT32_MAX) {
        throw InvalidInput("only-one-3 bound must fit in 32 bits");
    }
    const std::vector<std::uint32_t> primes = primes_up_to(static_cast<std::uint32_t>(bound));
    return sweep("only-one-3", bound, {"p", "j", "v3"}, {"p", "j", "v3"}, options, 0, primes.size(),
                 [&](u64 lo, u64 hi, Partial& part) {
                     for (u64 i = lo; i < hi; ++i) {
                         const u64 p = primes[i];
                         const u64 j = p % 3;
                         if (p == 2 || j == 0) {
                             continue;
                         }
                         u64 v = trinomial(p);
                         u64 v3 = 0;
                         while (v % 3 == 0) {
                             v /= 3;
                             ++v3;
                         }
                         ++part.examined;
                         const bool ok = (j == 1) ? v3 == 1 : v3 == 0;
                         (ok ? part.witnesses.add(tup({p, j, v3})) : part.counterexamples.push_back(tup({p, j, v3})));
                     }
                 });
}

SearchReport verify_modularity(std::uint64_t bound, const SweepOptions& options) {
    require_bound(bound);
    if (bound > UINT32_MAX) {
        throw InvalidInput("modularity bound must fit in 32 bits");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::uint32_t> primes = primes_up_to(static_cast<std::uint32_t>(bound));
    struct BigPartial {
        u64 examined = 0;
        u64 found = 0;
        std::vector<Tuple> cex;
        std::vector<Tuple> wit;
    };
    auto parts = run_chunks<BigPartial>(0, primes.size(), options.jobs, [&](u64 lo, u64 hi, BigPartial& part) {
        for (u64 i = lo; i < hi; ++i) {
            const BigInt b = from_u64(primes[i]);
            for (unsigned c : {3u, 5u, 7u}) {
                const FactoredInteger f = factor(sigma_pe(b, c - 1), options.factor);
                for (const auto& pp : f.factors()) {
                    ++part.examined;
                    const bool ok = pp.prime == c || mpz_fdiv_ui(pp.prime.get_mpz_t(), c) == 1;
                    Tuple t{b, BigInt(c), pp.prime};
                    if (!ok) {
                        part.cex.push_back(std::move(t));
                    } else {
                        ++part.found;
                        if (part.wit.size() < options.witness_cap) {
                            part.wit.push_back(std::move(t));
                        }
                    }
                }
            }
        }
    });
    SearchReport report;
    report.lemma_id = "modularity";
    report.bound = bound;
    report.fields = report.witness_fields = {"b", "c", "a"};
    for (auto& p : parts) {
        report.tuples_examined += p.examined;
        report.witnesses_found += p.found;
        report.counterexamples.insert(report.counterexamples.end(), p.cex.begin(), p.cex.end());
        report.witnesses.insert(report.witnesses.end(), p.wit.begin(), p.wit.end());
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    std::sort(report.witnesses.begin(), report.witnesses.end());
    if (report.witnesses.size() > options.witness_cap) {
        report.witnesses.resize(options.witness_cap);
    }
    if (primality_certainty(sigma_pe(from_u64(primes.back()), 6)) == PrimalityCertainty::Probable) {
        report.notes.push_back("sigma values exceed 2^64; factors above 2^64 are probable primes");
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

SearchReport verify(LemmaId id, std::uint64_t bound, const SweepOptions& options) {
    switch (id) {
    case LemmaId::OnlyOne3: return verify_only_one_3(bound, options);
    case LemmaId::Modularity: return verify_modularity(bound, options);
    case LemmaId::Simplifying: return verify_simplifying(bound, options);
    case LemmaId::Factorization1: return verify_factorization_identity(FactorizationLemma::F1, bound, options);
    case LemmaId::Factorization2: return verify_factorization_identity(FactorizationLemma::F2, bound, options);
    case LemmaId::Factorization3: return verify_factorization_identity(FactorizationLemma::F3, bound, options);
    case LemmaId::ZelProof1: return verify_zelproof1(bound, options);
    case LemmaId::ZelProof2: return verify_nonexistence(NonexistenceLemma::ZP2, bound, options);
    case LemmaId::UniqueS1S2: return verify_nonexistence(NonexistenceLemma::U_S1S2, bound, options);
    case LemmaId::SemiS31: return verify_nonexistence(NonexistenceLemma::SEMI_S31, bound, options);
    case LemmaId::SemiS22S31: return verify_nonexistence(NonexistenceLemma::SEMI_S22S31, bound, options);
    case LemmaId::UniqueS1S31: return verify_nonexistence(NonexistenceLemma::U_S1S31, bound, options);
    case LemmaId::UniqueS21S31: return verify_nonexistence(NonexistenceLemma::U_S21S31, bound, options);
    case LemmaId::SmallFactor: return verify_nonexistence(NonexistenceLemma::SMALL, bound, options);
    case LemmaId::Census: return linking_census(bound, options).report;
    }
    throw InvalidInput("unknown lemma");
}

// ---------------------------------------------------------------------------
// Witness re-validation

namespace {

BigInt tri(const BigInt& x) { return x * x + x + 1; }
bool oddp(const BigInt& x) { return x > 2 && is_prime(x); }
bool bigp(const BigInt& x) { return x > 3 && is_prime(x); }

} // namespace

bool witness_valid(LemmaId id, const Tuple& w) {
    auto arity = [&](std::size_t n) { return w.size() == n; };
    switch (id) {
    case LemmaId::OnlyOne3: {
        if (!arity(3) || !is_prime(w[0]) || w[0] % 3 != w[1]) {
            return false;
        }
        BigInt v = tri(w[0]);
        BigInt v3 = 0;
        while (v % 3 == 0) {
            v /= 3;
            ++v3;
        }
        return v3 == w[2];
    }
    case LemmaId::Modularity: {
        if (!arity(3) || !is_prime(w[0]) || !is_prime(w[1]) || !is_prime(w[2])) {
            return false;
        }
        const unsigned c = static_cast<unsigned>(w[1].get_ui());
        return sigma_pe(w[0], c - 1) % w[2] == 0;
    }
    case LemmaId::Simplifying:
        return arity(4) && w[1] >= w[2] && w[2] >= 1 && w[3] >= 1 && tri(w[0]) == w[1] * w[2] * w[3];
    case LemmaId::Factorization1:
        return arity(5) && w[0] >= 1 && w[1] >= 1 && w[4] >= 1 && is_prime(w[2]) && w[2] > w[3] && w[3] > w[4] &&
               tri(w[0]) == w[2] * w[3] && tri(w[1]) == w[2] * w[4];
    case LemmaId::Factorization2:
        return arity(5) && is_prime(w[0]) && is_prime(w[1]) && is_prime(w[2]) && w[2] > w[3] && w[3] > w[4] &&
               w[4] >= 1 && tri(w[0]) == 3 * w[2] * w[3] && tri(w[1]) == w[2] * w[4];
    case LemmaId::Factorization3:
        return arity(5) && is_prime(w[0]) && is_prime(w[1]) && is_prime(w[2]) && w[2] >= w[3] && w[3] > w[4] &&
               w[4] >= 1 && tri(w[0]) == 3 * w[2] * w[3] && tri(w[1]) == 3 * w[2] * w[4];
    case LemmaId::ZelProof1:
        return arity(4) && w[0] >= 1 && w[1] >= 1 && is_prime(w[2]) && w[2] > w[3] && w[3] > 1 &&
               tri(w[0]) == w[2] * w[3] && tri(w[1]) == w[2];
    case LemmaId::ZelProof2:
        return arity(3) && bigp(w[0]) && bigp(w[1]) && bigp(w[2]) && w[1] > w[2] && tri(w[0]) == w[1] * w[2];
    case LemmaId::UniqueS1S2:
        return arity(4) && oddp(w[0]) && oddp(w[1]) && oddp(w[2]) && oddp(w[3]) && w[2] > w[3] && w[3] != 3 &&
               tri(w[0]) == w[2] * w[3] && tri(w[1]) == 3 * w[2];
    case LemmaId::SemiS31:
    case LemmaId::SemiS22S31: {
        if (!arity(5)) {
            return false;
        }
        for (const auto& v : w) {
            if (!oddp(v)) {
                return false;
            }
        }
        const bool eqs = tri(w[0]) == 3 * w[2] * w[3] && tri(w[1]) == 3 * w[2] * w[4] && w[2] >= w[3] &&
                         w[3] > w[4];
        if (id == LemmaId::SemiS22S31) {
            return eqs;
        }
        Tuple sorted = w;
        std::sort(sorted.begin(), sorted.end());
        return eqs && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    case LemmaId::UniqueS1S31:
    case LemmaId::UniqueS21S31:
        return arity(3) && oddp(w[0]) && oddp(w[1]) && oddp(w[2]) && w[1] >= w[2] && tri(w[0]) == 3 * w[1] * w[2];
    case LemmaId::SmallFactor:
        return arity(4) && oddp(w[0]) && oddp(w[1]) && oddp(w[2]) && oddp(w[3]) && w[2] > w[3] && w[3] > 3 &&
               tri(w[0]) == w[2] * w[3] && tri(w[1]) == 3 * w[2];
    case LemmaId::Census: {
        // (q, p1, p2): a two-element fiber; both members link to q.
        if (!arity(3)) {
            return false;
        }
        for (std::size_t i = 1; i < 3; ++i) {
            if (linked_prime(w[i]).ell != w[0]) {
                return false;
            }
        }
        return w[1] != w[2];
    }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Reconstruction

std::optional<ReconstructedTriple> reconstruct_from_d(const BigInt& d) {
    if (d <= 3 || !is_prime(d)) {
        throw InvalidInput("reconstruct_from_d requires an odd prime d > 3");
    }
    const SqrtResult s = isqrt(BigInt(12 * d - 3));
    if (!s.exact) {
        return std::nullopt;
    }
    const BigInt twice_b = 5 + s.root;
    if (twice_b % 2 != 0) {
        return std::nullopt;
    }
    ReconstructedTriple t;
    t.b = twice_b / 2;
    if (!is_prime(t.b)) {
        return std::nullopt;
    }
    const BigInt fb = tri(t.b);
    if (fb % 3 != 0) {
        return std::nullopt;
    }
    t.c = fb / 3;
    if (!is_prime(t.c) || !(t.c > d)) {
        return std::nullopt;
    }
    const auto roots = quadratic_integer_roots(1, 1, BigInt(1 - t.c * d));
    if (roots.empty() || !is_prime(roots.back())) {
        return std::nullopt;
    }
    t.a = roots.back();
    return t;
}

} // namespace opn
