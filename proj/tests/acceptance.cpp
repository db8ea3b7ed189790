// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "opn/contribution.hpp"
#include "opn/errors.hpp"
#include "opn/lemma_lab.hpp"
#include "opn/lp.hpp"
#include "opn/polynomial.hpp"
#include "properties.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace opn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    failures += !out.pass;
    std::printf("AC%d %s: %s%s (%.2f s)\n", n, out.pass ? "PASS" : "FAIL", title, out.detail.str().c_str(),
                seconds_since(start));
    std::fflush(stdout);
}

bool has(const std::vector<Tuple>& list, std::initializer_list<long> t) {
    Tuple want;
    for (long v : t) {
        want.push_back(BigInt(v));
    }
    return std::find(list.begin(), list.end(), want) != list.end();
}

void lp_criterion(Outcome& out, Variant v, const Rational& a, const Rational& b) {
    const auto start = Clock::now();
    const Optimum o = optimize(build_system(v));
    const double dt = seconds_since(start);
    out.detail << " a = " << to_string(o.result.a) << ", b = " << to_string(o.result.b);
    out.require(o.result.a == a, "a");
    out.require(o.result.b == b, "b");
    out.require(dt < 1.0, "runtime under 1 s");
}

} // namespace

int main() {
    criterion(1, "standard LP optimum", [](Outcome& out) {
        lp_criterion(out, Variant::Standard, make_rational(99, 37), make_rational(-187, 37));
    });

    criterion(2, "no3 LP optimum", [](Outcome& out) {
        lp_criterion(out, Variant::No3, make_rational(51, 19), make_rational(-46, 19));
    });

    criterion(3, "printed table certificate, c10 = 0 accepted and c10 = 1/37 rejected", [](Outcome& out) {
        const ConstraintSystem s = build_system(Variant::Standard);
        const BoundResult r = check_certificate(s, testing::printed_table2(0));
        out.detail << " accepted with a = " << to_string(r.a) << ", b = " << to_string(r.b) << ";";
        out.require(r.a == make_rational(99, 37) && r.b == make_rational(-187, 37), "bound of adjusted table");
        std::string reason;
        try {
            check_certificate(s, testing::printed_table2(make_rational(1, 37)));
        } catch (const InvalidCertificate& e) {
            reason = e.what();
        }
        out.detail << " rejected with \"" << reason << "\"";
        out.require(reason == "negative residual on S31_ST", "rejection names S31_ST");
    });

    criterion(4, "golden sigma factorizations", [](Outcome& out) {
        const std::pair<long, const char*> golden[] = {
            {7, "3 * 19"}, {11, "7 * 19"}, {107, "7 * 13 * 127"}, {557, "7^2 * 6343"}};
        for (const auto& [p, text] : golden) {
            const std::string got = contributed_primes(BigInt(p), 2).to_string();
            out.require(got == text, "sigma(" + std::to_string(p) + "^2) = " + got);
        }
        out.detail << " 4 of 4 byte-exact";
    });

    criterion(5, "five S32 primes sharing 16963", [](Outcome& out) {
        const auto start = Clock::now();
        for (long p : {120587L, 269561L, 324143L, 473117L, 833033L}) {
            const FactoredInteger f = contributed_primes(BigInt(p), 2);
            out.require(p % 3 == 2, std::to_string(p) + " mod 3");
            out.require(f.omega_total() == 3, std::to_string(p) + " Omega");
            out.require(f.largest_prime() == 16963, std::to_string(p) + " largest prime");
        }
        const auto fibers = find_shared_largest(ClassTag::S32, 5, 1000000);
        bool found = false;
        for (const auto& fib : fibers) {
            if (fib.shared_prime == 16963) {
                found = fib.members.size() >= 5;
                out.detail << " collision search: fiber 16963 has " << fib.members.size() << " members;";
            }
        }
        out.require(found, "collision search finds the fiber");
        out.require(seconds_since(start) < 5.0, "runtime under 5 s");
    });

    criterion(6, "cyclotomic proposition", [](Outcome& out) {
        const auto start = Clock::now();
        out.require(compose(cyclotomic(3), psi(5)) == IntPoly{1, -1, 1} * IntPoly{3, 6, 7, 6, 5, 3, 1},
                    "displayed factorization");
        int checked = 0;
        for (unsigned t : {3u, 5u, 7u, 11u, 13u}) {
            for (unsigned r = 1; r <= 155; r += 2) {
                if ((r + 1) % (2 * t) == 0) {
                    ++checked;
                    out.require(check_proposition(t, r), "t=" + std::to_string(t) + " r=" + std::to_string(r));
                }
            }
        }
        out.require(!check_proposition(3, 3), "control (3, 3)");
        out.detail << " " << checked << " (t, r) pairs divide, control fails";
        out.require(seconds_since(start) < 60.0, "runtime under 60 s");
    });

    criterion(7, "every lemma verifier at 10^4 and 10^5", [](Outcome& out) {
        auto run_all = [&](std::uint64_t bound, unsigned jobs, double limit) {
            SweepOptions opt;
            opt.jobs = jobs;
            const auto start = Clock::now();
            std::uint64_t tuples = 0;
            for (LemmaId id : all_lemmas()) {
                const SearchReport r = verify(id, bound, opt);
                tuples += r.tuples_examined;
                out.require(r.passed(), std::string(cli_name(id)) + " at " + std::to_string(bound));
            }
            const double dt = seconds_since(start);
            out.detail << " bound " << bound << ": 15 lemmas, " << tuples << " tuples, 0 counterexamples in " << dt
                       << " s;";
            out.require(dt < limit, "runtime at " + std::to_string(bound));
        };
        run_all(10000, 1, 30.0);
        SweepOptions wide;
        wide.witness_cap = 100000;
        out.require(has(verify(LemmaId::Factorization1, 10000, wide).witnesses, {11, 7, 19, 7, 3}),
                    "factorization1 witness (11, 7, 19, 7, 3)");
        out.require(has(verify(LemmaId::ZelProof1, 10000, wide).witnesses, {9, 3, 13, 7}),
                    "zelproof1 witness (9, 3, 13, 7)");
        const auto t = reconstruct_from_d(BigInt(7));
        out.require(t && *t == ReconstructedTriple{BigInt(11), BigInt(7), BigInt(19)}, "reconstruct_from_d(7)");
        out.detail << " witnesses and reconstruction present;";
        run_all(100000, 4, 600.0);
    });

    criterion(8, "linking census at 10^5", [](Outcome& out) {
        const LinkingCensus c = linking_census(100000);
        std::size_t pairs = 0;
        for (const auto& f : c.fibers) {
            const auto low = std::count_if(f.members.begin(), f.members.end(), [](const FiberMember& m) {
                return m.cls == ClassTag::S1 || m.cls == ClassTag::S21;
            });
            out.require(low <= 1, "fiber " + to_string(f.shared_prime) + " has two S1/S21 members");
            out.require(f.members.size() <= 2, "fiber " + to_string(f.shared_prime) + " has more than two members");
            pairs += f.members.size() == 2;
        }
        out.require(c.report.passed(), "census report");
        out.detail << " " << c.fibers.size() << " fibers, " << pairs << " of size two";
    });

    criterion(9, "property suite", [](Outcome& out) {
        for (Variant v : {Variant::Standard, Variant::No3}) {
            const auto r = testing::certificate_soundness(v, 10000, 2024);
            out.require(r.samples == 10000 && r.violations == 0, "soundness " + std::string(to_string(v)));
            out.detail << " " << to_string(v) << ": " << r.samples << " feasible points x " << r.certificates
                       << " certificates, " << r.violations << " violations;";
        }
        const auto d = testing::simplex_vs_vertices(50, 7);
        out.require(d.problems == 50 && d.disagreements == 0, "simplex vs vertex enumeration");
        out.detail << " simplex agrees on " << d.problems - d.disagreements << " of " << d.problems << " LPs;";
        const auto bad = testing::cyclotomic_product_failures(200);
        out.require(bad.empty(), "cyclotomic product identity");
        out.detail << " cyclotomic identity holds for n <= 200";
    });

    std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
