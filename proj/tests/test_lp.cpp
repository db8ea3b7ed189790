#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opn/errors.hpp"
#include "opn/lp.hpp"
#include "opn/simplex.hpp"

#include <set>

using namespace opn;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

Certificate table2(const Rational& c10) {
    Certificate c;
    c.variant = Variant::Standard;
    const long num[] = {37, 99, 28, 28, 25, 20, 25, 25, 4, 0, 1, 1, 4, 37, 8, 5, 8, 2, 1};
    for (int i = 0; i < 19; ++i) {
        c.multipliers["5." + std::to_string(i + 1)] = Q(num[i], 37);
    }
    c.multipliers["5.10"] = c10;
    return c;
}

Certificate only(std::map<std::string, Rational> m, Variant v = Variant::Standard) { return {v, std::move(m)}; }

} // namespace

TEST_CASE("registry") {
    std::set<std::string_view> distinct(kSymbols.begin(), kSymbols.end());
    CHECK(distinct.size() == 27);
    CHECK(is_symbol("S31_SnF_T"));
    CHECK_FALSE(is_symbol("S5"));
    CHECK_THROWS_AS(LinearRelation("x", RelationKind::LE, {{"nope", Q(1)}}, Q(0)), InvalidInput);
}

TEST_CASE("system shape") {
    const ConstraintSystem s = build_system(Variant::Standard);
    CHECK(s.relations().size() == 19);
    auto eqs = [](const ConstraintSystem& sys) {
        int n = 0;
        for (const auto& r : sys.relations()) {
            n += r.kind == RelationKind::EQ;
        }
        return n;
    };
    CHECK(eqs(s) == 7);
    const ConstraintSystem n3 = build_system(Variant::No3);
    CHECK(n3.relations().size() == 20);
    CHECK(eqs(n3) == 9);
    CHECK(n3.find("5.21") != nullptr);
    CHECK(n3.find("5.2")->kind == RelationKind::EQ);
    CHECK(n3.find("5.2")->constant == -1);

    const LinearRelation* r13 = s.find("5.13");
    REQUIRE(r13 != nullptr);
    CHECK(r13->terms == std::map<std::string, Rational>{{"S1_p0", Q(1)}});
    CHECK(r13->constant == -1);

    // Repeated symbols are combined: S21 cancels, S31 keeps -1/2.
    const LinearRelation* r17 = s.find("5.17");
    CHECK(r17->coefficient("S21") == 0);
    CHECK_FALSE(r17->terms.count("S21"));
    CHECK(r17->coefficient("S31") == Q(-1, 2));
    CHECK(r17->coefficient("S22") == Q(1, 2));
    CHECK(s.find("5.15")->coefficient("S21") == -1);
    CHECK(s.find("5.99") == nullptr);
    for (const auto& r : s.relations()) {
        for (const auto& [sym, c] : r.terms) {
            CHECK(is_symbol(sym));
        }
    }
}

TEST_CASE("expand") {
    const ConstraintSystem s = build_system(Variant::Standard);
    const Expansion e1 = expand(s, only({{"5.1", Q(1)}}));
    CHECK(e1.residual ==
          std::map<std::string, Rational>{{"Omega", Q(-1)}, {"e0", Q(1)}, {"f3", Q(1)}, {"S", Q(2)}, {"g4", Q(1)}});
    CHECK(e1.constant == 0);
    const Expansion e2 = expand(s, only({{"5.1", Q(1)}, {"5.2", Q(1)}}));
    CHECK(e2.coefficient("omega") == 1);
    CHECK(e2.coefficient("T") == -1);
    CHECK(e2.coefficient("S") == 1);
    CHECK(e2.constant == -2);
    CHECK_THROWS_AS(expand(s, only({{"5.1", Q(1)}, {"5.20", Q(1)}})), UnknownRelation);
    CHECK(expand(s, table2(Q(0))).constant == Q(-187, 37));
}

TEST_CASE("check_certificate") {
    const ConstraintSystem s = build_system(Variant::Standard);
    const BoundResult trivial = check_certificate(s, only({{"5.1", Q(1)}}));
    CHECK(trivial.a == 0);
    CHECK(trivial.b == 0);

    try {
        check_certificate(s, only({{"5.1", Q(1)}, {"5.2", Q(1)}}));
        FAIL("expected rejection");
    } catch (const InvalidCertificate& e) {
        CHECK(std::string(e.what()) == "negative residual on T");
    }

    const BoundResult t2 = check_certificate(s, table2(Q(0)));
    CHECK(t2.a == Q(99, 37));
    CHECK(t2.b == Q(-187, 37));
    const std::map<std::string, Rational> expected{
        {"Omega", Q(-1)},       {"omega", Q(99, 37)},    {"S41", Q(3, 37)},       {"S42", Q(7, 37)},
        {"S31_SS", Q(2, 37)},   {"S31_TT", Q(1, 37)},    {"S31_SnF_T", Q(1, 37)}, {"S32_SnF", Q(1, 37)},
    };
    CHECK(t2.residual == expected);

    try {
        check_certificate(s, table2(Q(1, 37)));
        FAIL("expected rejection");
    } catch (const InvalidCertificate& e) {
        CHECK(std::string(e.what()) == "negative residual on S31_ST");
    }

    CHECK_THROWS_WITH_AS(check_certificate(s, only({{"5.1", Q(2)}})), "multiplier of 5.1 must be 1, got 2",
                         InvalidCertificate);
    CHECK_THROWS_WITH_AS(check_certificate(s, only({{"5.1", Q(1)}, {"5.3", Q(-1)}})),
                         "negative multiplier on inequality 5.3", InvalidCertificate);
    CHECK_THROWS_AS(check_certificate(s, only({{"5.1", Q(1)}}, Variant::No3)), InvalidCertificate);
    // Equality multipliers may be negative: the failure is a residual, not the sign.
    CHECK_THROWS_WITH_AS(check_certificate(s, only({{"5.1", Q(1)}, {"5.9", Q(-1)}})), "negative residual on S1",
                         InvalidCertificate);
}

TEST_CASE("printed no3 table is a diagnostic only") {
    const ConstraintSystem s = build_system(Variant::No3);
    Certificate c;
    c.variant = Variant::No3;
    const long num[] = {19, 51, 14, 10, 13, 8, 13, 13, 4, 1, 1, 1, 4, 21, 4, 5, 0, 2, 1};
    for (int i = 0; i < 19; ++i) {
        c.multipliers["5." + std::to_string(i + 1)] = Q(num[i], 19);
    }
    c.multipliers["5.21"] = Q(2, 19);
    const Expansion e = expand(s, c);
    CHECK(e.coefficient("omega") == Q(51, 19));
    CHECK(e.constant == Q(-50, 19));
    CHECK(e.coefficient("S31_ST") == Q(-1, 19));
}

TEST_CASE("optimize") {
    const Optimum std_opt = optimize(build_system(Variant::Standard));
    CHECK(std_opt.result.a == Q(99, 37));
    CHECK(std_opt.result.b == Q(-187, 37));
    CHECK(std_opt.phase1_a == std_opt.result.a);
    CHECK(std_opt.certificate.multipliers.size() == 19);
    CHECK(std_opt.certificate.multipliers.at("5.1") == 1);
    CHECK(std_opt.certificate.multipliers.at("5.2") == Q(99, 37));

    const Optimum no3 = optimize(build_system(Variant::No3));
    CHECK(no3.result.a == Q(51, 19));
    CHECK(no3.result.b == Q(-46, 19));
    CHECK(no3.certificate.multipliers.size() == 20);

    const ConstraintSystem base = build_system(Variant::Standard);
    const ConstraintSystem lone(Variant::Standard, {*base.find("5.1")});
    const Optimum o = optimize(lone);
    CHECK(o.result.a == 0);
    CHECK(o.result.b == 0);

    const ConstraintSystem none(Variant::Standard, {*base.find("5.2")});
    CHECK_THROWS_AS(optimize(none), InvalidInput);
}

TEST_CASE("optimize results are reproducible") {
    const Optimum a = optimize(build_system(Variant::Standard));
    const Optimum b = optimize(build_system(Variant::Standard));
    CHECK(a.certificate.multipliers == b.certificate.multipliers);
}

TEST_CASE("phase ordering against hand-built certificates") {
    // Scaling the best certificate's non-5.1 multipliers by t < 1 stays valid
    // only where it does, and never beats (a*, b*).
    const ConstraintSystem s = build_system(Variant::Standard);
    const Optimum best = optimize(s);
    for (long k = 0; k <= 20; ++k) {
        Certificate c = best.certificate;
        for (auto& [id, m] : c.multipliers) {
            if (id != "5.1") {
                m *= Q(k, 20);
            }
        }
        try {
            const BoundResult r = check_certificate(s, c);
            CHECK(r.a <= best.result.a);
            if (r.a == best.result.a) {
                CHECK(r.b <= best.result.b);
            }
        } catch (const InvalidCertificate&) {
        }
    }
    const BoundResult t2 = check_certificate(s, table2(Q(0)));
    CHECK(t2.a == best.result.a);
    CHECK(t2.b <= best.result.b);
}

TEST_CASE("simplex examples") {
    LpProblem p1{1, {Q(1)}, {{{Q(1)}, Sense::LE, Q(3)}}};
    const LpSolution s1 = simplex_maximize(p1);
    CHECK(s1.status == LpStatus::Optimal);
    CHECK(s1.value == 3);

    LpProblem p2{2, {Q(1), Q(1)}, {{{Q(1), Q(2)}, Sense::LE, Q(4)}, {{Q(3), Q(1)}, Sense::LE, Q(6)}}};
    const LpSolution s2 = simplex_maximize(p2);
    CHECK(s2.value == Q(14, 5));
    CHECK(s2.x == std::vector<Rational>{Q(8, 5), Q(6, 5)});

    LpProblem p3{1, {Q(1)}, {}};
    CHECK(simplex_maximize(p3).status == LpStatus::Unbounded);

    LpProblem p4{1, {Q(1)}, {{{Q(1)}, Sense::GE, Q(3)}, {{Q(1)}, Sense::LE, Q(2)}}};
    CHECK(simplex_maximize(p4).status == LpStatus::Infeasible);

    // Equality with a negative right-hand side and a redundant copy.
    LpProblem p5{2,
                 {Q(-1), Q(-1)},
                 {{{Q(-1), Q(-1)}, Sense::EQ, Q(-2)}, {{Q(2), Q(2)}, Sense::EQ, Q(4)}, {{Q(1), Q(0)}, Sense::GE, Q(1, 2)}}};
    const LpSolution s5 = simplex_maximize(p5);
    CHECK(s5.status == LpStatus::Optimal);
    CHECK(s5.value == -2);

    CHECK_THROWS_AS(simplex_maximize(LpProblem{2, {Q(1)}, {}}), InvalidInput);
    CHECK(simplex_maximize(LpProblem{0, {}, {}}).value == 0);
}

TEST_CASE("simplex survives a classic cycling example") {
    // Beale's example cycles under the textbook largest-coefficient rule.
    LpProblem p{4,
                {Q(3, 4), Q(-150), Q(1, 50), Q(-6)},
                {{{Q(1, 4), Q(-60), Q(-1, 25), Q(9)}, Sense::LE, Q(0)},
                 {{Q(1, 2), Q(-90), Q(-1, 50), Q(3)}, Sense::LE, Q(0)},
                 {{Q(0), Q(0), Q(1), Q(0)}, Sense::LE, Q(1)}}};
    const LpSolution s = simplex_maximize(p);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.value == Q(1, 20));
}
