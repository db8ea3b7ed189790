#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opn/contribution.hpp"
#include "opn/errors.hpp"
#include "opn/polynomial.hpp"

using namespace opn;

TEST_CASE("basic arithmetic") {
    const IntPoly x = IntPoly::x();
    const IntPoly f = x * x - x + IntPoly{1};
    CHECK(f == IntPoly{1, -1, 1});
    CHECK(f.to_string() == "x^2 - x + 1");
    CHECK(f.degree() == 2);
    CHECK(IntPoly{}.degree() == -1);
    CHECK((f - f).is_zero());
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK((f * IntPoly{}).is_zero());
    CHECK(f.eval(BigInt(7)) == 43);
    CHECK((IntPoly{1, 1} * IntPoly{-1, 1}) == IntPoly{-1, 0, 1});
    CHECK(IntPoly{-3, 0, -1}.to_string() == "-x^2 - 3");
}

TEST_CASE("psi") {
    CHECK(psi(5) == IntPoly{1, 1, 1, 1, 1});
    CHECK(psi(1) == IntPoly{1});
    CHECK_THROWS_AS(psi(0), InvalidInput);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    // First cyclotomic polynomial with a coefficient of absolute value 2.
    const IntPoly& p105 = cyclotomic(105);
    CHECK(p105.degree() == 48);
    CHECK(p105.coefficient(7) == -2);
    CHECK(p105.coefficient(41) == -2);
    CHECK_THROWS_AS(cyclotomic(0), InvalidInput);
}

TEST_CASE("compose") {
    CHECK(compose(IntPoly{1, 1, 1}, IntPoly{0, 2}) == IntPoly{1, 2, 4});
    CHECK(compose(IntPoly{5}, IntPoly{1, 2, 3}) == IntPoly{5});
}

TEST_CASE("exact division") {
    const IntPoly a{1, -1, 1}, b{3, 6, 7, 6, 5, 3, 1};
    const auto r = exact_divides(a, a * b);
    REQUIRE(r.divides);
    CHECK(*r.quotient == b);
    CHECK_FALSE(exact_divides(IntPoly{1, 1}, IntPoly{1, 0, 1}).divides);
    CHECK_FALSE(exact_divides(IntPoly{1, 1}, IntPoly{1, 0, 1}).quotient.has_value());
    // 2x + 2 divides x + 1 over Q only.
    CHECK_FALSE(exact_divides(IntPoly{2, 2}, IntPoly{1, 1}).divides);
    CHECK(exact_divides(IntPoly{2, 2}, IntPoly{2, 4, 2}).divides);
    CHECK_THROWS_AS(exact_divides(IntPoly{}, IntPoly{1}), InvalidInput);
    CHECK(exact_divides(IntPoly{1, 1}, IntPoly{}).divides);
}

TEST_CASE("exact division round trip") {
    for (unsigned i = 1; i <= 30; ++i) {
        for (unsigned j = 1; j <= 30; j += 7) {
            const IntPoly a = cyclotomic(i) + IntPoly::monomial(1, static_cast<long>(j));
            const IntPoly b = psi(j) - IntPoly{static_cast<long>(i)};
            const auto r = exact_divides(a, a * b);
            REQUIRE(r.divides);
            CHECK(*r.quotient == b);
        }
    }
}

TEST_CASE("sigma of a prime power is the product of cyclotomic values") {
    for (long p : {2L, 3L, 5L, 7L, 11L, 101L, 557L}) {
        for (unsigned e = 1; e <= 12; ++e) {
            BigInt product = 1;
            for (unsigned d = 2; d <= e + 1; ++d) {
                if ((e + 1) % d == 0) {
                    product *= cyclotomic(d).eval(BigInt(p));
                }
            }
            CHECK(product == sigma_pe(BigInt(p), e));
        }
    }
}

TEST_CASE("the displayed factorization of Phi_3(Psi_5)") {
    const IntPoly composed = compose(cyclotomic(3), psi(5));
    CHECK(composed == IntPoly{1, -1, 1} * IntPoly{3, 6, 7, 6, 5, 3, 1});
    CHECK(exact_divides(cyclotomic(6), composed).divides);
}

TEST_CASE("proposition") {
    CHECK(check_proposition(3, 5));
    CHECK_FALSE(check_proposition(3, 3));
    const PropositionCheck c = check_proposition_report(5, 9);
    CHECK(c.hypothesis_holds);
    CHECK(c.divides);
    CHECK(c.composed_degree == 32);
    CHECK_FALSE(check_proposition_report(3, 3).hypothesis_holds);
    CHECK_THROWS_AS(check_proposition(9, 5), InvalidInput);
    CHECK_THROWS_AS(check_proposition(2, 5), InvalidInput);
    CHECK_THROWS_AS(check_proposition(3, 4), InvalidInput);
    CHECK_THROWS_AS(check_proposition(13, 9999), BudgetExceeded);
}

TEST_CASE("proposition sweep") {
    for (unsigned t : {3u, 5u, 7u, 11u, 13u}) {
        for (unsigned r = 1; r <= 155; r += 2) {
            const bool hyp = (r + 1) % (2 * t) == 0;
            if (hyp) {
                CHECK_MESSAGE(check_proposition(t, r), "t=", t, " r=", r);
            }
        }
    }
}

TEST_CASE("divisibility holds exactly on the hypothesis for small t") {
    // Phi_2t | Phi_t(Psi_r) iff Psi_r(zeta_2t) is a primitive t-th root of unity,
    // which for odd r happens exactly when r = -1 (mod 2t).
    for (unsigned t : {3u, 5u, 7u}) {
        for (unsigned r = 1; r <= 61; r += 2) {
            CHECK_MESSAGE(check_proposition(t, r) == ((r + 1) % (2 * t) == 0), "t=", t, " r=", r);
        }
    }
}
