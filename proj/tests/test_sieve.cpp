#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opn/errors.hpp"
#include "opn/trinomial_sieve.hpp"

using namespace opn;

TEST_CASE("small entries") {
    const TrinomialTable t(100);
    CHECK(t.bound() == 100);
    CHECK(t.value(0) == 1);
    CHECK(t.factors(0).empty());
    CHECK(t.largest_prime(0) == 0);
    CHECK(t.value(7) == 57);
    CHECK(t.factored(7).to_string() == "3 * 19");
    CHECK(t.factored(11).to_string() == "7 * 19");
    CHECK(t.omega_total(18) == 3);  // 343 = 7^3
    CHECK(t.factored(18).to_string() == "7^3");
    CHECK_THROWS(t.value(101));
}

TEST_CASE("sieve agrees with factor() up to 10^4") {
    const TrinomialTable t(10000);
    for (std::uint64_t x = 0; x <= 10000; ++x) {
        REQUIRE(t.value(x) == trinomial(x));
        REQUIRE(t.factored(x) == factor(from_u64(trinomial(x))));
    }
}

TEST_CASE("entries near the top of a larger table") {
    const TrinomialTable t(1000000);
    for (std::uint64_t x : {120587ull, 269561ull, 324143ull, 473117ull, 833033ull, 999999ull, 1000000ull}) {
        CHECK(t.factored(x) == factor(from_u64(trinomial(x))));
    }
    CHECK(t.largest_prime(120587) == 16963);
}

TEST_CASE("bound limits") {
    CHECK_THROWS_AS(TrinomialTable(TrinomialTable::kMaxBound + 1), InvalidInput);
}

TEST_CASE("explicit fixture tables") {
    // Entry 2 claims 2^2 + 2 + 1 = 7 * 3 (deliberately false).
    const TrinomialTable t({{}, {{3, 1}}, {{3, 1}, {7, 1}}});
    CHECK(t.bound() == 2);
    CHECK(t.value(2) == 21);
    CHECK(t.largest_prime(2) == 7);
}
