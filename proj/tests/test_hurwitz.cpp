#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "phw/hurwitz.hpp"
#include "phw/partition.hpp"

using namespace phw;

namespace {

Rational canon(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("frozen Hurwitz values") {
    CHECK(hurwitz_number({3, 2}) == 3);
    CHECK(hurwitz_number({3, 4}) == 27);
    CHECK(hurwitz_number({4, 2}) == 6);
    CHECK(hurwitz_number({4, 4}) == 120);
    for (std::uint32_t ell = 0; ell <= 10; ell += 2)
        CHECK(hurwitz_number({2, ell}) == 1);
    // ℓ = 0 counts the empty tuple only
    for (std::uint32_t n = 1; n <= 10; ++n)
        CHECK(hurwitz_number({n, 0}) == 1);
    // odd ℓ: no odd product is the identity
    for (std::uint32_t n = 1; n <= 12; ++n)
        for (std::uint32_t ell = 1; ell <= 9; ell += 2)
            CHECK(hurwitz_number({n, ell}) == 0);
    // S_1 has no transpositions at all
    for (std::uint32_t ell = 1; ell <= 6; ++ell)
        CHECK(hurwitz_number({1, ell}) == 0);
    CHECK_THROWS_AS(hurwitz_number({0, 2}), std::invalid_argument);
}

TEST_CASE("Frobenius sum equals the group-walk oracle") {
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (std::uint32_t ell = 0; ell <= 8; ++ell)
            CHECK(hurwitz_number({n, ell}) == hurwitz_number_bruteforce({n, ell}));
    for (std::uint32_t n = 6; n <= 7; ++n)
        for (std::uint32_t ell = 0; ell <= 4; ++ell)
            CHECK(hurwitz_number({n, ell}) == hurwitz_number_bruteforce({n, ell}));
    CHECK_THROWS_AS(hurwitz_number_bruteforce({8, 2}), std::invalid_argument);
}

TEST_CASE("threaded Frobenius reduction matches single-threaded") {
    HurwitzOptions four;
    four.threads = 4;
    for (std::uint32_t n : {9u, 14u, 20u})
        for (std::uint32_t ell : {0u, 2u, 6u})
            CHECK(hurwitz_number({n, ell}, four) == hurwitz_number({n, ell}));
}

TEST_CASE("restricted partition functions") {
    for (std::uint32_t n : {4u, 8u, 12u})
        for (std::uint32_t ell : {0u, 2u, 4u}) {
            const HurwitzQuery q{n, ell};
            const Rational whole = restricted_Z(q, RestrictedPredicate::all());
            CHECK(whole == Rational(hurwitz_number(q)));

            Rational by_first_part(0);
            for (std::uint32_t L = 1; L <= n; ++L)
                by_first_part += restricted_Z(q, RestrictedPredicate::first_part_equals(L));
            CHECK(by_first_part == whole);

            CHECK(restricted_Z(q, RestrictedPredicate::first_part_in(1, n)) == whole);
            const Rational lowhalf = restricted_Z(q, RestrictedPredicate::first_part_in(1, n / 2));
            const Rational highhalf =
                restricted_Z(q, RestrictedPredicate::first_part_in(n / 2 + 1, n));
            CHECK(lowhalf + highhalf == whole);

            // conjugation symmetry of the even-ℓ weight
            const Rational pos = restricted_Z(
                q, RestrictedPredicate::custom([](const Partition& p) { return content_sum(p) > 0; }));
            const Rational neg = restricted_Z(
                q, RestrictedPredicate::custom([](const Partition& p) { return content_sum(p) < 0; }));
            CHECK(pos == neg);
        }
}

TEST_CASE("return probability") {
    CHECK(return_probability({3, 2}) == canon(1, 3));
    CHECK(return_probability({2, 4}) == canon(1, 1));  // only one transposition to walk on
    CHECK(return_probability({5, 0}) == canon(1, 1));  // empty walk is already home
    CHECK(return_probability({4, 3}) == canon(0, 1));  // odd walks never return
    CHECK_THROWS_AS(return_probability({1, 2}), std::invalid_argument);
    // n = 3, ℓ = 4: 27/3⁴
    CHECK(return_probability({3, 4}) == canon(27, 81));
}

TEST_CASE("asymptotic log estimate formula") {
    const HurwitzQuery q{16, 48};
    const double expect = 2.0 * 48 * std::log(48.0 / std::log(16.0)) + (std::log(2.0) - 2.0) * 48;
    CHECK(asymptotic_log_estimate(q) == doctest::Approx(expect).epsilon(1e-14));
    CHECK_THROWS_AS(asymptotic_log_estimate({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_log_estimate({16, 1}), std::invalid_argument);
}

TEST_CASE("enumeration budget") {
    CHECK(enumeration_budget() == 2'000'000ull);
    // the rule is p(n) ≤ budget, nothing else
    for (unsigned n = 60; n <= 70; ++n) {
        if (partition_count(n) <= 2'000'000ull)
            CHECK_NOTHROW(check_enumeration_budget(n, 0));
        else
            CHECK_THROWS_AS(check_enumeration_budget(n, 0), BudgetError);
    }
    CHECK_THROWS_AS(check_enumeration_budget(500, 0), BudgetError); // p(n) past 64 bits
    CHECK_NOTHROW(check_enumeration_budget(65, 3'000'000ull));
    try {
        check_enumeration_budget(70, 0);
        CHECK(false);
    } catch (const BudgetError& e) {
        CHECK(e.n == 70);
        CHECK(e.budget == 2'000'000ull);
    }

    // environment override
    REQUIRE(setenv("PHW_BUDGET", "100", 1) == 0);
    CHECK(enumeration_budget() == 100);
    CHECK_NOTHROW(check_enumeration_budget(10, 0));            // p(10) = 42
    CHECK_THROWS_AS(check_enumeration_budget(30, 0), BudgetError); // p(30) = 5604
    HurwitzOptions explicit_budget;
    explicit_budget.budget = 10'000;
    CHECK_NOTHROW(hurwitz_number({30, 2}, explicit_budget));
    CHECK_THROWS_AS(hurwitz_number({30, 2}), BudgetError);
    REQUIRE(unsetenv("PHW_BUDGET") == 0);
    CHECK(enumeration_budget() == 2'000'000ull);
}

TEST_CASE("Hurwitz numbers stay exact and integral at moderate size") {
    // the Frobenius divisibility check would throw on any exactness regression
    for (std::uint32_t n : {9u, 12u})
        for (std::uint32_t ell = 0; ell <= 40; ell += 8)
            CHECK(hurwitz_number({n, ell}) >= 0);
    // growth sanity: H is nondecreasing in even ℓ once positive contents exist
    BigCount prev = hurwitz_number({6, 2});
    for (std::uint32_t ell = 4; ell <= 16; ell += 2) {
        const BigCount cur = hurwitz_number({6, ell});
        CHECK(cur > prev);
        prev = cur;
    }
}
