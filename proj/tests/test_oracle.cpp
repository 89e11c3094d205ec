#include <doctest.h>

#include "igusa/errors.hpp"
#include "igusa/oracle.hpp"
#include "igusa/polynomial.hpp"

using namespace igusa;

TEST_CASE("brute_force_count") {
    CHECK(brute_force_count(parse_polynomial("0,1"), BigInt(3), 2) == 1);
    CHECK(brute_force_count(parse_polynomial("0,0,1"), BigInt(3), 2) == 3);
    CHECK(brute_force_count(parse_polynomial("123,456,789"), BigInt(7), 0) == 1);
    // x^2 - 1 mod 2: only x = 1
    CHECK(brute_force_count(parse_polynomial("-1,0,1"), BigInt(2), 1) == 1);
    // 2x mod 2^m: x = 0 and x = 2^{m-1}
    CHECK(brute_force_count(parse_polynomial("0,2"), BigInt(2), 5) == 2);
}

TEST_CASE("brute_force_cm") {
    CHECK(brute_force_cm(parse_polynomial("0,1"), BigInt(7), 0) ==
          make_rational(BigInt(6), BigInt(7)));
    CHECK(brute_force_cm(parse_polynomial("-1,2"), BigInt(2), 0) == 1);
    CHECK(brute_force_cm(parse_polynomial("0,0,1"), BigInt(3), 1) == 0);
}

TEST_CASE("budget is enforced") {
    OracleBudget tight{BigInt(100)};
    CHECK(brute_force_count(parse_polynomial("0,1"), BigInt(3), 4, tight) == 1);
    CHECK_THROWS_AS(brute_force_count(parse_polynomial("0,1"), BigInt(3), 5, tight),
                    BudgetExceeded);
    CHECK_THROWS_AS(brute_force_cm(parse_polynomial("0,1"), BigInt(3), 4, tight), BudgetExceeded);
}

TEST_CASE("oracle growth bounds hold on a few shapes") {
    for (const char* poly : {"0,1", "0,0,1", "-1,0,1", "0,2", "-1,2", "2,-3,1"}) {
        for (long p : {2L, 3L, 5L}) {
            BigInt prev = 1, cap = 1;
            for (unsigned long m = 0; m <= 6; ++m) {
                BigInt n = brute_force_count(parse_polynomial(poly), BigInt(p), m);
                CHECK(n >= 0);
                CHECK(n <= cap);
                if (m > 0) CHECK(n <= p * prev);
                prev = n;
                cap *= p;
            }
        }
    }
}
