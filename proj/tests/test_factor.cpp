#include <doctest.h>

#include <random>

#include "igusa/errors.hpp"
#include "igusa/factor.hpp"
#include "igusa/verify.hpp"

using namespace igusa;

namespace {

const RootFactor* find_root(const Factorization& fac, const BigRational& r) {
    for (const auto& rf : fac.roots)
        if (rf.root == r) return &rf;
    return nullptr;
}

}  // namespace

TEST_CASE("factor_over_q on simple shapes") {
    SUBCASE("x^2 - 1") {
        Factorization fac = factor_over_q(parse_polynomial("-1,0,1"));
        CHECK(fac.alpha0 == 1);
        REQUIRE(fac.roots.size() == 2);
        CHECK(find_root(fac, BigRational(1))->multiplicity == 1);
        CHECK(find_root(fac, BigRational(-1))->multiplicity == 1);
    }
    SUBCASE("4x^2 - 4x + 1") {
        Factorization fac = factor_over_q(parse_polynomial("1,-4,4"));
        CHECK(fac.alpha0 == 4);
        REQUIRE(fac.roots.size() == 1);
        CHECK(fac.roots[0].root == make_rational(BigInt(1), BigInt(2)));
        CHECK(fac.roots[0].multiplicity == 2);
    }
    SUBCASE("x^2 + 1 is not split over Q") {
        CHECK_THROWS_AS(factor_over_q(parse_polynomial("1,0,1")), NotSplitOverQ);
    }
    SUBCASE("x^2 - 2 is not split over Q") {
        CHECK_THROWS_AS(factor_over_q(parse_polynomial("-2,0,1")), NotSplitOverQ);
    }
    SUBCASE("(x^2+1)(x-1) reports the quadratic cofactor") {
        try {
            factor_over_q(parse_polynomial("-1,1,-1,1"));
            FAIL("expected NotSplitOverQ");
        } catch (const NotSplitOverQ& e) {
            CHECK(e.cofactor == "1 + x^2");
        }
    }
    SUBCASE("constant input is rejected") {
        CHECK_THROWS_AS(parse_polynomial("5"), ConstantPolynomial);
    }
}

TEST_CASE("factor_over_q finds roots outside the scan window") {
    // root 2^15 = 32768 has numerator far beyond the direct scan
    ZPoly big{BigInt(-32768), BigInt(1)};
    IntPolynomial f(zpoly_mul(big, ZPoly{BigInt(1), BigInt(1)}));
    Factorization fac = factor_over_q(f);
    REQUIRE(fac.roots.size() == 2);
    CHECK(find_root(fac, BigRational(32768)) != nullptr);
    CHECK(find_root(fac, BigRational(-1)) != nullptr);
}

TEST_CASE("split_by_valuation") {
    SUBCASE("2x at p=2") {
        ValuationSplit s = split_by_valuation(factor_over_q(parse_polynomial("0,2")), BigInt(2));
        CHECK(s.plus_roots.size() == 1);
        CHECK(s.minus_roots.empty());
        CHECK(s.prefactor_exponent == 1);
    }
    SUBCASE("2x-1 at p=2") {
        ValuationSplit s = split_by_valuation(factor_over_q(parse_polynomial("-1,2")), BigInt(2));
        CHECK(s.plus_roots.empty());
        CHECK(s.minus_roots.size() == 1);
        CHECK(s.prefactor_exponent == 0);
    }
    SUBCASE("x-3 at p=5") {
        ValuationSplit s = split_by_valuation(factor_over_q(parse_polynomial("-3,1")), BigInt(5));
        CHECK(s.plus_roots.size() == 1);
        CHECK(s.prefactor_exponent == 0);
    }
}

TEST_CASE("compute_lf") {
    SUBCASE("single root") {
        CHECK(compute_lf({{make_rational(BigInt(1), BigInt(2)), 2}}, BigInt(3)) == 1);
    }
    SUBCASE("unit difference") {
        CHECK(compute_lf({{BigRational(0), 1}, {BigRational(1), 1}}, BigInt(3)) == 1);
    }
    SUBCASE("difference exactly p") {
        CHECK(compute_lf({{BigRational(1), 1}, {BigRational(6), 1}}, BigInt(5)) == 2);
    }
    SUBCASE("empty list") {
        CHECK_THROWS_AS(compute_lf({}, BigInt(3)), EmptyRootList);
    }
    SUBCASE("strictly exceeds every pairwise valuation") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 50; ++i) {
            auto corpus = random_corpus(rng(), 1);
            Factorization fac = factor_over_q(corpus[0].poly);
            ValuationSplit s = split_by_valuation(fac, corpus[0].prime);
            if (s.plus_roots.size() < 2) continue;
            unsigned long lf = compute_lf(s.plus_roots, corpus[0].prime);
            for (std::size_t a = 0; a < s.plus_roots.size(); ++a)
                for (std::size_t b = a + 1; b < s.plus_roots.size(); ++b)
                    CHECK(static_cast<long>(lf) >
                          vp(s.plus_roots[a].root - s.plus_roots[b].root, corpus[0].prime));
        }
    }
}

TEST_CASE("factorization reconstructs the input exactly") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        auto corpus = random_corpus(rng(), 1);
        // factor_over_q verifies reconstruction internally and throws on
        // any mismatch; reaching here means the identity held.
        Factorization fac = factor_over_q(corpus[0].poly);
        long total = 0;
        for (const auto& r : fac.roots) total += r.multiplicity;
        CHECK(static_cast<std::size_t>(total) == corpus[0].poly.degree());
        for (const auto& prime : {BigInt(2), BigInt(3), BigInt(13)}) {
            ValuationSplit s = split_by_valuation(fac, prime);
            CHECK(s.prefactor_exponent >= 0);
            CHECK(s.plus_roots.size() + s.minus_roots.size() == fac.roots.size());
        }
    }
}
