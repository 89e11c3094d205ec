#include <doctest.h>

#include <random>

#include "igusa/errors.hpp"
#include "igusa/oracle.hpp"
#include "igusa/pipeline.hpp"
#include "igusa/series.hpp"
#include "igusa/verify.hpp"

using namespace igusa;

namespace {

PipelineResult pipe_of(const char* poly, long p) {
    return run_pipeline(parse_polynomial(poly), BigInt(p));
}

BigRational frac(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

}  // namespace

TEST_CASE("poincare_from_zeta") {
    SUBCASE("Z = 1 gives H = 1") {
        PipelineResult pipe = pipe_of("-1,2", 2);
        NormalizedFraction h = poincare_from_zeta(pipe.zeta);
        CHECK(h.num == ZPoly{1});
        CHECK(h.den == ZPoly{1});
        CHECK(h.scale_exp == 0);
    }
    SUBCASE("f = x gives the geometric series") {
        PipelineResult pipe = pipe_of("0,1", 5);
        NormalizedFraction h = poincare_from_zeta(pipe.zeta);
        CHECK(h.num == ZPoly{5});
        CHECK(h.den == ZPoly{5, -1});
        CHECK(h.scale_exp == 0);
    }
    SUBCASE("f = 2x at p = 2: H = (2+t)/(2-t)") {
        PipelineResult pipe = pipe_of("0,2", 2);
        NormalizedFraction h = poincare_from_zeta(pipe.zeta);
        CHECK(h.num == ZPoly{2, 1});
        CHECK(h.den == ZPoly{2, -1});
        CHECK(h.scale_exp == 0);
    }
}

TEST_CASE("coefficients along both routes") {
    SUBCASE("f = x: c_0 and c_2") {
        PipelineResult pipe = pipe_of("0,1", 5);
        CoefficientPrefix c = coefficients_via_tree(pipe.tree, pipe.split, pipe.prime, 2);
        CHECK(c.values[0] == frac(4, 5));
        CHECK(c.values[2] == frac(4, 125));
        // oracle: c_2 = N_2 p^-2 - N_3 p^-3
        CHECK(c.values[2] == brute_force_cm(parse_polynomial("0,1"), BigInt(5), 2));
    }
    SUBCASE("geometric expansion of (1-p^-1)/(1-p^-1 t)") {
        PipelineResult pipe = pipe_of("0,1", 5);
        CoefficientPrefix c = coefficients_via_expansion(pipe.zeta, 2);
        CHECK(c.values == std::vector<BigRational>{frac(4, 5), frac(4, 25), frac(4, 125)});
    }
    SUBCASE("Z = 1 expands to [1, 0, 0, ...]") {
        PipelineResult pipe = pipe_of("-1,2", 2);
        CoefficientPrefix c = coefficients_via_expansion(pipe.zeta, 3);
        CHECK(c.values == std::vector<BigRational>{1, 0, 0, 0});
        CoefficientPrefix ct = coefficients_via_tree(pipe.tree, pipe.split, pipe.prime, 3);
        CHECK(ct.values == c.values);
    }
}

TEST_CASE("example 3.1 coefficient at j = 8") {
    IntPolynomial f = poly_from_linear_factors(
        BigInt(1), {{892, 1, 1}, {1013, 1, 3}, {1146, 1, 1}, {1279, 1, 2}, {69, 1, 1}});
    PipelineResult pipe = run_pipeline(f, BigInt(11));
    CoefficientPrefix by_tree = coefficients_via_tree(pipe.tree, pipe.split, pipe.prime, 20);
    CoefficientPrefix by_exp = coefficients_via_expansion(pipe.zeta, 20);
    CHECK(by_tree.values == by_exp.values);
    // Four vertices land on j = 8: the internal a-branch vertex at
    // W* = 8 gives (p-2)/p^3, the c-branch W=2 progression at y = 0
    // gives (p-1)/p^4, and the two weight-1 geometric tails contribute
    // (p-1)/p^5 (W* = 7, y = 1) and (p-1)/p^9 (W* = 1, y = 7).
    BigRational expected = frac(9, 1331) + frac(10, 14641);
    expected += BigRational(BigInt(10), pow_p(BigInt(11), 5));
    expected += BigRational(BigInt(10), pow_p(BigInt(11), 9));
    expected.canonicalize();
    CHECK(by_tree.values[8] == expected);
}

TEST_CASE("counts_from_coefficients") {
    auto counts_of = [](const char* poly, long p, unsigned long u) {
        PipelineResult pipe = pipe_of(poly, p);
        CoefficientPrefix c =
            coefficients_via_tree(pipe.tree, pipe.split, pipe.prime, u == 0 ? 0 : u - 1);
        return counts_from_coefficients(c, u);
    };
    SUBCASE("f = x") {
        CountPrefix n = counts_of("0,1", 3, 3);
        CHECK(n.values == std::vector<BigInt>{1, 1, 1, 1});
    }
    SUBCASE("f = x^2 at p = 3") {
        CountPrefix n = counts_of("0,0,1", 3, 2);
        CHECK(n.values == std::vector<BigInt>{1, 1, 3});
    }
    SUBCASE("f = x^2 - 1 at p = 2, checked against the oracle first") {
        IntPolynomial f = parse_polynomial("-1,0,1");
        std::vector<BigInt> oracle;
        for (unsigned long m = 0; m <= 3; ++m) oracle.push_back(brute_force_count(f, BigInt(2), m));
        CHECK(oracle == std::vector<BigInt>{1, 1, 2, 4});
        CountPrefix n = counts_of("-1,0,1", 2, 3);
        CHECK(n.values == oracle);
        n.validate();
    }
}

TEST_CASE("keystream") {
    SUBCASE("f = x at p = 5") {
        KeystreamResult ks = keystream(parse_polynomial("0,1"), BigInt(5), 4);
        CHECK(ks.counts.values == std::vector<BigInt>{1, 1, 1, 1, 1});
    }
    SUBCASE("byte format and round trip") {
        KeystreamResult ks = keystream(parse_polynomial("-1,0,1"), BigInt(2), 3);
        CHECK(ks.counts.values == std::vector<BigInt>{1, 1, 2, 4});
        // 1 -> header 1, byte 0x01; 2 -> header 2, 0x02; 4 -> header 3, 0x04
        std::vector<std::uint8_t> expected{0, 0, 0, 1, 0x01, 0, 0, 0, 1, 0x01,
                                           0, 0, 0, 2, 0x02, 0, 0, 0, 3, 0x04};
        CHECK(ks.bytes == expected);
        CHECK(parse_keystream(ks.bytes) == ks.counts.values);
    }
    SUBCASE("deterministic across runs") {
        KeystreamResult a = keystream(parse_polynomial("-6,11,-6,1"), BigInt(5), 10);
        KeystreamResult b = keystream(parse_polynomial("-6,11,-6,1"), BigInt(5), 10);
        CHECK(a.bytes == b.bytes);
    }
    SUBCASE("zero count serializes as a bare header") {
        CountPrefix zeros{BigInt(2), {BigInt(1), BigInt(0)}};
        auto bytes = serialize_counts(zeros);
        CHECK(bytes == std::vector<std::uint8_t>{0, 0, 0, 1, 0x01, 0, 0, 0, 0});
        CHECK(parse_keystream(bytes) == zeros.values);
    }
}

TEST_CASE("series invariants on random corpora") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        auto corpus = random_corpus(rng(), 1);
        const BigInt& p = corpus[0].prime;
        PipelineResult pipe = run_pipeline(corpus[0].poly, p);

        CoefficientPrefix by_tree = coefficients_via_tree(pipe.tree, pipe.split, p, 20);
        CoefficientPrefix by_exp = coefficients_via_expansion(pipe.zeta, 20);
        CHECK(by_tree.values == by_exp.values);
        by_tree.validate();

        // series expansion of the normalized fraction is a third route
        auto series = series_expand(*pipe.zeta.normalized, p, 21);
        for (std::size_t j = 0; j <= 20; ++j) CHECK(series[j] == by_tree.values[j]);

        CountPrefix counts = counts_from_coefficients(by_tree, 12);
        counts.validate();

        // c_j = N_j p^-j - N_{j+1} p^-(j+1)
        for (unsigned long j = 0; j + 1 <= 12; ++j) {
            BigRational expect = BigRational(counts.values[j], pow_p(p, j)) -
                                 BigRational(counts.values[j + 1], pow_p(p, j + 1));
            expect.canonicalize();
            CHECK(by_tree.values[j] == expect);
        }

        // the section-1 relation, read off the power series of H
        NormalizedFraction h = poincare_from_zeta(pipe.zeta);
        auto hseries = series_expand(h, p, 14);
        for (unsigned long m = 0; m <= 12; ++m) {
            BigRational expect(counts.values[m], pow_p(p, m));
            expect.canonicalize();
            CHECK(hseries[m] == expect);
        }
    }
}

TEST_CASE("counts prefix length is enforced") {
    PipelineResult pipe = pipe_of("0,1", 3);
    CoefficientPrefix c = coefficients_via_tree(pipe.tree, pipe.split, pipe.prime, 2);
    CHECK_THROWS_AS(counts_from_coefficients(c, 5), Error);
}
