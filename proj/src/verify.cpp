#include "igusa/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "igusa/errors.hpp"
#include "igusa/series.hpp"

namespace igusa {

IntPolynomial poly_from_linear_factors(const BigInt& extra,
                                       const std::vector<std::tuple<long, long, int>>& factors) {
    ZPoly acc{extra};
    for (const auto& [num, den, mult] : factors) {
        ZPoly lin{BigInt(-num), BigInt(den)};
        for (int i = 0; i < mult; ++i) acc = zpoly_mul(acc, lin);
    }
    return IntPolynomial(std::move(acc));
}

std::vector<CorpusElement> fixed_corpus() {
    auto make = [](std::string name, long prime, long extra,
                   std::vector<std::tuple<long, long, int>> factors) {
        return CorpusElement{std::move(name),
                             poly_from_linear_factors(BigInt(extra), factors), BigInt(prime)};
    };
    std::vector<CorpusElement> out;
    out.push_back(make("x @ p=3", 3, 1, {{0, 1, 1}}));
    out.push_back(make("x @ p=2", 2, 1, {{0, 1, 1}}));
    out.push_back(make("x^2 @ p=3", 3, 1, {{0, 1, 2}}));
    out.push_back(make("x^3 @ p=2", 2, 1, {{0, 1, 3}}));
    out.push_back(make("2x-1 @ p=2", 2, 1, {{1, 2, 1}}));
    out.push_back(make("2x @ p=2", 2, 2, {{0, 1, 1}}));
    out.push_back(make("(2x-1)^2 @ p=2", 2, 1, {{1, 2, 2}}));
    out.push_back(make("x^2-1 @ p=2", 2, 1, {{1, 1, 1}, {-1, 1, 1}}));
    out.push_back(make("x^2-1 @ p=3", 3, 1, {{1, 1, 1}, {-1, 1, 1}}));
    out.push_back(make("(x-1)(x-4) @ p=3", 3, 1, {{1, 1, 1}, {4, 1, 1}}));
    out.push_back(make("x(3x-1) @ p=3", 3, 1, {{0, 1, 1}, {1, 3, 1}}));
    out.push_back(make("(x-1)^2(x+1) @ p=2", 2, 1, {{1, 1, 2}, {-1, 1, 1}}));
    out.push_back(make("(x-1)(x-2)(x-3) @ p=5", 5, 1, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}));
    out.push_back(make("(x-1)(x-10)(x-100) @ p=3", 3, 1, {{1, 1, 1}, {10, 1, 1}, {100, 1, 1}}));
    out.push_back(make("x^2(x-3)^2 @ p=3", 3, 1, {{0, 1, 2}, {3, 1, 2}}));
    out.push_back(make("(3x-1)(3x-2) @ p=3", 3, 1, {{1, 3, 1}, {2, 3, 1}}));
    out.push_back(make("(2x-1)(3x-1) @ p=5", 5, 1, {{1, 2, 1}, {1, 3, 1}}));
    out.push_back(make("(2x-1)(x-2) @ p=7", 7, 1, {{1, 2, 1}, {2, 1, 1}}));
    out.push_back(make("(x^2-1)^2 @ p=5", 5, 1, {{1, 1, 2}, {-1, 1, 2}}));
    out.push_back(make("(x-7)^3(x-11)^2 @ p=7", 7, 1, {{7, 1, 3}, {11, 1, 2}}));
    out.push_back(make("(5x-3)^4 @ p=5", 5, 1, {{3, 5, 4}}));
    out.push_back(make("12(x-1)(2x-3) @ p=2", 2, 12, {{1, 1, 1}, {3, 2, 1}}));
    out.push_back(make("(x-2)(x-127)(x-252) @ p=5", 5, 1, {{2, 1, 1}, {127, 1, 1}, {252, 1, 1}}));
    out.push_back(
        make("x(x-1)(x-2)(x-3)(x-4) @ p=5", 5, 1,
             {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 1, 1}}));
    out.push_back(make("x^2(x-1)^2(x-2)^2 @ p=3", 3, 1, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}));
    out.push_back(make("example-3.1 @ p=11", 11, 1,
                       {{892, 1, 1}, {1013, 1, 3}, {1146, 1, 1}, {1279, 1, 2}, {69, 1, 1}}));
    out.push_back(
        make("(x-1)(x-3)(x-5)(x-9) @ p=2", 2, 1, {{1, 1, 1}, {3, 1, 1}, {5, 1, 1}, {9, 1, 1}}));
    out.push_back(make("-3(x^2-1) @ p=2", 2, -3, {{1, 1, 1}, {-1, 1, 1}}));
    out.push_back(make("5(2x-1)(5x-2) @ p=5", 5, 5, {{1, 2, 1}, {2, 5, 1}}));
    return out;
}

std::vector<CorpusElement> random_corpus(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    const long primes[] = {2, 3, 5, 7, 13};
    std::vector<CorpusElement> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const long p = primes[rng() % 5];
        const std::size_t num_roots = 1 + rng() % 3;
        std::vector<std::tuple<long, long, int>> factors;
        std::vector<std::pair<long, long>> seen;
        int degree_left = 8;
        for (std::size_t r = 0; r < num_roots && degree_left > 0; ++r) {
            long num = 0, den = 1;
            for (;;) {
                num = static_cast<long>(rng() % 101) - 50;
                den = static_cast<long>(rng() % 50) + 1;
                long g = std::gcd(std::abs(num), den);
                num /= g;
                den /= g;
                bool dup = false;
                for (const auto& s : seen) dup = dup || (s.first == num && s.second == den);
                if (!dup) break;
            }
            seen.emplace_back(num, den);
            int mult = 1 + static_cast<int>(rng() % 4);
            mult = std::min(mult, degree_left);
            degree_left -= mult;
            factors.emplace_back(num, den, mult);
        }
        const long extras[] = {1, -1, 2, 6, p, -p, p * p};
        const long extra = extras[rng() % 7];
        std::ostringstream name;
        name << "random-" << i << " @ p=" << p;
        out.push_back({name.str(), poly_from_linear_factors(BigInt(extra), factors), BigInt(p)});
    }
    return out;
}

bool poincare_relation_holds(const ZetaFunction& z, const NormalizedFraction& h) {
    const NormalizedFraction& zf = *z.normalized;
    const BigInt& p = z.prime;
    // hn (1-t) p^b zd == (p^b zd - t zn) p^a hd
    ZPoly lhs = zpoly_mul(h.num, ZPoly{BigInt(1), BigInt(-1)});
    lhs = zpoly_mul(lhs, zf.den);
    BigInt pb = pow_p(p, zf.scale_exp);
    for (auto& c : lhs) c *= pb;

    ZPoly scaled_zd;
    for (const auto& c : zf.den) scaled_zd.push_back(c * pb);
    ZPoly shifted_zn(1, BigInt(0));
    shifted_zn.insert(shifted_zn.end(), zf.num.begin(), zf.num.end());
    ZPoly rhs = zpoly_sub(scaled_zd, shifted_zn);
    rhs = zpoly_mul(rhs, h.den);
    BigInt pa = pow_p(p, h.scale_exp);
    for (auto& c : rhs) c *= pa;
    return zpoly_equal(lhs, rhs);
}

bool sums_to_one_at_t1(const ZetaFunction& z) {
    const NormalizedFraction& f = *z.normalized;
    BigInt num_at_1 = 0, den_at_1 = 0;
    for (const auto& c : f.num) num_at_1 += c;
    for (const auto& c : f.den) den_at_1 += c;
    return num_at_1 == pow_p(z.prime, f.scale_exp) * den_at_1;
}

VerifyRow verify_element(const CorpusElement& element, const VerifyOptions& options) {
    VerifyRow row;
    row.name = element.name;
    std::ostringstream detail;
    try {
        const BigInt& p = element.prime;
        PipelineResult pipe = run_pipeline(element.poly, p);
        if (options.inject_fault && !pipe.zeta.atoms.empty()) {
            pipe.zeta.atoms.front().coeff_num += 1;
            pipe.zeta = normalize(pipe.zeta);
        }

        ZetaFunction spf = normalize(
            spf_evaluate(pipe.split.prefactor_exponent, pipe.split.plus_roots, p));
        row.paths_ok = zeta_equal(pipe.zeta, spf);
        if (!row.paths_ok) detail << "tree path and SPF path disagree; ";

        CoefficientPrefix by_tree =
            coefficients_via_tree(pipe.tree, pipe.split, p, options.coeff_order);
        CoefficientPrefix by_expansion = coefficients_via_expansion(pipe.zeta, options.coeff_order);
        row.coeffs_ok = by_tree.values == by_expansion.values;
        if (!row.coeffs_ok) detail << "coefficient paths disagree; ";

        unsigned long m_upper = 0;
        {
            BigInt power = p;
            while (power <= options.budget && m_upper < options.m_max) {
                ++m_upper;
                power *= p;
            }
        }
        CoefficientPrefix prefix =
            coefficients_via_tree(pipe.tree, pipe.split, p, m_upper == 0 ? 0 : m_upper - 1);
        CountPrefix counts = counts_from_coefficients(prefix, m_upper);

        OracleBudget budget{options.budget};
        row.counts_ok = true;
        BigInt prev_oracle = 1;
        for (unsigned long m = 0; m <= m_upper; ++m) {
            BigInt expected = brute_force_count(element.poly, p, m, budget);
            if (m > 0 && (expected > pow_p(p, m) || expected > p * prev_oracle))
                throw Error("oracle counts violate their own growth bounds");
            prev_oracle = expected;
            if (counts.values[m] != expected) {
                row.counts_ok = false;
                detail << "N_" << m << " = " << counts.values[m].get_str() << " but oracle says "
                       << expected.get_str() << "; ";
                break;
            }
        }

        row.structure_ok = true;
        NormalizedFraction h = poincare_from_zeta(pipe.zeta);
        if (!poincare_relation_holds(pipe.zeta, h)) {
            row.structure_ok = false;
            detail << "H(1-t) != 1 - tZ; ";
        }
        if (!sums_to_one_at_t1(pipe.zeta)) {
            row.structure_ok = false;
            detail << "Z does not sum to 1 at t=1; ";
        }
        try {
            counts.validate();
            prefix.validate();
        } catch (const Error& e) {
            row.structure_ok = false;
            detail << e.what() << "; ";
        }
    } catch (const Error& e) {
        detail << "error: " << e.what();
        row.paths_ok = row.coeffs_ok = row.counts_ok = row.structure_ok = false;
    }
    row.detail = detail.str();
    return row;
}

VerifyReport verify_corpus(const std::vector<CorpusElement>& elements,
                           const VerifyOptions& options) {
    VerifyReport report;
    report.rows.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        VerifyOptions per = options;
        per.inject_fault = options.inject_fault && i == 0;
        report.rows.push_back(verify_element(elements[i], per));
    }
    return report;
}

}  // namespace igusa
