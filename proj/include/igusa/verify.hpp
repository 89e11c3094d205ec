#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igusa/oracle.hpp"
#include "igusa/pipeline.hpp"

namespace igusa {

struct CorpusElement {
    std::string name;
    IntPolynomial poly;
    BigInt prime;
};

/// Hand-picked polynomials covering single roots, repeated roots,
/// rational non-integer roots, negative-valuation roots, p dividing the
/// leading coefficient, and p = 2.
std::vector<CorpusElement> fixed_corpus();

/// Seeded random polynomials: degree <= 8, root numerators and
/// denominators bounded by 50, multiplicities <= 4, p in {2,3,5,7,13}.
std::vector<CorpusElement> random_corpus(std::uint64_t seed, std::size_t count);

/// Integer polynomial extra * prod (den x - num)^mult.
IntPolynomial poly_from_linear_factors(const BigInt& extra,
                                       const std::vector<std::tuple<long, long, int>>& factors);

struct VerifyOptions {
    unsigned long coeff_order = 20;  // two-path coefficient check up to this index
    unsigned long m_max = 20;        // oracle comparison cap on m
    BigInt budget = 1'000'000;       // oracle comparison cap on p^m
    bool inject_fault = false;       // test hook: corrupt one atom coefficient
};

struct VerifyRow {
    std::string name;
    bool paths_ok = false;      // tree path vs stationary-phase path
    bool coeffs_ok = false;     // tree coefficients vs series expansion
    bool counts_ok = false;     // N_m vs brute force
    bool structure_ok = false;  // H relation, Z(1) = 1, count bounds
    std::string detail;

    bool ok() const { return paths_ok && coeffs_ok && counts_ok && structure_ok; }
};

struct VerifyReport {
    std::vector<VerifyRow> rows;

    bool all_ok() const {
        for (const auto& r : rows)
            if (!r.ok()) return false;
        return true;
    }
};

VerifyRow verify_element(const CorpusElement& element, const VerifyOptions& options);
VerifyReport verify_corpus(const std::vector<CorpusElement>& elements,
                           const VerifyOptions& options);

/// H(1-t) = 1 - tZ by cross-multiplication.
bool poincare_relation_holds(const ZetaFunction& z, const NormalizedFraction& h);

/// num(1) = p^scale den(1): the series of Z sums to the full measure.
bool sums_to_one_at_t1(const ZetaFunction& z);

}  // namespace igusa
