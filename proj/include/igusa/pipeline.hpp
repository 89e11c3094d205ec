#pragma once

#include <optional>

#include "igusa/factor.hpp"
#include "igusa/tree.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

/// All intermediate artifacts of one zeta computation.
struct PipelineResult {
    BigInt prime;
    Factorization factorization;
    ValuationSplit split;
    unsigned long lf = 0;               // meaningful only when tree is present
    std::optional<WeightedTree> tree;   // absent when no root has vp >= 0
    ZetaFunction zeta;                  // normalized
};

/// factor -> split -> lf -> tree -> atoms -> normalized fraction.
PipelineResult run_pipeline(const IntPolynomial& f, const BigInt& p);

/// Throws NotPrime unless p is prime.
void check_prime(const BigInt& p);

}  // namespace igusa
