#pragma once

#include <vector>

#include "igusa/polynomial.hpp"
#include "igusa/rational.hpp"

namespace igusa {

struct RootFactor {
    BigRational root;
    int multiplicity = 0;
};

/// Exact factorization f = alpha0 * prod (x - root_i)^{mult_i} with
/// pairwise distinct rational roots.
struct Factorization {
    BigRational alpha0;
    std::vector<RootFactor> roots;
};

/// Roots partitioned by the sign of their p-adic valuation.  Every
/// negative-valuation root contributes a constant factor to |f|_p^s,
/// collected into the prefactor exponent
///   k = vp(alpha0) + sum over minus_roots of mult * vp(root),
/// so Z(s, f) = t^k * Z(s, f_plus) with t = p^{-s}.
struct ValuationSplit {
    std::vector<RootFactor> plus_roots;   // vp(root) >= 0 (0 included)
    std::vector<RootFactor> minus_roots;  // vp(root) < 0
    long prefactor_exponent = 0;
};

/// Factor f completely over Q.  Throws NotSplitOverQ (with the offending
/// cofactor) when a non-constant rational-root-free cofactor remains.
Factorization factor_over_q(const IntPolynomial& f);

ValuationSplit split_by_valuation(const Factorization& fac, const BigInt& p);

/// 1 + max vp(root_i - root_j) over distinct pairs, or 1 for a single
/// root.  Throws EmptyRootList on an empty list.
unsigned long compute_lf(const std::vector<RootFactor>& plus_roots, const BigInt& p);

}  // namespace igusa
