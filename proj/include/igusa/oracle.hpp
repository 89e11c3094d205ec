#pragma once

#include "igusa/polynomial.hpp"
#include "igusa/rational.hpp"

namespace igusa {

/// Cap on the modulus p^m the brute-force enumeration is willing to scan.
struct OracleBudget {
    BigInt max_modulus = 10'000'000;
};

/// Number of x in [0, p^m) with f(x) = 0 modulo p^m, by direct Horner
/// evaluation over the full residue range.  Throws BudgetExceeded when
/// p^m is over budget.
BigInt brute_force_count(const IntPolynomial& f, const BigInt& p, unsigned long m,
                         const OracleBudget& budget = {});

/// Volume of {x : vp(f(x)) = m}, as N_m p^-m - N_{m+1} p^-(m+1).
BigRational brute_force_cm(const IntPolynomial& f, const BigInt& p, unsigned long m,
                           const OracleBudget& budget = {});

}  // namespace igusa
