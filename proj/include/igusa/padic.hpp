#pragma once

#include <vector>

#include "igusa/rational.hpp"

namespace igusa {

/// Digit expansion of a p-integral rational modulo p^{order+1}.
/// digits[j] is the coefficient of p^j, always in [0, p-1].
struct PadicDigits {
    BigInt prime;
    std::vector<BigInt> digits;  // a_0 .. a_order
    unsigned long order = 0;

    /// Sum of digits[j] * p^j for j < count (count <= order+1): the residue
    /// of the expanded rational modulo p^count.
    BigInt prefix_value(unsigned long count) const;
};

/// Expansion of gamma modulo p^{m+1} via the digit recursion
/// gamma_i = ((c_{i-1} - a_{i-1} b) / p) / b,  a_i = y c_i mod p,
/// where y is the inverse of the denominator b modulo p.
///
/// gamma = 0 is accepted and expands to all-zero digits.  Throws
/// NegativeValuation when vp(gamma) < 0.
PadicDigits padic_expand(const BigRational& gamma, const BigInt& p, unsigned long m);

}  // namespace igusa
