#pragma once

#include <gmpxx.h>

#include <string>

namespace igusa {

/// Exact arbitrary-precision scalars.  GMP's canonical rational form is
/// exactly the representation the library requires: numerator and
/// denominator coprime, denominator >= 1, zero stored as 0/1.
using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical rational from numerator/denominator (reduces and fixes signs).
BigRational make_rational(const BigInt& num, const BigInt& den);

/// p-adic valuation of a nonzero rational: vp(num) - vp(den).
/// Throws ZeroValuation for x = 0.
long vp(const BigRational& x, const BigInt& p);

/// Valuation of a nonzero integer.
long vp(const BigInt& x, const BigInt& p);

/// Inverse of b modulo p, in [1, p-1].  Throws NotInvertible when p | b.
BigInt mod_inverse(const BigInt& b, const BigInt& p);

/// Canonical residue of a p-integral rational modulo m (m a power of p):
/// num * den^{-1} mod m, in [0, m).
BigInt residue_mod(const BigRational& x, const BigInt& m);

/// p^e for e >= 0.
BigInt pow_p(const BigInt& p, unsigned long e);

std::string to_string(const BigInt& z);
std::string to_string(const BigRational& q);

}  // namespace igusa
