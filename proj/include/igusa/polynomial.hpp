#pragma once

#include <string>
#include <vector>

#include "igusa/rational.hpp"

namespace igusa {

/// Dense univariate polynomial over Z, coefficients ascending by degree.
/// Non-constant by construction: the parser and constructors reject
/// constant and zero polynomials.
struct IntPolynomial {
    std::vector<BigInt> coeffs;  // a_0 .. a_d, a_d != 0

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending_coeffs);

    std::size_t degree() const { return coeffs.size() - 1; }
    const BigInt& leading() const { return coeffs.back(); }
    const BigInt& trailing() const { return coeffs.front(); }

    BigInt eval(const BigInt& x) const;
    BigRational eval(const BigRational& x) const;

    /// Homogeneous evaluation b^d * f(a/b); zero iff a/b is a root.
    BigInt eval_homogeneous(const BigInt& a, const BigInt& b) const;

    /// Human-readable form, ascending powers ("-1 + 2 x^2").
    std::string to_string() const;
};

/// Parse "c0,c1,...,cd" (ascending coefficients) into a polynomial.
IntPolynomial parse_polynomial(const std::string& text);

// --- exact helpers on raw coefficient vectors (ascending order) ---

using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<BigRational>;

ZPoly zpoly_trim(ZPoly a);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_derivative(const ZPoly& a);
bool zpoly_equal(const ZPoly& a, const ZPoly& b);
BigInt zpoly_content(const ZPoly& a);
ZPoly zpoly_primitive(const ZPoly& a);

/// Gcd over Z[t] via the primitive pseudo-remainder sequence, returned
/// primitive with positive leading coefficient (contents handled too).
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

/// b^d * f(a/b) for f given by ascending coefficients.
BigInt zpoly_eval_homogeneous(const ZPoly& f, const BigInt& a, const BigInt& b);

/// Exact division a / b; throws Error when the division is not exact.
ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b);

QPoly qpoly_from(const ZPoly& a);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
BigRational qpoly_eval(const QPoly& a, const BigRational& x);

/// Divide by (x - root); remainder returned through *remainder.
QPoly qpoly_deflate(const QPoly& a, const BigRational& root, BigRational* remainder);

/// Expand alpha0 * prod (x - root_i)^{mult_i} exactly.
QPoly qpoly_expand(const BigRational& alpha0,
                   const std::vector<std::pair<BigRational, int>>& roots);

/// Render ascending-coefficient polynomial in t ("5 - t + 2 t^3").
std::string poly_to_string(const ZPoly& a, const std::string& var = "t");

}  // namespace igusa
