#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igusa/factor.hpp"
#include "igusa/polynomial.hpp"
#include "igusa/tree.hpp"

namespace igusa {

/// One additive term of Z in the variable t = p^{-s}:
///
///   (coeff_num / p^{coeff_den_exp}) * t^{t_power} / (1 - p^{-1} t^{geom_weight})
///
/// geom_weight = 0 means there is no geometric denominator.  Zero terms
/// are never stored.
struct ZetaAtom {
    BigInt coeff_num;
    unsigned long coeff_den_exp = 0;
    unsigned long t_power = 0;
    unsigned long geom_weight = 0;
};

/// One reduced fraction num(t) / (p^scale_exp * den(t)) with integer
/// coefficients.  The denominator is primitive with positive constant
/// term; num and den share no polynomial factor; the leftover constant
/// is a pure p-power held in scale_exp.
struct NormalizedFraction {
    ZPoly num;
    ZPoly den;
    unsigned long scale_exp = 0;
};

/// Z(s, f) as an exact rational function of t = p^{-s}:
/// Z = t^prefactor_exponent * sum of atoms, with the same value held in
/// `normalized` once normalize() has run.
struct ZetaFunction {
    BigInt prime;
    unsigned long prefactor_exponent = 0;
    std::vector<ZetaAtom> atoms;
    std::optional<NormalizedFraction> normalized;
};

/// One atom per tree vertex:
///   - terminal level, W >= 2:   (1-p^-1) p^-l t^{W*} / (1 - p^-1 t^W)
///   - level <= lf, W != 1:      p^-1 (p - Val) p^-l t^{W*}
///   - minimal weight-1 vertex:  (1-p^-1) p^-l t^{W*} / (1 - p^-1 t)
///   - other weight-1 vertices contribute nothing.
std::vector<ZetaAtom> atoms_from_tree(const WeightedTree& tree);

/// Z from the tree path; with no plus-roots the tree is absent and
/// Z = t^k exactly.
ZetaFunction zeta_from_tree(const ValuationSplit& split, const std::optional<WeightedTree>& tree,
                            const BigInt& p);

/// Independent evaluation through the stationary phase recursion on the
/// root/multiplicity representation.  Each multiple residue class is
/// shifted and divided by p; single-root inputs close with
/// (1-p^-1) / (1 - p^-1 t^e).  The result carries t^{scalar_vp}.
ZetaFunction spf_evaluate(long scalar_vp, const std::vector<RootFactor>& roots, const BigInt& p);

/// Bring num / (p^scale * den) to the canonical reduced form.
NormalizedFraction normalize_fraction(ZPoly num, ZPoly den, unsigned long scale_exp,
                                      const BigInt& p);

/// Copy of z with the normalized field filled from the atom list.
ZetaFunction normalize(const ZetaFunction& z);

/// Semantic equality by cross-multiplication of normalized fractions.
bool zeta_equal(const ZetaFunction& a, const ZetaFunction& b);

/// First terms of the power series of num / (p^scale * den) at t = 0.
std::vector<BigRational> series_expand(const NormalizedFraction& fraction, const BigInt& p,
                                       unsigned long terms);

/// Paper-style rendering, e.g. "(1-11^-1) 11^-3 t^8 / (1 - 11^-1 t^2)".
std::string render_atom(const ZetaAtom& atom, const BigInt& p);

/// "(num) / (p^e (den))" with ascending-power polynomials.
std::string render_fraction(const NormalizedFraction& fraction, const BigInt& p);

}  // namespace igusa
