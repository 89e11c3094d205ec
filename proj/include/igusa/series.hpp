#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "igusa/zeta.hpp"

namespace igusa {

/// Volumes c_0 .. c_J of the level sets {x in Z_p : vp(f(x)) = j}; each
/// value is a rational with a p-power denominator in [0, 1].
struct CoefficientPrefix {
    BigInt prime;
    std::vector<BigRational> values;

    /// Throws Error when a value leaves [0, 1], a partial sum exceeds 1,
    /// or a denominator is not a p-power.
    void validate() const;
};

/// Solution counts N_0 .. N_u of f(x) = 0 modulo p^n.
struct CountPrefix {
    BigInt prime;
    std::vector<BigInt> values;

    /// Throws Error unless N_0 = 1, 0 <= N_n <= p^n and N_{n+1} <= p N_n.
    void validate() const;
};

/// Poincare series H(t, f) = (1 - t Z) / (1 - t), reduced.
NormalizedFraction poincare_from_zeta(const ZetaFunction& z);

/// c_j by summing the per-vertex arithmetic progressions of the tree;
/// the prefactor t^k shifts every index by k.  An absent tree (no roots
/// with vp >= 0) gives c_k = 1 and zero elsewhere.
CoefficientPrefix coefficients_via_tree(const std::optional<WeightedTree>& tree,
                                        const ValuationSplit& split, const BigInt& p,
                                        unsigned long order);

/// c_j by geometric expansion of each atom; the independent cross-check
/// of coefficients_via_tree.
CoefficientPrefix coefficients_via_expansion(const ZetaFunction& z, unsigned long order);

/// N_0 = 1 and N_n = p^n - sum_{j<=n} p^n c_{j-1} for n <= count.
/// Throws NonIntegralCount when a p^n c_{j-1} fails integrality.
CountPrefix counts_from_coefficients(const CoefficientPrefix& c, unsigned long count);

/// Per element: a 4-byte big-endian bit-length header followed by the
/// minimal big-endian magnitude bytes.
std::vector<std::uint8_t> serialize_counts(const CountPrefix& counts);
std::vector<BigInt> parse_keystream(const std::vector<std::uint8_t>& bytes);

struct KeystreamResult {
    CountPrefix counts;
    std::vector<std::uint8_t> bytes;
};

/// Full pipeline: factor, split, tree, zeta, coefficients, counts,
/// serialized stream.
KeystreamResult keystream(const IntPolynomial& f, const BigInt& p, unsigned long count);

}  // namespace igusa
