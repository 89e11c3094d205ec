#include "igusa/series.hpp"

#include "igusa/errors.hpp"
#include "igusa/pipeline.hpp"

namespace igusa {

void CoefficientPrefix::validate() const {
    BigRational sum = 0;
    for (const auto& v : values) {
        if (v < 0 || v > 1) throw Error("coefficient outside [0, 1]");
        BigInt den(v.get_den());
        if (den != 1) {
            unsigned long e = static_cast<unsigned long>(vp(den, prime));
            if (pow_p(prime, e) != den) throw Error("coefficient denominator is not a p-power");
        }
        sum += v;
        if (sum > 1) throw Error("coefficient partial sum exceeds 1");
    }
}

void CountPrefix::validate() const {
    if (values.empty()) return;
    if (values.front() != 1) throw Error("N_0 must equal 1");
    BigInt cap = 1;
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (values[n] < 0 || values[n] > cap) throw Error("count outside [0, p^n]");
        if (n + 1 < values.size() && values[n + 1] > prime * values[n])
            throw Error("counts violate N_{n+1} <= p N_n");
        cap *= prime;
    }
}

NormalizedFraction poincare_from_zeta(const ZetaFunction& z) {
    if (!z.normalized) throw Error("poincare_from_zeta requires a normalized zeta function");
    const NormalizedFraction& f = *z.normalized;
    const BigInt& p = z.prime;
    // H = (p^e den - t num) / (p^e den (1 - t))
    BigInt scale = pow_p(p, f.scale_exp);
    ZPoly scaled_den;
    scaled_den.reserve(f.den.size());
    for (const auto& c : f.den) scaled_den.push_back(c * scale);
    ZPoly shifted_num(1, BigInt(0));
    shifted_num.insert(shifted_num.end(), f.num.begin(), f.num.end());
    ZPoly num = zpoly_sub(scaled_den, shifted_num);
    ZPoly den = zpoly_mul(f.den, ZPoly{BigInt(1), BigInt(-1)});
    return normalize_fraction(std::move(num), std::move(den), f.scale_exp, p);
}

CoefficientPrefix coefficients_via_tree(const std::optional<WeightedTree>& tree,
                                        const ValuationSplit& split, const BigInt& p,
                                        unsigned long order) {
    CoefficientPrefix out;
    out.prime = p;
    out.values.assign(order + 1, BigRational(0));
    const unsigned long shift = static_cast<unsigned long>(split.prefactor_exponent);
    if (!tree.has_value()) {
        if (shift <= order) out.values[shift] = 1;
        return out;
    }
    for (const auto& level : tree->levels) {
        for (const auto& v : level) {
            const unsigned long base = shift + static_cast<unsigned long>(v.stalk_weight);
            if (v.level == tree->lf + 1 && v.weight >= 2) {
                for (unsigned long y = 0;; ++y) {
                    unsigned long j = base + y * static_cast<unsigned long>(v.weight);
                    if (j > order) break;
                    out.values[j] += BigRational(p - 1, pow_p(p, v.level + 1 + y));
                }
            } else if (v.weight == 1) {
                if (!is_minimal_weight_one(*tree, v)) continue;
                for (unsigned long y = 0;; ++y) {
                    unsigned long j = base + y;
                    if (j > order) break;
                    out.values[j] += BigRational(p - 1, pow_p(p, v.level + 1 + y));
                }
            } else if (v.level <= tree->lf) {
                BigInt coeff = p - v.valence;
                if (coeff != 0 && base <= order)
                    out.values[base] += BigRational(coeff, pow_p(p, v.level + 1));
            }
        }
    }
    for (auto& v : out.values) v.canonicalize();
    return out;
}

CoefficientPrefix coefficients_via_expansion(const ZetaFunction& z, unsigned long order) {
    CoefficientPrefix out;
    out.prime = z.prime;
    out.values.assign(order + 1, BigRational(0));
    for (const auto& atom : z.atoms) {
        unsigned long base = z.prefactor_exponent + atom.t_power;
        if (atom.geom_weight == 0) {
            if (base <= order)
                out.values[base] += BigRational(atom.coeff_num, pow_p(z.prime, atom.coeff_den_exp));
            continue;
        }
        for (unsigned long y = 0;; ++y) {
            unsigned long j = base + y * atom.geom_weight;
            if (j > order) break;
            out.values[j] += BigRational(atom.coeff_num, pow_p(z.prime, atom.coeff_den_exp + y));
        }
    }
    for (auto& v : out.values) v.canonicalize();
    return out;
}

CountPrefix counts_from_coefficients(const CoefficientPrefix& c, unsigned long count) {
    if (count > 0 && c.values.size() < count)
        throw Error("coefficient prefix too short for the requested counts");
    CountPrefix out;
    out.prime = c.prime;
    out.values.reserve(count + 1);
    out.values.emplace_back(1);
    BigRational partial = 0;
    for (unsigned long n = 1; n <= count; ++n) {
        partial += c.values[n - 1];
        BigRational value = BigRational(pow_p(c.prime, n)) * (BigRational(1) - partial);
        value.canonicalize();
        if (value.get_den() != 1)
            throw NonIntegralCount("p^" + std::to_string(n) + " (1 - sum c) is not an integer");
        out.values.emplace_back(value.get_num());
    }
    return out;
}

std::vector<std::uint8_t> serialize_counts(const CountPrefix& counts) {
    std::vector<std::uint8_t> out;
    for (const auto& n : counts.values) {
        if (n < 0) throw Error("cannot serialize a negative count");
        const std::size_t bits = (n == 0) ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
        if (bits > 0xffffffffUL) throw Error("count too large to serialize");
        const std::uint32_t header = static_cast<std::uint32_t>(bits);
        for (int shift = 24; shift >= 0; shift -= 8)
            out.push_back(static_cast<std::uint8_t>((header >> shift) & 0xff));
        const std::size_t nbytes = (bits + 7) / 8;
        std::vector<std::uint8_t> mag(nbytes, 0);
        if (nbytes > 0) {
            std::size_t written = 0;
            mpz_export(mag.data(), &written, 1 /*most significant first*/, 1, 1, 0, n.get_mpz_t());
            // mpz_export drops leading zero bytes; realign to the right.
            if (written < nbytes) {
                std::vector<std::uint8_t> shifted(nbytes, 0);
                std::copy(mag.begin(), mag.begin() + static_cast<long>(written),
                          shifted.begin() + static_cast<long>(nbytes - written));
                mag = std::move(shifted);
            }
        }
        out.insert(out.end(), mag.begin(), mag.end());
    }
    return out;
}

std::vector<BigInt> parse_keystream(const std::vector<std::uint8_t>& bytes) {
    std::vector<BigInt> out;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        if (pos + 4 > bytes.size()) throw Error("truncated keystream header");
        std::uint32_t bits = 0;
        for (int i = 0; i < 4; ++i) bits = (bits << 8) | bytes[pos + static_cast<std::size_t>(i)];
        pos += 4;
        const std::size_t nbytes = (bits + 7) / 8;
        if (pos + nbytes > bytes.size()) throw Error("truncated keystream element");
        BigInt value = 0;
        if (nbytes > 0) {
            mpz_import(value.get_mpz_t(), nbytes, 1, 1, 1, 0, bytes.data() + pos);
            if (value != 0 && mpz_sizeinbase(value.get_mpz_t(), 2) != bits)
                throw Error("keystream element does not match its bit-length header");
        } else if (bits != 0) {
            throw Error("keystream element does not match its bit-length header");
        }
        pos += nbytes;
        out.push_back(std::move(value));
    }
    return out;
}

KeystreamResult keystream(const IntPolynomial& f, const BigInt& p, unsigned long count) {
    PipelineResult pipe = run_pipeline(f, p);
    unsigned long order = count == 0 ? 0 : count - 1;
    CoefficientPrefix c = coefficients_via_tree(pipe.tree, pipe.split, p, order);
    KeystreamResult out{counts_from_coefficients(c, count), {}};
    out.bytes = serialize_counts(out.counts);
    return out;
}

}  // namespace igusa
