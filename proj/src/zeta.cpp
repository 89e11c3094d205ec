#include "igusa/zeta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

ZetaAtom unit_atom() { return ZetaAtom{BigInt(1), 0, 0, 0}; }

void spf_recurse(const std::vector<RootFactor>& roots, const BigInt& p, unsigned long depth,
                 unsigned long depth_limit, unsigned long den_acc, unsigned long t_acc,
                 std::vector<ZetaAtom>& atoms) {
    if (depth > depth_limit)
        throw RecursionBudgetExceeded("stationary phase recursion exceeded depth " +
                                      std::to_string(depth_limit));
    if (roots.size() == 1) {
        // integral of |x - root|^{e s} over Z_p
        atoms.push_back({p - 1, den_acc + 1, t_acc,
                         static_cast<unsigned long>(roots.front().multiplicity)});
        return;
    }

    std::map<BigInt, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < roots.size(); ++i)
        classes[residue_mod(roots[i].root, p)].push_back(i);

    BigInt nonroots = p - static_cast<long>(classes.size());
    if (nonroots != 0) atoms.push_back({nonroots, den_acc + 1, t_acc, 0});

    long simple = 0;
    for (const auto& [residue, members] : classes)
        if (members.size() == 1 && roots[members.front()].multiplicity == 1) ++simple;
    if (simple > 0) atoms.push_back({simple * (p - 1), den_acc + 2, t_acc + 1, 1});

    for (const auto& [residue, members] : classes) {
        long total = 0;
        for (std::size_t i : members) total += roots[i].multiplicity;
        if (total < 2) continue;
        std::vector<RootFactor> shifted;
        shifted.reserve(members.size());
        for (std::size_t i : members) {
            BigRational moved = (roots[i].root - BigRational(residue)) / BigRational(p);
            shifted.push_back({moved, roots[i].multiplicity});
        }
        spf_recurse(shifted, p, depth + 1, depth_limit, den_acc + 1,
                    t_acc + static_cast<unsigned long>(total), atoms);
    }
}

}  // namespace

std::vector<ZetaAtom> atoms_from_tree(const WeightedTree& tree) {
    const BigInt& p = tree.prime;
    std::vector<ZetaAtom> atoms;
    for (const auto& level : tree.levels) {
        for (const auto& v : level) {
            if (v.level == tree.lf + 1 && v.weight >= 2) {
                atoms.push_back({p - 1, v.level + 1, static_cast<unsigned long>(v.stalk_weight),
                                 static_cast<unsigned long>(v.weight)});
            } else if (v.weight == 1) {
                if (is_minimal_weight_one(tree, v))
                    atoms.push_back(
                        {p - 1, v.level + 1, static_cast<unsigned long>(v.stalk_weight), 1});
            } else if (v.level <= tree.lf) {
                BigInt coeff = p - v.valence;
                if (coeff != 0)
                    atoms.push_back(
                        {coeff, v.level + 1, static_cast<unsigned long>(v.stalk_weight), 0});
            }
        }
    }
    return atoms;
}

ZetaFunction zeta_from_tree(const ValuationSplit& split, const std::optional<WeightedTree>& tree,
                            const BigInt& p) {
    ZetaFunction z;
    z.prime = p;
    z.prefactor_exponent = static_cast<unsigned long>(split.prefactor_exponent);
    if (tree.has_value()) {
        z.atoms = atoms_from_tree(*tree);
    } else {
        z.atoms = {unit_atom()};  // the integrand has constant absolute value
    }
    return z;
}

ZetaFunction spf_evaluate(long scalar_vp, const std::vector<RootFactor>& roots, const BigInt& p) {
    if (scalar_vp < 0) throw Error("negative scalar valuation");
    ZetaFunction z;
    z.prime = p;
    z.prefactor_exponent = static_cast<unsigned long>(scalar_vp);
    if (roots.empty()) {
        z.atoms = {unit_atom()};
        return z;
    }
    unsigned long depth_limit = compute_lf(roots, p) + 1;
    spf_recurse(roots, p, 0, depth_limit, 0, 0, z.atoms);
    return z;
}

NormalizedFraction normalize_fraction(ZPoly num, ZPoly den, unsigned long scale_exp,
                                      const BigInt& p) {
    num = zpoly_trim(std::move(num));
    den = zpoly_trim(std::move(den));
    if (den.empty()) throw Error("zero denominator");
    if (num.empty()) throw Error("zero numerator in zeta normalization");

    ZPoly common = zpoly_gcd(num, den);
    if (common.size() > 1) {
        num = zpoly_div_exact(num, common);
        den = zpoly_div_exact(den, common);
    }

    BigInt num_content = zpoly_content(num);
    for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), num_content.get_mpz_t());

    BigInt den_content = zpoly_content(den);
    if (den.front() < 0) den_content = -den_content;
    for (auto& c : den) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), den_content.get_mpz_t());
    if (den.front() <= 0) throw Error("denominator constant term must be positive");

    BigRational ratio(num_content, den_content * pow_p(p, scale_exp));
    ratio.canonicalize();
    BigInt residual_den(ratio.get_den());
    unsigned long scale = 0;
    if (residual_den != 1) {
        scale = static_cast<unsigned long>(vp(residual_den, p));
        if (pow_p(p, scale) != residual_den)
            throw Error("denominator scale is not a power of p");
    }
    NormalizedFraction out;
    out.den = std::move(den);
    out.scale_exp = scale;
    out.num.reserve(num.size());
    BigInt unum(ratio.get_num());
    for (const auto& c : num) out.num.push_back(c * unum);
    return out;
}

ZetaFunction normalize(const ZetaFunction& z) {
    const BigInt& p = z.prime;
    if (z.atoms.empty()) throw Error("no atoms to normalize");

    std::set<unsigned long> weight_set;
    for (const auto& a : z.atoms)
        if (a.geom_weight > 0) weight_set.insert(a.geom_weight);

    unsigned long emax = 0;
    for (const auto& a : z.atoms) {
        unsigned long need = a.geom_weight > 0 ? (a.coeff_den_exp > 0 ? a.coeff_den_exp - 1 : 0)
                                               : a.coeff_den_exp;
        emax = std::max(emax, need);
    }

    // denominator prod over distinct weights of (p - t^w)
    std::map<unsigned long, ZPoly> factor_poly;
    ZPoly full_den{BigInt(1)};
    for (unsigned long w : weight_set) {
        ZPoly f(w + 1, BigInt(0));
        f[0] = p;
        f[w] = -1;
        factor_poly[w] = f;
        full_den = zpoly_mul(full_den, f);
    }

    ZPoly total;
    for (const auto& a : z.atoms) {
        // atom = num p^{-e} t^a           when w = 0
        //      = num p^{1-e} t^a / (p - t^w)  when w > 0
        long power = static_cast<long>(emax) - static_cast<long>(a.coeff_den_exp) +
                     (a.geom_weight > 0 ? 1 : 0);
        ZPoly term{a.coeff_num * pow_p(p, static_cast<unsigned long>(power))};
        for (unsigned long w : weight_set)
            if (w != a.geom_weight) term = zpoly_mul(term, factor_poly[w]);
        ZPoly shifted(a.t_power, BigInt(0));
        shifted.insert(shifted.end(), term.begin(), term.end());
        total = zpoly_add(total, shifted);
    }

    ZPoly num(z.prefactor_exponent, BigInt(0));
    num.insert(num.end(), total.begin(), total.end());

    ZetaFunction out = z;
    out.normalized = normalize_fraction(std::move(num), std::move(full_den), emax, p);
    return out;
}

bool zeta_equal(const ZetaFunction& a, const ZetaFunction& b) {
    if (a.prime != b.prime) throw Error("zeta_equal requires a common prime");
    NormalizedFraction fa = a.normalized ? *a.normalized : *normalize(a).normalized;
    NormalizedFraction fb = b.normalized ? *b.normalized : *normalize(b).normalized;
    ZPoly lhs = zpoly_mul(fa.num, fb.den);
    ZPoly rhs = zpoly_mul(fb.num, fa.den);
    for (auto& c : lhs) c *= pow_p(a.prime, fb.scale_exp);
    for (auto& c : rhs) c *= pow_p(a.prime, fa.scale_exp);
    return zpoly_equal(lhs, rhs);
}

std::vector<BigRational> series_expand(const NormalizedFraction& fraction, const BigInt& p,
                                       unsigned long terms) {
    const ZPoly& num = fraction.num;
    const ZPoly& den = fraction.den;
    BigRational scale(pow_p(p, fraction.scale_exp));
    std::vector<BigRational> out(terms, BigRational(0));
    BigRational lead = BigRational(den.front()) * scale;
    for (unsigned long k = 0; k < terms; ++k) {
        BigRational acc = k < num.size() ? BigRational(num[k]) : BigRational(0);
        for (std::size_t j = 1; j < den.size() && j <= k; ++j)
            acc -= BigRational(den[j]) * scale * out[k - j];
        out[k] = acc / lead;
    }
    return out;
}

namespace {

std::string power_of_t(unsigned long e) {
    if (e == 0) return "";
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
}

}  // namespace

std::string render_atom(const ZetaAtom& atom, const BigInt& p) {
    std::ostringstream out;
    const std::string ps = p.get_str();
    if (atom.coeff_num == p - 1 && atom.coeff_den_exp >= 1) {
        out << "(1-" << ps << "^-1)";
        if (atom.coeff_den_exp > 1) out << " " << ps << "^-" << (atom.coeff_den_exp - 1);
    } else {
        out << atom.coeff_num.get_str();
        if (atom.coeff_den_exp > 0) out << " " << ps << "^-" << atom.coeff_den_exp;
    }
    std::string tpart = power_of_t(atom.t_power);
    if (!tpart.empty()) out << " " << tpart;
    if (atom.geom_weight > 0)
        out << " / (1 - " << ps << "^-1 " << power_of_t(atom.geom_weight) << ")";
    return out.str();
}

std::string render_fraction(const NormalizedFraction& fraction, const BigInt& p) {
    std::ostringstream out;
    out << "(" << poly_to_string(fraction.num) << ") / ";
    bool unit_den = fraction.den.size() == 1 && fraction.den.front() == 1;
    if (fraction.scale_exp == 0) {
        out << "(" << poly_to_string(fraction.den) << ")";
    } else if (unit_den) {
        out << p.get_str() << "^" << fraction.scale_exp;
    } else {
        out << "(" << p.get_str() << "^" << fraction.scale_exp << " ("
            << poly_to_string(fraction.den) << "))";
    }
    return out.str();
}

}  // namespace igusa
