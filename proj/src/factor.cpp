#include "igusa/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

// Candidate window for the direct rational-root scan.  Roots with
// numerator or denominator beyond the window are found by the modular
// completeness pass below.
constexpr unsigned long kScanCap = 4096;

struct WorkState {
    QPoly cofactor;  // rational coefficients, kept exact
    std::vector<RootFactor> roots;
};

// Divide out (x - root) as often as it divides, recording the multiplicity.
bool extract_root(WorkState& st, const BigRational& root) {
    int mult = 0;
    for (;;) {
        BigRational rem;
        QPoly q = qpoly_deflate(st.cofactor, root, &rem);
        if (rem != 0) break;
        st.cofactor = std::move(q);
        ++mult;
    }
    if (mult == 0) return false;
    st.roots.push_back({root, mult});
    return true;
}

// Primitive integer image of the current cofactor (denominators cleared,
// content removed, leading coefficient positive).
ZPoly integer_image(const QPoly& q) {
    BigInt lcm = 1;
    for (const auto& c : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(q.size());
    for (const auto& c : q) {
        BigRational scaled = c * BigRational(lcm);
        z.emplace_back(scaled.get_num());
    }
    return zpoly_primitive(z);
}

// Direct scan over rational-root-theorem candidates a/b with
// a | trailing, b | leading, ordered by ascending numerator, deflating as
// roots are found.
void scan_small_roots(WorkState& st) {
    for (;;) {
        while (st.cofactor.size() > 1 && st.cofactor.front() == 0) extract_root(st, BigRational(0));
        if (st.cofactor.size() <= 1) return;
        ZPoly c = integer_image(st.cofactor);
        if (c.size() <= 1) return;
        BigInt tc = abs(c.front());
        BigInt lc = abs(c.back());
        bool found = false;
        for (unsigned long a = 1; a <= kScanCap && !found; ++a) {
            if (!mpz_divisible_ui_p(tc.get_mpz_t(), a)) continue;
            for (unsigned long b = 1; b <= kScanCap && !found; ++b) {
                if (std::gcd(a, b) != 1) continue;
                if (!mpz_divisible_ui_p(lc.get_mpz_t(), b)) continue;
                for (int sign : {+1, -1}) {
                    BigInt num(static_cast<long>(a) * sign);
                    if (zpoly_eval_homogeneous(c, num, BigInt(b)) == 0) {
                        extract_root(st, make_rational(num, BigInt(b)));
                        found = true;
                        break;
                    }
                }
            }
        }
        if (!found) return;
    }
}

uint64_t mod_reduce(const BigInt& v, uint64_t q) {
    BigInt r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), q);
    return r.get_ui();
}

std::vector<uint64_t> poly_mod(const ZPoly& a, uint64_t q) {
    std::vector<uint64_t> r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(mod_reduce(c, q));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint64_t> polymod_rem(std::vector<uint64_t> a, const std::vector<uint64_t>& b, uint64_t q) {
    // b monic-izable: lc(b) invertible mod prime q
    uint64_t lb = b.back();
    uint64_t lb_inv = 1;
    {
        // Fermat inverse
        uint64_t e = q - 2, base = lb % q, acc = 1;
        while (e) {
            if (e & 1) acc = (unsigned __int128)acc * base % q;
            base = (unsigned __int128)base * base % q;
            e >>= 1;
        }
        lb_inv = acc;
    }
    while (a.size() >= b.size() && !a.empty()) {
        uint64_t factor = (unsigned __int128)a.back() * lb_inv % q;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = (unsigned __int128)factor * b[i] % q;
            a[i + shift] = (a[i + shift] + q - sub) % q;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

bool squarefree_mod(const std::vector<uint64_t>& h, uint64_t q) {
    std::vector<uint64_t> d;
    for (std::size_t i = 1; i < h.size(); ++i) d.push_back((unsigned __int128)h[i] * (i % q) % q);
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) return false;
    std::vector<uint64_t> f = h, g = d;
    while (!g.empty()) {
        auto r = polymod_rem(f, g, q);
        f = std::move(g);
        g = std::move(r);
    }
    return f.size() == 1;
}

// All integer roots of a monic squarefree h, by root finding modulo an
// auxiliary prime q followed by Newton lifting past the Cauchy bound and
// an exact verification of each candidate.
std::vector<BigInt> integer_roots_monic(const ZPoly& h) {
    ZPoly hp = zpoly_derivative(h);
    BigInt bound = 1;
    for (const auto& c : h) {
        BigInt a = abs(c);
        if (a > bound) bound = a;
    }
    bound += 1;

    BigInt q_mp = 97;
    uint64_t q = 0;
    std::vector<uint64_t> hmod;
    for (int tries = 0; tries < 25000; ++tries) {
        mpz_nextprime(q_mp.get_mpz_t(), q_mp.get_mpz_t());
        q = q_mp.get_ui();
        hmod = poly_mod(h, q);
        if (hmod.size() == h.size() && squarefree_mod(hmod, q)) break;
        hmod.clear();
    }
    if (hmod.empty()) throw Error("no auxiliary prime keeps the polynomial squarefree");

    std::vector<uint64_t> roots_mod;
    for (uint64_t z = 0; z < q; ++z) {
        uint64_t acc = 0;
        for (std::size_t i = hmod.size(); i-- > 0;) acc = ((unsigned __int128)acc * z + hmod[i]) % q;
        if (acc == 0) roots_mod.push_back(z);
    }

    auto eval_h = [&](const BigInt& x) {
        BigInt acc = 0;
        for (std::size_t i = h.size(); i-- > 0;) acc = acc * x + h[i];
        return acc;
    };
    auto eval_hp = [&](const BigInt& x) {
        BigInt acc = 0;
        for (std::size_t i = hp.size(); i-- > 0;) acc = acc * x + hp[i];
        return acc;
    };

    std::vector<BigInt> out;
    const BigInt target = 2 * bound + 1;
    for (uint64_t z0 : roots_mod) {
        BigInt modulus = q_mp;
        BigInt z = static_cast<unsigned long>(z0);
        while (modulus < target) {
            modulus *= modulus;
            BigInt deriv = eval_hp(z);
            BigInt inv;
            if (mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), modulus.get_mpz_t()) == 0)
                throw Error("derivative not invertible during root lifting");
            z = z - eval_h(z) * inv;
            mpz_mod(z.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
        }
        BigInt balanced = z;
        if (2 * balanced > modulus) balanced -= modulus;
        if (eval_h(balanced) == 0) out.push_back(balanced);
    }
    return out;
}

// Completeness pass: find every remaining rational root of the cofactor
// (or certify there is none) via its squarefree radical and the monic
// transform y = lc * x.
void find_remaining_roots(WorkState& st) {
    ZPoly c = integer_image(st.cofactor);
    if (c.size() <= 1) return;
    ZPoly g = zpoly_gcd(c, zpoly_derivative(c));
    ZPoly radical = zpoly_primitive(zpoly_div_exact(c, g));
    const BigInt lead = radical.back();
    const std::size_t n = radical.size() - 1;
    ZPoly h(radical.size());
    BigInt pw = 1;  // lead^{n-1-i}, filled from the top down
    for (std::size_t i = radical.size(); i-- > 0;) {
        if (i == n) {
            h[i] = 1;
            continue;
        }
        h[i] = radical[i] * pw;
        pw *= lead;
    }
    for (const BigInt& y : integer_roots_monic(h)) {
        extract_root(st, make_rational(y, lead));
    }
}

}  // namespace

Factorization factor_over_q(const IntPolynomial& f) {
    WorkState st;
    st.cofactor = qpoly_from(f.coeffs);

    scan_small_roots(st);
    if (st.cofactor.size() > 1) {
        find_remaining_roots(st);
        if (st.cofactor.size() > 1) {
            throw NotSplitOverQ(poly_to_string(integer_image(st.cofactor), "x"));
        }
    }

    Factorization fac;
    fac.alpha0 = BigRational(f.leading());
    std::sort(st.roots.begin(), st.roots.end(),
              [](const RootFactor& a, const RootFactor& b) { return a.root < b.root; });
    fac.roots = std::move(st.roots);

    QPoly rebuilt = qpoly_expand(fac.alpha0, [&] {
        std::vector<std::pair<BigRational, int>> rs;
        for (const auto& r : fac.roots) rs.emplace_back(r.root, r.multiplicity);
        return rs;
    }());
    if (rebuilt.size() != f.coeffs.size()) throw Error("factorization reconstruction failed");
    for (std::size_t i = 0; i < rebuilt.size(); ++i)
        if (rebuilt[i] != f.coeffs[i]) throw Error("factorization reconstruction failed");
    return fac;
}

ValuationSplit split_by_valuation(const Factorization& fac, const BigInt& p) {
    ValuationSplit out;
    long k = vp(fac.alpha0, p);
    for (const auto& r : fac.roots) {
        if (r.root == 0 || vp(r.root, p) >= 0) {
            out.plus_roots.push_back(r);
        } else {
            out.minus_roots.push_back(r);
            k += r.multiplicity * vp(r.root, p);
        }
    }
    if (k < 0) throw Error("negative prefactor exponent for an integer-coefficient polynomial");
    out.prefactor_exponent = k;
    return out;
}

unsigned long compute_lf(const std::vector<RootFactor>& plus_roots, const BigInt& p) {
    if (plus_roots.empty()) throw EmptyRootList();
    if (plus_roots.size() == 1) return 1;
    long max_vp = 0;
    for (std::size_t i = 0; i < plus_roots.size(); ++i) {
        for (std::size_t j = i + 1; j < plus_roots.size(); ++j) {
            BigRational diff = plus_roots[i].root - plus_roots[j].root;
            if (diff == 0) throw DuplicateRoot("duplicate root " + to_string(plus_roots[i].root));
            max_vp = std::max(max_vp, vp(diff, p));
        }
    }
    return static_cast<unsigned long>(1 + max_vp);
}

}  // namespace igusa
