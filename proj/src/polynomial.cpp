#include "igusa/polynomial.hpp"

#include <sstream>

#include "igusa/errors.hpp"

namespace igusa {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending_coeffs) : coeffs(std::move(ascending_coeffs)) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() < 2)
        throw ConstantPolynomial("polynomial must be non-constant");
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRational IntPolynomial::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

BigInt IntPolynomial::eval_homogeneous(const BigInt& a, const BigInt& b) const {
    return zpoly_eval_homogeneous(coeffs, a, b);
}

BigInt zpoly_eval_homogeneous(const ZPoly& f, const BigInt& a, const BigInt& b) {
    // sum of c_i a^i b^{d-i}
    BigInt acc = 0;
    BigInt apow = 1;
    std::vector<BigInt> bpow(f.size());
    bpow[f.size() - 1] = 1;
    for (std::size_t i = f.size() - 1; i > 0; --i) bpow[i - 1] = bpow[i] * b;
    for (std::size_t i = 0; i < f.size(); ++i) {
        acc += f[i] * apow * bpow[i];
        apow *= a;
    }
    return acc;
}

std::string IntPolynomial::to_string() const { return poly_to_string(coeffs, "x"); }

IntPolynomial parse_polynomial(const std::string& text) {
    std::vector<BigInt> coeffs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("empty coefficient in polynomial \"" + text + "\"");
        token = token.substr(b, e - b + 1);
        try {
            coeffs.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw Error("bad integer coefficient \"" + token + "\"");
        }
    }
    if (coeffs.empty()) throw Error("empty polynomial");
    return IntPolynomial(std::move(coeffs));
}

ZPoly zpoly_trim(ZPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zpoly_trim(std::move(r));
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zpoly_trim(std::move(r));
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zpoly_trim(std::move(r));
}

ZPoly zpoly_derivative(const ZPoly& a) {
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
    return zpoly_trim(std::move(r));
}

bool zpoly_equal(const ZPoly& a, const ZPoly& b) { return zpoly_trim(a) == zpoly_trim(b); }

BigInt zpoly_content(const ZPoly& a) {
    BigInt g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zpoly_primitive(const ZPoly& a) {
    ZPoly r = zpoly_trim(a);
    if (r.empty()) return r;
    BigInt g = zpoly_content(r);
    if (r.back() < 0) g = -g;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

namespace {

// Pseudo-remainder of a by b (b nonzero).  Each pass multiplies a by
// lc(b) and cancels the top term, so the degree strictly drops.
ZPoly zpoly_prem(ZPoly a, const ZPoly& b) {
    const BigInt& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        BigInt la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        a = zpoly_trim(std::move(a));
    }
    return a;
}

}  // namespace

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly f = zpoly_trim(a), g = zpoly_trim(b);
    if (f.empty()) return zpoly_primitive(g);
    if (g.empty()) return zpoly_primitive(f);
    BigInt cont;
    mpz_gcd(cont.get_mpz_t(), zpoly_content(f).get_mpz_t(), zpoly_content(g).get_mpz_t());
    f = zpoly_primitive(f);
    g = zpoly_primitive(g);
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        ZPoly r = zpoly_prem(f, g);
        f = std::move(g);
        g = zpoly_primitive(r);
    }
    if (f.size() <= 1) return {cont};  // only a constant in common
    // Common polynomial part times the common content.
    ZPoly out = zpoly_primitive(f);
    for (auto& c : out) c *= cont;
    return out;
}

ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly num = zpoly_trim(a);
    ZPoly den = zpoly_trim(b);
    if (den.empty()) throw Error("polynomial division by zero");
    if (num.empty()) return {};
    if (num.size() < den.size()) throw Error("inexact polynomial division");
    // Rational long division, then require integrality.
    QPoly rem = qpoly_from(num);
    BigRational lead(den.back());
    QPoly quot(num.size() - den.size() + 1, BigRational(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigRational q = rem[k + den.size() - 1] / lead;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t i = 0; i < den.size(); ++i) rem[k + i] -= q * BigRational(den[i]);
    }
    for (const auto& c : rem)
        if (c != 0) throw Error("inexact polynomial division (nonzero remainder)");
    ZPoly out;
    out.reserve(quot.size());
    for (const auto& c : quot) {
        if (c.get_den() != 1) throw Error("inexact polynomial division (fractional quotient)");
        out.emplace_back(c.get_num());
    }
    return zpoly_trim(std::move(out));
}

QPoly qpoly_from(const ZPoly& a) {
    QPoly r;
    r.reserve(a.size());
    for (const auto& c : a) r.emplace_back(c);
    return r;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

BigRational qpoly_eval(const QPoly& a, const BigRational& x) {
    BigRational acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly qpoly_deflate(const QPoly& a, const BigRational& root, BigRational* remainder) {
    QPoly q(a.size() > 1 ? a.size() - 1 : 0, BigRational(0));
    BigRational carry = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        carry = a[i] + carry * root;
        if (i > 0) q[i - 1] = carry;
    }
    if (remainder) *remainder = carry;
    return q;
}

QPoly qpoly_expand(const BigRational& alpha0,
                   const std::vector<std::pair<BigRational, int>>& roots) {
    QPoly acc{alpha0};
    for (const auto& [root, mult] : roots) {
        QPoly lin{-root, BigRational(1)};
        for (int i = 0; i < mult; ++i) acc = qpoly_mul(acc, lin);
    }
    return acc;
}

std::string poly_to_string(const ZPoly& a, const std::string& var) {
    ZPoly p = zpoly_trim(a);
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        BigInt mag = abs(p[i]);
        if (first) {
            if (p[i] < 0) out << "-";
            first = false;
        } else {
            out << (p[i] < 0 ? " - " : " + ");
        }
        bool show_coeff = (mag != 1 || i == 0);
        if (show_coeff) out << mag.get_str();
        if (i >= 1) {
            if (show_coeff) out << " ";
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

}  // namespace igusa
