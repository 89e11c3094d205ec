#include "igusa/padic.hpp"

#include "igusa/errors.hpp"

namespace igusa {

BigInt PadicDigits::prefix_value(unsigned long count) const {
    BigInt value = 0;
    BigInt scale = 1;
    for (unsigned long j = 0; j < count && j < digits.size(); ++j) {
        value += digits[j] * scale;
        scale *= prime;
    }
    return value;
}

PadicDigits padic_expand(const BigRational& gamma, const BigInt& p, unsigned long m) {
    PadicDigits out;
    out.prime = p;
    out.order = m;
    out.digits.assign(m + 1, BigInt(0));
    if (gamma == 0) return out;
    if (vp(gamma, p) < 0)
        throw NegativeValuation("cannot expand " + to_string(gamma) + " with vp < 0 at p = " + p.get_str());

    // gamma in canonical form: the denominator b is coprime to p.
    const BigInt b(gamma.get_den());
    const BigInt y = mod_inverse(b, p);
    BigInt c(gamma.get_num());
    for (unsigned long i = 0; i <= m; ++i) {
        BigInt a = y * c;
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        out.digits[i] = a;
        c -= a * b;
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    }
    return out;
}

}  // namespace igusa
