#include "igusa/rational.hpp"

#include "igusa/errors.hpp"

namespace igusa {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

long vp(const BigInt& x, const BigInt& p) {
    if (x == 0) throw ZeroValuation();
    mpz_class reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long vp(const BigRational& x, const BigInt& p) {
    if (x == 0) throw ZeroValuation();
    long v = vp(BigInt(x.get_num()), p);
    if (x.get_den() != 1) v -= vp(BigInt(x.get_den()), p);
    return v;
}

BigInt mod_inverse(const BigInt& b, const BigInt& p) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotInvertible("no inverse of " + b.get_str() + " modulo " + p.get_str());
    if (inv <= 0) inv += p;
    return inv;
}

BigInt residue_mod(const BigRational& x, const BigInt& m) {
    BigInt num(x.get_num()), den(x.get_den());
    BigInt r;
    if (den == 1) {
        mpz_mod(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
        return r;
    }
    BigInt inv = mod_inverse(den, m);
    r = num * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt pow_p(const BigInt& p, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace igusa
