#include "igusa/pipeline.hpp"

#include "igusa/errors.hpp"

namespace igusa {

PipelineResult run_pipeline(const IntPolynomial& f, const BigInt& p) {
    PipelineResult out;
    out.prime = p;
    out.factorization = factor_over_q(f);
    out.split = split_by_valuation(out.factorization, p);
    if (!out.split.plus_roots.empty()) {
        out.lf = compute_lf(out.split.plus_roots, p);
        out.tree = build_tree(out.split.plus_roots, p, out.lf);
    }
    out.zeta = normalize(zeta_from_tree(out.split, out.tree, p));
    return out;
}

void check_prime(const BigInt& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw NotPrime(p.get_str() + " is not prime");
}

}  // namespace igusa
