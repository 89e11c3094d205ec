#include "igusa/oracle.hpp"

#include <cstdint>

#include "igusa/errors.hpp"

namespace igusa {

BigInt brute_force_count(const IntPolynomial& f, const BigInt& p, unsigned long m,
                         const OracleBudget& budget) {
    if (m == 0) return 1;
    BigInt modulus_z = pow_p(p, m);
    if (modulus_z > budget.max_modulus)
        throw BudgetExceeded("p^m = " + modulus_z.get_str() + " exceeds the oracle budget " +
                             budget.max_modulus.get_str());
    if (!modulus_z.fits_ulong_p()) throw BudgetExceeded("oracle modulus does not fit a machine word");
    const std::uint64_t modulus = modulus_z.get_ui();

    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) {
        BigInt r;
        mpz_mod(r.get_mpz_t(), c.get_mpz_t(), modulus_z.get_mpz_t());
        coeffs.push_back(r.get_ui());
    }

    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < modulus; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = static_cast<std::uint64_t>(
                ((static_cast<unsigned __int128>(acc) * x) + coeffs[i]) % modulus);
        if (acc == 0) ++count;
    }
    return BigInt(static_cast<unsigned long>(count));
}

BigRational brute_force_cm(const IntPolynomial& f, const BigInt& p, unsigned long m,
                           const OracleBudget& budget) {
    if (pow_p(p, m + 1) > budget.max_modulus)
        throw BudgetExceeded("p^{m+1} exceeds the oracle budget");
    BigInt n_m = brute_force_count(f, p, m, budget);
    BigInt n_next = brute_force_count(f, p, m + 1, budget);
    BigRational out = BigRational(n_m, pow_p(p, m)) - BigRational(n_next, pow_p(p, m + 1));
    out.canonicalize();
    return out;
}

}  // namespace igusa
