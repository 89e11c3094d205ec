#pragma once

#include <vector>

#include "igusa/polynomial.hpp"
#include "igusa/rational.hpp"

namespace igusa {

struct BenchRow {
    unsigned long degree = 0;
    double factor_s = 0, split_s = 0, tree_s = 0, zeta_s = 0, series_s = 0;
    double total_s = 0;
};

/// prod_{i=1..d} (x - i)
IntPolynomial product_polynomial(unsigned long degree);

/// Time each pipeline stage on f = prod (x - i) for the given degrees.
/// Runs are repeated until the sample is long enough to trust and the
/// mean per-run time is reported.
std::vector<BenchRow> run_bench(const std::vector<unsigned long>& degrees, const BigInt& p,
                                unsigned long series_count = 10);

}  // namespace igusa
