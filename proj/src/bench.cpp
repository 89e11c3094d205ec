#include "igusa/bench.hpp"

#include <chrono>

#include "igusa/series.hpp"

namespace igusa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

IntPolynomial product_polynomial(unsigned long degree) {
    ZPoly acc{BigInt(1)};
    for (unsigned long i = 1; i <= degree; ++i)
        acc = zpoly_mul(acc, ZPoly{BigInt(-static_cast<long>(i)), BigInt(1)});
    return IntPolynomial(std::move(acc));
}

std::vector<BenchRow> run_bench(const std::vector<unsigned long>& degrees, const BigInt& p,
                                unsigned long series_count) {
    std::vector<BenchRow> rows;
    for (unsigned long d : degrees) {
        IntPolynomial f = product_polynomial(d);
        BenchRow row;
        row.degree = d;
        unsigned long reps = 0;
        const auto bench_start = Clock::now();
        // Repeat short runs so sub-millisecond stages still produce
        // trustworthy ratios.
        while (reps < 3 || seconds_since(bench_start) < 0.025) {
            auto t0 = Clock::now();
            Factorization fac = factor_over_q(f);
            auto t1 = Clock::now();
            ValuationSplit split = split_by_valuation(fac, p);
            auto t2 = Clock::now();
            std::optional<WeightedTree> tree;
            if (!split.plus_roots.empty())
                tree = build_tree(split.plus_roots, p, compute_lf(split.plus_roots, p));
            auto t3 = Clock::now();
            ZetaFunction z = normalize(zeta_from_tree(split, tree, p));
            auto t4 = Clock::now();
            unsigned long order = series_count == 0 ? 0 : series_count - 1;
            CoefficientPrefix c = coefficients_via_tree(tree, split, p, order);
            counts_from_coefficients(c, series_count);
            auto t5 = Clock::now();

            row.factor_s += std::chrono::duration<double>(t1 - t0).count();
            row.split_s += std::chrono::duration<double>(t2 - t1).count();
            row.tree_s += std::chrono::duration<double>(t3 - t2).count();
            row.zeta_s += std::chrono::duration<double>(t4 - t3).count();
            row.series_s += std::chrono::duration<double>(t5 - t4).count();
            ++reps;
        }
        row.factor_s /= static_cast<double>(reps);
        row.split_s /= static_cast<double>(reps);
        row.tree_s /= static_cast<double>(reps);
        row.zeta_s /= static_cast<double>(reps);
        row.series_s /= static_cast<double>(reps);
        row.total_s = row.factor_s + row.split_s + row.tree_s + row.zeta_s + row.series_s;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace igusa
