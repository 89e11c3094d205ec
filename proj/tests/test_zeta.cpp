#include <doctest.h>

#include <random>
#include <set>

#include "igusa/errors.hpp"
#include "igusa/pipeline.hpp"
#include "igusa/series.hpp"
#include "igusa/verify.hpp"
#include "igusa/zeta.hpp"

using namespace igusa;

namespace {

ZetaFunction zeta_of(const char* poly, long p) {
    return run_pipeline(parse_polynomial(poly), BigInt(p)).zeta;
}

bool has_atom(const std::vector<ZetaAtom>& atoms, long num, unsigned long den_exp,
              unsigned long t_power, unsigned long geom) {
    for (const auto& a : atoms)
        if (a.coeff_num == num && a.coeff_den_exp == den_exp && a.t_power == t_power &&
            a.geom_weight == geom)
            return true;
    return false;
}

const std::vector<RootFactor> example31_roots = {
    {BigRational(892), 1},  {BigRational(1013), 3}, {BigRational(1146), 1},
    {BigRational(1279), 2}, {BigRational(69), 1},
};

ZetaFunction example31_tree_path() {
    ValuationSplit split;
    split.plus_roots = example31_roots;
    split.prefactor_exponent = 0;
    const BigInt p(11);
    WeightedTree tree = build_tree(split.plus_roots, p, compute_lf(split.plus_roots, p));
    return normalize(zeta_from_tree(split, tree, p));
}

}  // namespace

TEST_CASE("atoms_from_tree covers the four vertex shapes") {
    SUBCASE("f = x at p = 5") {
        WeightedTree tree = build_tree({{BigRational(0), 1}}, BigInt(5), 1);
        auto atoms = atoms_from_tree(tree);
        REQUIRE(atoms.size() == 2);
        CHECK(has_atom(atoms, 4, 1, 0, 0));  // (p-1)/p from the root vertex
        CHECK(has_atom(atoms, 4, 2, 1, 1));  // (1-p^-1) p^-1 t / (1 - p^-1 t)
    }
    SUBCASE("example 3.1: the c-branch W=2 stalk") {
        const BigInt p(11);
        WeightedTree tree = build_tree(example31_roots, p, 3);
        auto atoms = atoms_from_tree(tree);
        // root with valence 3: p^-1 (p-3)
        CHECK(has_atom(atoms, 8, 1, 0, 0));
        // internal piece of the c-branch W=2 stalk at level 3
        CHECK(has_atom(atoms, 10, 4, 8, 0));
        // terminal piece at level 4
        CHECK(has_atom(atoms, 10, 5, 10, 2));

        // Together those two atoms equal the paper-shaped term
        // (1-p^-1) p^-3 t^8 / (1 - p^-1 t^2).
        ZetaFunction chain{p, 0, {{BigInt(10), 4, 8, 0}, {BigInt(10), 5, 10, 2}}, {}};
        ZetaFunction paper_term{p, 0, {{BigInt(10), 4, 8, 2}}, {}};
        CHECK(zeta_equal(chain, paper_term));
    }
}

TEST_CASE("zeta_from_tree on the spec instances") {
    SUBCASE("f = 2x at p = 2: Z = t (1/2) / (1 - t/2)") {
        ZetaFunction z = zeta_of("0,2", 2);
        CHECK(z.prefactor_exponent == 1);
        ZetaFunction expected{BigInt(2), 1, {{BigInt(1), 1, 0, 1}}, {}};
        CHECK(zeta_equal(z, expected));
        // normalized: t / (2 - t)
        CHECK(z.normalized->num == ZPoly{0, 1});
        CHECK(z.normalized->den == ZPoly{2, -1});
        CHECK(z.normalized->scale_exp == 0);
    }
    SUBCASE("f = 2x - 1 at p = 2: Z = 1") {
        ZetaFunction z = zeta_of("-1,2", 2);
        CHECK(z.normalized->num == ZPoly{1});
        CHECK(z.normalized->den == ZPoly{1});
        CHECK(z.normalized->scale_exp == 0);
    }
}

TEST_CASE("spf_evaluate") {
    SUBCASE("single root closed form, checked against the oracle idea") {
        // e = 2, p = 3: (1-p^-1)/(1 - p^-1 t^2)
        ZetaFunction z = spf_evaluate(0, {{BigRational(0), 2}}, BigInt(3));
        REQUIRE(z.atoms.size() == 1);
        CHECK(has_atom(z.atoms, 2, 1, 0, 2));
    }
    SUBCASE("two simple residues at p = 5") {
        ZetaFunction z = spf_evaluate(0, {{BigRational(0), 1}, {BigRational(1), 1}}, BigInt(5));
        REQUIRE(z.atoms.size() == 2);
        CHECK(has_atom(z.atoms, 3, 1, 0, 0));      // nu/p = 3/5
        CHECK(has_atom(z.atoms, 2 * 4, 2, 1, 1));  // delta (1-p^-1) p^-1 t / (1 - p^-1 t)
    }
    SUBCASE("example 3.1 equals the tree path") {
        ZetaFunction spf = normalize(spf_evaluate(0, example31_roots, BigInt(11)));
        CHECK(zeta_equal(spf, example31_tree_path()));
    }
}

TEST_CASE("normalize") {
    SUBCASE("f = x gives (p-1)/(p-t)") {
        ZetaFunction z = zeta_of("0,1", 5);
        CHECK(z.normalized->num == ZPoly{4});
        CHECK(z.normalized->den == ZPoly{5, -1});
        CHECK(z.normalized->scale_exp == 0);
    }
    SUBCASE("single constant atom keeps its p-power in the scale") {
        ZetaFunction z{BigInt(3), 0, {{BigInt(5), 2, 3, 0}}, {}};
        z = normalize(z);
        CHECK(z.normalized->num == ZPoly{0, 0, 0, 5});
        CHECK(z.normalized->den == ZPoly{1});
        CHECK(z.normalized->scale_exp == 2);
    }
    SUBCASE("Z = 1") {
        ZetaFunction z{BigInt(3), 0, {{BigInt(1), 0, 0, 0}}, {}};
        z = normalize(z);
        CHECK(z.normalized->num == ZPoly{1});
        CHECK(z.normalized->den == ZPoly{1});
        CHECK(z.normalized->scale_exp == 0);
    }
}

TEST_CASE("zeta_equal") {
    SUBCASE("reflexive") {
        ZetaFunction z = zeta_of("0,1", 5);
        CHECK(zeta_equal(z, z));
    }
    SUBCASE("translation invariance: x vs x - 1") {
        CHECK(zeta_equal(zeta_of("0,1", 5), zeta_of("-1,1", 5)));
    }
    SUBCASE("different functions differ") {
        CHECK_FALSE(zeta_equal(zeta_of("0,1", 5), zeta_of("0,0,1", 5)));
    }
}

TEST_CASE("recursion identity: one unrolling of the tree generating function") {
    // G(tree(f)) = nu/p + delta (1-p^-1) p^-1 t/(1-p^-1 t)
    //              + sum_xi p^-1 t^{e_xi} G(tree(f_xi))
    const BigInt p(11);
    ZetaFunction lhs = example31_tree_path();

    std::vector<ZetaAtom> assembled;
    assembled.push_back({p - 3, 1, 0, 0});       // nu = p - 3
    assembled.push_back({p - 1, 2, 1, 1});       // delta = 1
    // residue classes with multiplicity >= 2: xi = 1 (e=4), xi = 3 (e=3)
    struct Branch {
        std::vector<RootFactor> roots;
        unsigned long shift;
    };
    std::vector<Branch> branches;
    branches.push_back({{{make_rational(BigInt(892 - 1), BigInt(11)), 1},
                         {make_rational(BigInt(1013 - 1), BigInt(11)), 3}},
                        4});
    branches.push_back({{{make_rational(BigInt(1279 - 3), BigInt(11)), 2},
                         {make_rational(BigInt(69 - 3), BigInt(11)), 1}},
                        3});
    for (const auto& branch : branches) {
        WeightedTree tree = build_tree(branch.roots, p, compute_lf(branch.roots, p));
        for (ZetaAtom atom : atoms_from_tree(tree)) {
            atom.coeff_den_exp += 1;
            atom.t_power += branch.shift;
            assembled.push_back(atom);
        }
    }
    ZetaFunction rhs{p, 0, assembled, {}};
    CHECK(zeta_equal(lhs, rhs));
}

TEST_CASE("normalized zeta properties on random corpora") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        auto corpus = random_corpus(rng(), 1);
        PipelineResult pipe = run_pipeline(corpus[0].poly, corpus[0].prime);
        const NormalizedFraction& f = *pipe.zeta.normalized;
        const BigInt& p = corpus[0].prime;

        // no common polynomial factor survives normalization
        CHECK(zpoly_gcd(f.num, f.den).size() == 1);
        CHECK(f.den.front() > 0);

        // total measure: Z(t = 1) = 1
        CHECK(sums_to_one_at_t1(pipe.zeta));

        // series coefficients are volumes in [0, 1]
        auto series = series_expand(f, p, 12);
        BigRational sum = 0;
        for (const auto& c : series) {
            CHECK(c >= 0);
            CHECK(c <= 1);
            sum += c;
        }
        CHECK(sum <= 1);

        // every denominator factor divides prod (p - t^w) over atom weights
        ZPoly product{BigInt(1)};
        std::set<unsigned long> weights;
        for (const auto& atom : pipe.zeta.atoms)
            if (atom.geom_weight > 0) weights.insert(atom.geom_weight);
        for (unsigned long w : weights) {
            ZPoly factor(w + 1, BigInt(0));
            factor[0] = p;
            factor[w] = -1;
            product = zpoly_mul(product, factor);
        }
        ZPoly rem_check = zpoly_gcd(f.den, product);
        // den divides the product: gcd(den, product) == den up to sign/content
        CHECK(zpoly_div_exact(f.den, rem_check).size() == 1);
    }
}

TEST_CASE("spf path equals tree path on random corpora") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        auto corpus = random_corpus(rng(), 1);
        PipelineResult pipe = run_pipeline(corpus[0].poly, corpus[0].prime);
        ZetaFunction spf = normalize(
            spf_evaluate(pipe.split.prefactor_exponent, pipe.split.plus_roots, corpus[0].prime));
        CHECK(zeta_equal(pipe.zeta, spf));
    }
}

TEST_CASE("rendering") {
    SUBCASE("atoms in paper notation") {
        CHECK(render_atom({BigInt(10), 4, 8, 2}, BigInt(11)) ==
              "(1-11^-1) 11^-3 t^8 / (1 - 11^-1 t^2)");
        CHECK(render_atom({BigInt(8), 1, 0, 0}, BigInt(11)) == "8 11^-1");
        CHECK(render_atom({BigInt(10), 2, 1, 1}, BigInt(11)) ==
              "(1-11^-1) 11^-1 t / (1 - 11^-1 t)");
    }
    SUBCASE("fractions") {
        ZetaFunction z = zeta_of("0,1", 5);
        CHECK(render_fraction(*z.normalized, z.prime) == "(4) / (5 - t)");
        ZetaFunction one = zeta_of("-1,2", 2);
        CHECK(render_fraction(*one.normalized, one.prime) == "(1) / (1)");
    }
}
