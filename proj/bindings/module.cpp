#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "igusa/errors.hpp"
#include "igusa/machine_io.hpp"
#include "igusa/oracle.hpp"
#include "igusa/pipeline.hpp"
#include "igusa/series.hpp"
#include "igusa/verify.hpp"

namespace py = pybind11;

namespace {

using namespace igusa;

BigInt bigint_from(py::handle obj) {
    return BigInt(py::str(obj).cast<std::string>());
}

py::object pyint_from(const BigInt& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object pyfraction_from(const BigRational& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(pyint_from(BigInt(q.get_num())), pyint_from(BigInt(q.get_den())));
}

IntPolynomial poly_from(const py::sequence& coeffs) {
    std::vector<BigInt> c;
    c.reserve(py::len(coeffs));
    for (py::handle item : coeffs) c.push_back(bigint_from(item));
    return IntPolynomial(std::move(c));
}

BigInt checked_prime(py::int_ p) {
    BigInt prime = bigint_from(p);
    check_prime(prime);
    return prime;
}

py::list pyints(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(pyint_from(v));
    return out;
}

py::dict zeta_dict(const ZetaFunction& z) {
    py::dict out;
    out["prime"] = pyint_from(z.prime);
    out["prefactor"] = z.prefactor_exponent;
    py::list atoms;
    for (const auto& a : z.atoms) {
        py::dict atom;
        atom["num"] = pyint_from(a.coeff_num);
        atom["den_exp"] = a.coeff_den_exp;
        atom["t_power"] = a.t_power;
        atom["geom_weight"] = a.geom_weight;
        atoms.append(atom);
    }
    out["atoms"] = atoms;
    out["numerator"] = pyints(z.normalized->num);
    out["denominator"] = pyints(z.normalized->den);
    out["scale"] = z.normalized->scale_exp;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Igusa local zeta functions, Poincare series and congruence "
              "solution counts for univariate polynomials split over Q";

    // Base first: translators run newest-first, so the specific types
    // must be registered after their base.
    py::register_exception<Error>(m, "IgusaError", PyExc_RuntimeError);
    py::register_exception<NotSplitOverQ>(m, "NotSplitOverQ", PyExc_ValueError);
    py::register_exception<NotPrime>(m, "NotPrime", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_ValueError);

    m.def(
        "zeta",
        [](const py::sequence& coeffs, py::int_ p) {
            return zeta_dict(run_pipeline(poly_from(coeffs), checked_prime(p)).zeta);
        },
        py::arg("coeffs"), py::arg("p"),
        "Z(s, f) as a dict with prime, prefactor, atoms, numerator, denominator, scale.\n"
        "Coefficients ascend by degree; the fraction is num(t) / (p^scale * den(t)).");

    m.def(
        "zeta_json",
        [](const py::sequence& coeffs, py::int_ p) {
            return to_machine(run_pipeline(poly_from(coeffs), checked_prime(p)).zeta);
        },
        py::arg("coeffs"), py::arg("p"), "Machine-readable JSON document for Z(s, f).");

    m.def(
        "solution_counts",
        [](const py::sequence& coeffs, py::int_ p, unsigned long u) {
            return pyints(keystream(poly_from(coeffs), checked_prime(p), u).counts.values);
        },
        py::arg("coeffs"), py::arg("p"), py::arg("u"),
        "N_0..N_u where N_m counts solutions of f(x) = 0 modulo p^m.");

    m.def(
        "coefficients",
        [](const py::sequence& coeffs, py::int_ p, unsigned long order) {
            PipelineResult pipe = run_pipeline(poly_from(coeffs), checked_prime(p));
            CoefficientPrefix c = coefficients_via_tree(pipe.tree, pipe.split, pipe.prime, order);
            py::list out;
            for (const auto& v : c.values) out.append(pyfraction_from(v));
            return out;
        },
        py::arg("coeffs"), py::arg("p"), py::arg("order"),
        "c_0..c_order: volumes of {x : vp(f(x)) = j}, as Fractions.");

    m.def(
        "poincare",
        [](const py::sequence& coeffs, py::int_ p) {
            PipelineResult pipe = run_pipeline(poly_from(coeffs), checked_prime(p));
            NormalizedFraction h = poincare_from_zeta(pipe.zeta);
            py::dict out;
            out["numerator"] = pyints(h.num);
            out["denominator"] = pyints(h.den);
            out["scale"] = h.scale_exp;
            return out;
        },
        py::arg("coeffs"), py::arg("p"),
        "Poincare series H(t, f) as a reduced fraction num / (p^scale * den).");

    m.def(
        "keystream",
        [](const py::sequence& coeffs, py::int_ p, unsigned long u) {
            KeystreamResult ks = igusa::keystream(poly_from(coeffs), checked_prime(p), u);
            return py::bytes(reinterpret_cast<const char*>(ks.bytes.data()), ks.bytes.size());
        },
        py::arg("coeffs"), py::arg("p"), py::arg("u"),
        "Length-prefixed binary serialization of N_0..N_u.");

    m.def(
        "decode_keystream",
        [](py::bytes data) {
            std::string raw = data;
            std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
            return pyints(parse_keystream(bytes));
        },
        py::arg("data"), "Integers back out of a keystream byte string.");

    m.def(
        "tree_dot",
        [](const py::sequence& coeffs, py::int_ p) {
            PipelineResult pipe = run_pipeline(poly_from(coeffs), checked_prime(p));
            if (!pipe.tree) throw Error("no roots with vp >= 0: the tree is empty");
            return tree_to_dot(*pipe.tree);
        },
        py::arg("coeffs"), py::arg("p"), "Weighted residue tree as a Graphviz document.");

    m.def(
        "brute_force_count",
        [](const py::sequence& coeffs, py::int_ p, unsigned long m, py::int_ budget) {
            OracleBudget b{bigint_from(budget)};
            return pyint_from(brute_force_count(poly_from(coeffs), checked_prime(p), m, b));
        },
        py::arg("coeffs"), py::arg("p"), py::arg("m"), py::arg("budget") = py::int_(10'000'000),
        "Oracle: count solutions of f(x) = 0 mod p^m by enumeration.");

    m.def(
        "verify",
        [](std::uint64_t seed, std::size_t random_count, py::int_ budget, unsigned long m_max) {
            VerifyOptions options;
            options.budget = bigint_from(budget);
            options.m_max = m_max;
            auto corpus = fixed_corpus();
            auto extra = random_corpus(seed, random_count);
            corpus.insert(corpus.end(), extra.begin(), extra.end());
            VerifyReport report = verify_corpus(corpus, options);
            py::list failures;
            for (const auto& row : report.rows)
                if (!row.ok()) failures.append(row.name + ": " + row.detail);
            return py::make_tuple(report.all_ok(), failures);
        },
        py::arg("seed") = 1, py::arg("random_count") = 0, py::arg("budget") = py::int_(100'000),
        py::arg("m_max") = 20,
        "Run the self-verification corpus; returns (ok, failure descriptions).");
}
