#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "igusa/bench.hpp"
#include "igusa/errors.hpp"
#include "igusa/machine_io.hpp"
#include "igusa/oracle.hpp"
#include "igusa/pipeline.hpp"
#include "igusa/series.hpp"
#include "igusa/verify.hpp"

namespace {

using namespace igusa;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitNotSplit = 2;
constexpr int kExitNotPrime = 3;
constexpr int kExitBudget = 4;

BigInt default_budget() {
    if (const char* env = std::getenv("IGUSA_BUDGET")) {
        try {
            return BigInt(env);
        } catch (const std::invalid_argument&) {
            throw Error(std::string("bad IGUSA_BUDGET value: ") + env);
        }
    }
    return BigInt(1'000'000);
}

struct JobSpec {
    std::string poly_text;
    std::string prime_text = "2";
    unsigned long count = 10;       // -u: number of counts N_1..N_u
    unsigned long order = 20;       // -J: coefficient order
    std::string budget_text;
    std::uint64_t seed = 1;
    std::string format = "text";

    IntPolynomial poly() const { return parse_polynomial(poly_text); }
    BigInt prime() const {
        BigInt p;
        try {
            p = BigInt(prime_text);
        } catch (const std::invalid_argument&) {
            throw NotPrime("cannot parse prime \"" + prime_text + "\"");
        }
        check_prime(p);
        return p;
    }
    BigInt budget() const { return budget_text.empty() ? default_budget() : BigInt(budget_text); }
};

void add_poly_options(CLI::App* cmd, JobSpec& job) {
    cmd->add_option("--poly", job.poly_text,
                    "comma-separated ascending coefficients, e.g. \"-1,0,1\" for x^2 - 1")
        ->required();
    cmd->add_option("-p,--prime", job.prime_text, "prime p")->required();
}

void print_zeta_text(const PipelineResult& pipe) {
    const ZetaFunction& z = pipe.zeta;
    std::cout << "prime: " << z.prime.get_str() << "\n";
    std::cout << "prefactor: t^" << z.prefactor_exponent << "\n";
    std::cout << "atoms:\n";
    for (const auto& atom : z.atoms) std::cout << "  " << render_atom(atom, z.prime) << "\n";
    std::cout << "fraction: " << render_fraction(*z.normalized, z.prime) << "\n";
}

int cmd_zeta(const JobSpec& job) {
    PipelineResult pipe = run_pipeline(job.poly(), job.prime());
    if (job.format == "machine") {
        std::cout << to_machine(pipe.zeta);
    } else {
        print_zeta_text(pipe);
    }
    return kExitOk;
}

int cmd_nm(const JobSpec& job) {
    KeystreamResult ks = keystream(job.poly(), job.prime(), job.count);
    for (const auto& n : ks.counts.values) std::cout << n.get_str() << "\n";
    return kExitOk;
}

int cmd_poincare(const JobSpec& job) {
    PipelineResult pipe = run_pipeline(job.poly(), job.prime());
    NormalizedFraction h = poincare_from_zeta(pipe.zeta);
    std::cout << "H(t, f) = " << render_fraction(h, pipe.prime) << "\n";
    return kExitOk;
}

int cmd_keystream(const JobSpec& job, const std::string& out_path) {
    KeystreamResult ks = keystream(job.poly(), job.prime(), job.count);
    if (out_path.empty()) {
        std::fwrite(ks.bytes.data(), 1, ks.bytes.size(), stdout);
        std::fflush(stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot open " + out_path);
        out.write(reinterpret_cast<const char*>(ks.bytes.data()),
                  static_cast<std::streamsize>(ks.bytes.size()));
    }
    return kExitOk;
}

int cmd_tree(const JobSpec& job, const std::string& dot_path) {
    PipelineResult pipe = run_pipeline(job.poly(), job.prime());
    if (!pipe.tree) {
        std::cerr << "no roots with vp >= 0: the tree is empty and Z = t^"
                  << pipe.split.prefactor_exponent << "\n";
        return kExitOk;
    }
    std::string dot = tree_to_dot(*pipe.tree);
    if (dot_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(dot_path);
        if (!out) throw Error("cannot open " + dot_path);
        out << dot;
    }
    return kExitOk;
}

int cmd_verify(const JobSpec& job, std::size_t random_count, bool inject_fault, bool poly_given,
               unsigned long m_max) {
    VerifyOptions options;
    options.budget = job.budget();
    if (options.budget > BigInt("4611686018427387904"))  // 2^62: enumeration cap
        throw BudgetExceeded("budget " + options.budget.get_str() +
                             " is beyond what the oracle can enumerate");
    options.coeff_order = job.order;
    options.m_max = m_max;
    options.inject_fault = inject_fault;

    std::vector<CorpusElement> corpus;
    if (poly_given) {
        corpus.push_back({"cli", job.poly(), job.prime()});
    } else {
        corpus = fixed_corpus();
        if (random_count > 0) {
            auto extra = random_corpus(job.seed, random_count);
            corpus.insert(corpus.end(), extra.begin(), extra.end());
        }
    }

    VerifyReport report = verify_corpus(corpus, options);
    for (const auto& row : report.rows) {
        std::cout << (row.ok() ? "ok   " : "FAIL ") << row.name;
        if (!row.ok()) {
            std::cout << "  [paths=" << (row.paths_ok ? "ok" : "BAD")
                      << " coeffs=" << (row.coeffs_ok ? "ok" : "BAD")
                      << " counts=" << (row.counts_ok ? "ok" : "BAD")
                      << " structure=" << (row.structure_ok ? "ok" : "BAD") << "] " << row.detail;
        }
        std::cout << "\n";
    }
    std::cout << (report.all_ok() ? "verify: all checks passed" : "verify: MISMATCH") << "\n";
    return report.all_ok() ? kExitOk : kExitMismatch;
}

int cmd_bench(const JobSpec& job, const std::string& degrees_text) {
    std::vector<unsigned long> degrees;
    std::istringstream in(degrees_text);
    std::string token;
    while (std::getline(in, token, ',')) degrees.push_back(std::stoul(token));
    std::vector<BenchRow> rows = run_bench(degrees, job.prime(), job.count);
    std::printf("%8s %12s %12s %12s %12s %12s %12s %8s\n", "degree", "factor", "split", "tree",
                "zeta", "series", "total", "ratio");
    double prev = 0;
    for (const auto& r : rows) {
        double ratio = prev > 0 ? r.total_s / prev : 0;
        std::printf("%8lu %12.6f %12.6f %12.6f %12.6f %12.6f %12.6f %8.2f\n", r.degree, r.factor_s,
                    r.split_s, r.tree_s, r.zeta_s, r.series_s, r.total_s, ratio);
        prev = r.total_s;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Igusa local zeta functions of univariate polynomials split over Q"};
    app.require_subcommand(1);

    JobSpec job;
    std::string out_path, dot_path, degrees_text = "8,16,32,64";
    std::size_t random_count = 0;
    unsigned long m_max = 20;
    bool inject_fault = false;

    CLI::App* zeta = app.add_subcommand("zeta", "meromorphic continuation of Z(s, f)");
    add_poly_options(zeta, job);
    zeta->add_option("--format", job.format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI::App* nm = app.add_subcommand("nm", "solution counts N_0..N_u of f = 0 mod p^m");
    add_poly_options(nm, job);
    nm->add_option("-u,--count", job.count, "largest index u");

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare series H(t, f)");
    add_poly_options(poincare, job);

    CLI::App* keystream = app.add_subcommand("keystream", "binary keystream of N_0..N_u");
    add_poly_options(keystream, job);
    keystream->add_option("-u,--count", job.count, "largest index u");
    keystream->add_option("-o,--out", out_path, "write bytes to a file instead of stdout");

    CLI::App* tree = app.add_subcommand("tree", "weighted residue tree as a dot graph");
    add_poly_options(tree, job);
    tree->add_option("--dot", dot_path, "write the graph to a file instead of stdout");

    CLI::App* verify =
        app.add_subcommand("verify", "cross-check both zeta paths, coefficients and counts");
    verify->add_option("--poly", job.poly_text, "verify one polynomial instead of the corpus");
    verify->add_option("-p,--prime", job.prime_text, "prime for --poly");
    verify->add_option("--random", random_count, "number of seeded random corpus elements");
    verify->add_option("--seed", job.seed, "seed for the random corpus");
    verify->add_option("--budget", job.budget_text, "oracle budget (max p^m scanned)");
    verify->add_option("--mmax", m_max, "largest m compared against the oracle");
    verify->add_option("-J,--order", job.order, "coefficient comparison order");
    verify->add_flag("--inject-fault", inject_fault,
                     "test hook: corrupt one atom and expect a mismatch");

    CLI::App* bench = app.add_subcommand("bench", "pipeline timings on prod (x - i)");
    bench->add_option("--degrees", degrees_text, "comma-separated degree schedule");
    bench->add_option("-p,--prime", job.prime_text, "prime (default 101 for bench)");
    bench->add_option("-u,--count", job.count, "counts computed per run");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(zeta)) return cmd_zeta(job);
        if (app.got_subcommand(nm)) return cmd_nm(job);
        if (app.got_subcommand(poincare)) return cmd_poincare(job);
        if (app.got_subcommand(keystream)) return cmd_keystream(job, out_path);
        if (app.got_subcommand(tree)) return cmd_tree(job, dot_path);
        if (app.got_subcommand(verify))
            return cmd_verify(job, random_count, inject_fault, verify->count("--poly") > 0, m_max);
        if (app.got_subcommand(bench)) {
            if (bench->count("--prime") == 0) job.prime_text = "101";
            return cmd_bench(job, degrees_text);
        }
    } catch (const NotSplitOverQ& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotSplit;
    } catch (const NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotPrime;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}
