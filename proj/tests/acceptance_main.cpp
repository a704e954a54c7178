// Acceptance suite: each criterion prints one PASS/FAIL line and the binary
// exits with the number of failures. Usage: acceptance [criterion] [cli-path].
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "specht/corpus.hpp"
#include "specht/report.hpp"

using namespace specht;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void require(Outcome& outcome, bool condition, const std::string& what) {
    if (!condition && outcome.pass) {
        outcome.pass = false;
        outcome.detail = what;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// 1. The equal-column-class group of the most dominant (5^2, 2^4) tableau.
Outcome criterion1() {
    Outcome outcome;
    const Tableau t = t_star(Partition({5, 5, 2, 2, 2, 2}));
    const PermGroup H = h_group(t);
    const PermGroup expected(
        18, {Perm::parse_cycles(18, "(3,4,5)(8,9,10)"), Perm::parse_cycles(18, "(3,4)(8,9)"),
             Perm::parse_cycles(18, "(1,2)(6,7)(11,12)(13,14)(15,16)(17,18)")});
    require(outcome, H.same_elements(expected), "element sets differ");
    require(outcome, H.elements().size() == 12, "order is not 12");
    require(outcome, H.factor_sizes() == std::vector<int>({2, 3}),
            "abstract type is not S_3 x S_2");
    return outcome;
}

// 2. The u, z and l groups for the tail (2^4).
Outcome criterion2() {
    Outcome outcome;
    const Partition shape({5, 5, 2, 2, 2, 2});
    const Tableau t = t_star(shape);
    const auto ctx = make_splitting_context(shape, 1);

    const PermGroup U = u_group(ctx, t);
    const PermGroup expected_u(
        18, {Perm::parse_cycles(18, "(3,4,5)(8,9,10)"), Perm::parse_cycles(18, "(3,4)(8,9)")});
    require(outcome, U.same_elements(expected_u), "u group differs");

    const PermGroup Z = z_group(ctx, t);
    const PermGroup expected_z(18, {Perm::parse_cycles(18, "(11,13,15,17)(12,14,16,18)"),
                                    Perm::parse_cycles(18, "(11,13)(12,14)")});
    require(outcome, Z.same_elements(expected_z), "z group differs");

    const PermGroup L = l_group(ctx, t);
    require(outcome, L.elements().size() == 144, "l group order is not 144");
    require(outcome, L.factor_sizes() == std::vector<int>({3, 4}),
            "abstract type is not S_3 x S_4");
    return outcome;
}

// 3. The Sylow 3-subgroup at shape (6^3, 3^6), tail (3^6).
Outcome criterion3() {
    Outcome outcome;
    const Partition shape({6, 6, 6, 3, 3, 3, 3, 3, 3});
    const Tableau t = t_star(shape);
    const auto ctx = make_splitting_context(shape, 1);
    const PermGroup P = sylow_p(l_group(ctx, t), 3);

    require(outcome, P.order() == 27 && P.elements().size() == 27, "order is not 27");
    for (const char* cycles :
         {"(4,5,6)(10,11,12)(16,17,18)", "(19,22,25)(20,23,26)(21,24,27)",
          "(28,31,34)(29,32,35)(30,33,36)"})
        require(outcome, P.contains(Perm::parse_cycles(36, cycles)),
                std::string("missing generator ") + cycles);
    bool elementary_abelian = true;
    for (const Perm& x : P.elements())
        elementary_abelian =
            elementary_abelian && (x.is_identity() || (x.order() == 3 && x.sign() == 1));
    for (const Perm& a : P.generators())
        for (const Perm& b : P.generators())
            elementary_abelian = elementary_abelian && a * b == b * a;
    require(outcome, elementary_abelian, "not elementary abelian");

    const auto lemma = lemma31_check(ctx, t, 3);
    require(outcome, lemma.holds && lemma.structural_ran && !lemma.expansion_ran,
            "structural lemma check did not pass");
    return outcome;
}

// 4. Hook shapes: the product-of-symmetric-groups bound, exactly.
Outcome criterion4() {
    Outcome outcome;
    for (int n = 3; n <= 10; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            std::vector<int> parts = {n - k};
            parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
            const Partition hook(parts);
            const auto contexts = splitting_partitions(hook);
            if (contexts.size() != 2 ||
                contexts[1].mu != Partition(std::vector<int>(static_cast<std::size_t>(k), 1))) {
                require(outcome, false, "tail (1^k) not found for " + hook.display());
                continue;
            }
            const PermGroup L = l_group(contexts[1], t_star(hook));
            std::vector<int> sizes = {k, n - k - 1};
            std::sort(sizes.begin(), sizes.end());
            require(outcome, L.factor_sizes() == sizes,
                    "factor sizes differ at " + hook.display());
            require(outcome,
                    BigInt(L.elements().size()) == factorial(k) * factorial(n - k - 1),
                    "element count differs at " + hook.display());
            // factor supports: the tail rows and the trailing first-row boxes
            std::vector<int> u_support, z_support;
            for (int x = 2; x <= n - k; ++x) u_support.push_back(x);
            for (int x = n - k + 1; x <= n; ++x) z_support.push_back(x);
            const auto& factors = *L.structure();
            std::vector<int> got_u = factors[0].support();
            std::vector<int> got_z;
            for (std::size_t f = 1; f < factors.size(); ++f)
                for (int x : factors[f].support()) got_z.push_back(x);
            std::sort(got_z.begin(), got_z.end());
            require(outcome, got_u == u_support && got_z == z_support,
                    "factor supports differ at " + hook.display());
        }
    return outcome;
}

// 5. Standard basis: full rank and unitriangular expansions over Z and GF(p).
Outcome criterion5() {
    Outcome outcome;
    for (const Check& check : standard_basis_battery(7))
        require(outcome, check.pass, check.name + " at " + check.input);
    return outcome;
}

// 6. Trace machinery oracles on the sweep's p-groups of order at most p^3.
Outcome criterion6() {
    Outcome outcome;
    for (int n = 1; n <= 7; ++n)
        for (const Partition& shape : all_partitions(n))
            for (int p : {2, 3}) {
                PrimeField F(p);
                auto basis = std::make_shared<const StandardBasis>(shape);
                SpechtModule<PrimeField> module(F, basis);
                for (const auto& ctx : splitting_partitions(shape)) {
                    const PermGroup P = sylow_p(l_group(ctx, t_star(shape)), p);
                    if (P.order() > pow_int(p, 3)) continue;
                    const std::string input = "lambda=" + shape.display() +
                                              " p=" + std::to_string(p) +
                                              " mu=" + ctx.mu.display();
                    for (const Check& check :
                         brauer_oracle_battery(module, P, p, 1234, input))
                        require(outcome, check.pass, check.name + " at " + check.input);
                }
            }
    return outcome;
}

// 7. End-to-end consistency sweep over every shape, prime and tail.
Outcome criterion7() {
    Outcome outcome;
    for (int n = 1; n <= 7; ++n)
        for (const Partition& shape : all_partitions(n))
            for (int p : {2, 3}) {
                CertificateSession session(shape, p, {}, 0);
                for (const auto& ctx : splitting_partitions(shape)) {
                    const std::string input = "lambda=" + shape.display() +
                                              " p=" + std::to_string(p) +
                                              " mu=" + ctx.mu.display();
                    const auto cert = vertex_certificate(session, ctx);
                    require(outcome, !cert.structural_only, "not full mode at " + input);
                    require(outcome, cert.lemma.holds, "lemma fails at " + input);
                    require(outcome, cert.fixed_ok.value_or(false),
                            "fixed membership fails at " + input);
                    if (cert.verdict && *cert.verdict == Verdict::Indecomposable) {
                        require(outcome, cert.not_trace_ok.value_or(false),
                                "trace membership violates the bound at " + input);
                        require(outcome, cert.brauer_dim.value_or(0) >= 1,
                                "Brauer quotient vanishes at " + input);
                    }
                }
            }
    return outcome;
}

// 8. The empty tail reproduces the equal-column-class bound, and the (5^2,2^4)
// report flags a strict improvement at p = 3.
Outcome criterion8() {
    Outcome outcome;
    for (int n = 1; n <= 7; ++n)
        for (const Partition& shape : all_partitions(n)) {
            const Tableau star = t_star(shape);
            const auto ctx = make_splitting_context(shape, 0);
            const PermGroup L = l_group(ctx, star);
            const PermGroup H = h_group(star);
            // identical generator lists imply elementwise equality
            require(outcome, L.generators() == H.generators(),
                    "generators differ at " + shape.display());
            if (n <= 6)
                require(outcome, L.same_elements(H), "elements differ at " + shape.display());
        }

    RunConfig config;
    config.lambda = Partition({5, 5, 2, 2, 2, 2});
    config.p = 3;
    config.mu_selection = MuSelection::All;
    const Report report = run(config);
    require(outcome, report.rows.size() == 2, "expected two rows");
    require(outcome, report.rows[0].cert.sylow_order == 3, "empty-tail Sylow order is not 3");
    require(outcome, report.rows[1].cert.sylow_order == 9, "tail Sylow order is not 9");
    require(outcome, report.rows[1].improvement, "improvement flag not set");
    return outcome;
}

// 9. Byte-identical corpus JSON across two runs of the command line tool.
Outcome criterion9(const std::string& cli_path) {
    Outcome outcome;
    if (cli_path.empty()) {
        require(outcome, false, "path to the command line tool not supplied");
        return outcome;
    }
    const std::string out1 = "acceptance_corpus_run1.json";
    const std::string out2 = "acceptance_corpus_run2.json";
    for (const std::string& out : {out1, out2}) {
        const std::string command =
            "\"" + cli_path + "\" --corpus --seed 7 --threads 1 --json " + out + " > " + out +
            ".log 2>&1";
        const int rc = std::system(command.c_str());
        require(outcome, rc == 0, "corpus run exited with " + std::to_string(rc));
    }
    const std::string a = read_file(out1);
    const std::string b = read_file(out2);
    require(outcome, !a.empty(), "first corpus output is empty");
    require(outcome, a == b, "corpus JSON differs between runs");
    return outcome;
}

} // namespace

int main(int argc, char** argv) {
    const int which = argc > 1 ? std::atoi(argv[1]) : 0;
    const std::string cli_path = argc > 2 ? argv[2] : "";

    struct Criterion {
        int number;
        const char* label;
        double budget_seconds;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "equal-column-class group at (5^2,2^4)", 1.0, criterion1},
        {2, "u/z/l groups for the tail (2^4)", 1.0, criterion2},
        {3, "Sylow 3-subgroup at (6^3,3^6)", 5.0, criterion3},
        {4, "hook shapes give S_k x S_{n-k-1}", 5.0, criterion4},
        {5, "standard basis rank and unitriangularity", 120.0, criterion5},
        {6, "trace machinery oracles", 120.0, criterion6},
        {7, "end-to-end consistency sweep", 600.0, criterion7},
        {8, "empty tail subsumption and improvement flag", 1.0, criterion8},
        {9, "byte-identical corpus JSON", 900.0, [&] { return criterion9(cli_path); }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        if (which != 0 && criterion.number != which) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.body();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.pass && elapsed > criterion.budget_seconds) {
            outcome.pass = false;
            outcome.detail = "over the time budget of " +
                             std::to_string(criterion.budget_seconds) + "s";
        }
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.number, criterion.label, elapsed,
                    outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
        if (!outcome.pass) ++failures;
    }
    return failures;
}
