#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specht/corpus.hpp"
#include "specht/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitConsistency = 4;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw specht::invalid_input("cannot open output file: " + path);
    out << content;
}

int run_report(const specht::RunConfig& config, const std::string& json_path) {
    const specht::Report report = specht::run(config);
    std::cout << specht::report_text(report);
    if (!json_path.empty())
        write_output(json_path, specht::report_json(report).dump(2) + "\n");
    return report.partial ? kExitCapExceeded : kExitOk;
}

int run_corpus(const specht::CorpusOptions& options, const std::string& json_path) {
    const specht::CorpusResult result = specht::corpus(options);
    std::cout << specht::corpus_text(result);
    if (!json_path.empty())
        write_output(json_path, specht::corpus_json(result, options).dump(2) + "\n");
    return result.fail == 0 ? kExitOk : kExitConsistency;
}

int run_endo_only(const specht::Partition& lambda, int p, const specht::CertificateCaps& caps,
                  std::uint64_t seed, const std::string& json_path) {
    specht::CertificateSession session(lambda, p, caps, seed);
    if (!session.full_mode())
        throw specht::cap_exceeded("endomorphism query: " + session.skip_reason());
    const auto& decomposition = session.decomposition();
    specht::Json j;
    j["tool"] = specht::kToolName;
    j["version"] = specht::kVersion;
    j["lambda"] = specht::partition_json(lambda);
    j["p"] = p;
    j["dim_specht"] = session.dim_specht().str();
    j["dim_endo"] = decomposition.dim_endo;
    j["verdict"] = specht::verdict_name(decomposition.verdict);
    j["method"] = decomposition.method;
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!json_path.empty() && json_path != "-") write_output(json_path, text);
    return kExitOk;
}

int run_rep_matrix(const specht::Partition& lambda, const std::string& cycles,
                   const std::string& ring_name, int p, const specht::CertificateCaps& caps,
                   const std::string& format, const std::string& out_path) {
    const specht::Perm g = specht::Perm::parse_cycles(lambda.n(), cycles);
    std::ostringstream body;
    auto emit = [&](const auto& ring, const auto& m) {
        if (format == "json") {
            specht::Json j;
            j["tool"] = specht::kToolName;
            j["version"] = specht::kVersion;
            j["lambda"] = specht::partition_json(lambda);
            j["permutation"] = specht::perm_json(g);
            j["matrix"] = specht::matrix_json(ring, m);
            body << j.dump(2) << "\n";
        } else if (format == "mm") {
            specht::write_matrix_market(body, ring, m);
        } else {
            throw specht::invalid_input("--matrix-format must be json or mm");
        }
    };
    if (ring_name == "Z") {
        specht::IntegerRing ring;
        specht::SpechtModule<specht::IntegerRing> module(ring, lambda, caps.tableau_n,
                                                         caps.terms);
        emit(ring, module.rep_matrix(g));
    } else if (ring_name == "GF") {
        specht::PrimeField ring(p);
        specht::SpechtModule<specht::PrimeField> module(ring, lambda, caps.tableau_n,
                                                        caps.terms);
        emit(ring, module.rep_matrix(g));
    } else {
        throw specht::invalid_input("--matrix-ring must be Z or GF");
    }
    write_output(out_path, body.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for Specht modules over prime fields: splitting-tail "
                 "groups, Sylow subgroups, Brauer correspondents and vertex lower-bound "
                 "certificates."};
    app.name("specht-workbench");

    std::string lambda_text;
    int p = 0;
    std::vector<std::string> mu_texts;
    bool all_mu = false;
    std::string json_path;
    std::uint64_t seed = 0;
    bool corpus_mode = false;
    int corpus_n = 7;
    bool endo_only = false;
    bool with_timings = false;
    std::string rep_matrix_cycles;
    std::string matrix_ring = "Z";
    std::string matrix_format = "json";
    std::string matrix_out = "-";
    specht::CertificateCaps caps;
    unsigned threads = 0;

    app.add_option("--lambda", lambda_text,
                   "Partition as a comma separated list, e.g. \"5,5,2,2,2,2\"");
    app.add_option("--p", p, "Prime characteristic");
    app.add_option("--mu", mu_texts,
                   "Splitting tail to certify (repeatable); the empty tail is always included");
    app.add_flag("--all-mu", all_mu, "Certify every splitting tail of lambda");
    app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
    app.add_option("--seed", seed, "Seed for randomized probes (default 0)");
    app.add_option("--cap-elems", caps.elements, "Group enumeration cap (default 1000000)");
    app.add_option("--cap-terms", caps.terms, "Polytabloid term cap (default 10000000)");
    app.add_option("--cap-dim", caps.dimension, "Module dimension cap (default 200)");
    app.add_option("--cap-tableau", caps.tableau_n,
                   "Standard tableau enumeration cap on n (default 14)");
    app.add_option("--cap-endo-dim", caps.endo_dimension,
                   "Module dimension cap for the endomorphism solve (default 48)");
    app.add_flag("--corpus", corpus_mode, "Run the frozen regression corpus and invariants");
    app.add_option("--corpus-n", corpus_n,
                   "Largest n swept by the corpus (default 7; the frozen corpus value)");
    app.add_flag("--endo-only", endo_only,
                 "Only compute the endomorphism algebra verdict for (lambda, p)");
    app.add_flag("--timings", with_timings,
                 "Include wall-clock timings in reports (breaks byte-for-byte determinism)");
    app.add_option("--rep-matrix", rep_matrix_cycles,
                   "Export the representation matrix of a permutation in cycle form");
    app.add_option("--matrix-ring", matrix_ring, "Ring for --rep-matrix: Z or GF (uses --p)");
    app.add_option("--matrix-format", matrix_format, "Format for --rep-matrix: json or mm");
    app.add_option("--matrix-out", matrix_out,
                   "Output path for --rep-matrix ('-' for stdout)");
    app.add_option("--threads", threads, "Worker threads for the corpus sweep (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (corpus_mode) {
            specht::CorpusOptions options;
            options.n_max = corpus_n;
            options.caps = caps;
            options.seed = seed;
            options.threads = threads;
            return run_corpus(options, json_path);
        }

        if (lambda_text.empty())
            throw specht::invalid_input("--lambda is required outside --corpus mode");
        const specht::Partition lambda = specht::Partition::parse(lambda_text);
        if (lambda.empty()) throw specht::invalid_input("lambda must be nonempty");

        if (!rep_matrix_cycles.empty())
            return run_rep_matrix(lambda, rep_matrix_cycles, matrix_ring, p, caps,
                                  matrix_format, matrix_out);

        if (p == 0) throw specht::invalid_input("--p is required");

        if (endo_only) return run_endo_only(lambda, p, caps, seed, json_path);

        specht::RunConfig config;
        config.lambda = lambda;
        config.p = p;
        config.caps = caps;
        config.seed = seed;
        config.with_timings = with_timings;
        if (all_mu && !mu_texts.empty())
            throw specht::invalid_input("--mu and --all-mu are mutually exclusive");
        if (all_mu) {
            config.mu_selection = specht::MuSelection::All;
        } else if (!mu_texts.empty()) {
            config.mu_selection = specht::MuSelection::Explicit;
            for (const auto& text : mu_texts)
                config.mus.push_back(specht::Partition::parse(text));
        }
        return run_report(config, json_path);
    } catch (const specht::invalid_input& e) {
        std::cerr << "error (invalid input): " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const specht::cap_exceeded& e) {
        std::cerr << "error (cap exceeded): " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const specht::consistency_error& e) {
        std::cerr << "error (internal consistency): " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnexpected;
    }
}
