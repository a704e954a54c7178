#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specht/certificate.hpp"
#include "specht/json_io.hpp"
#include "specht/version.hpp"

namespace specht {

enum class MuSelection { EmptyOnly, Explicit, All };

inline std::string mu_selection_name(MuSelection s) {
    switch (s) {
        case MuSelection::EmptyOnly: return "empty-only";
        case MuSelection::Explicit: return "explicit";
        case MuSelection::All: return "all";
    }
    return "?";
}

struct RunConfig {
    Partition lambda;
    int p = 2;
    MuSelection mu_selection = MuSelection::EmptyOnly;
    std::vector<Partition> mus; // for Explicit
    CertificateCaps caps;
    std::uint64_t seed = 0;
    bool with_timings = false;
};

struct MuRow {
    SplittingContext ctx;
    VertexCertificate cert;
    bool improvement = false; // Sylow order strictly above the empty-tail row's
    double seconds = 0.0;
};

struct Report {
    RunConfig config;
    BigInt dim_specht;
    std::vector<MuRow> rows; // row 0 is always the empty tail
    bool partial = false;    // some row is structural-only
};

// Runs the certificate pipeline for the selected tails. The empty tail is
// always included as the baseline row.
inline Report run(const RunConfig& config) {
    Report report;
    report.config = config;

    const auto contexts = splitting_partitions(config.lambda);
    std::vector<int> selected = {0};
    switch (config.mu_selection) {
        case MuSelection::EmptyOnly:
            break;
        case MuSelection::All:
            for (int i = 1; i < static_cast<int>(contexts.size()); ++i) selected.push_back(i);
            break;
        case MuSelection::Explicit:
            for (const Partition& mu : config.mus) {
                if (mu.empty()) continue;
                int found = -1;
                for (int i = 1; i < static_cast<int>(contexts.size()); ++i)
                    if (contexts[static_cast<std::size_t>(i)].mu == mu) {
                        found = i;
                        break;
                    }
                if (found < 0)
                    throw invalid_input("mu = " + mu.display() +
                                        " is not a splitting partition of lambda = " +
                                        config.lambda.display());
                bool dup = false;
                for (int i : selected) dup = dup || i == found;
                if (!dup) selected.push_back(found);
            }
            break;
    }

    CertificateSession session(config.lambda, config.p, config.caps, config.seed);
    report.dim_specht = session.dim_specht();
    for (int index : selected) {
        const auto start = std::chrono::steady_clock::now();
        MuRow row;
        row.ctx = contexts[static_cast<std::size_t>(index)];
        row.cert = vertex_certificate(session, row.ctx);
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.partial = report.partial || row.cert.structural_only;
        report.rows.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        report.rows[i].improvement =
            report.rows[i].cert.sylow_order > report.rows[0].cert.sylow_order;
    return report;
}

inline Json cycle_list_json(const std::vector<Perm>& perms) {
    Json out = Json::array();
    for (const Perm& g : perms) out.push_back(g.cycle_string());
    return out;
}

inline Json certificate_json(const VertexCertificate& cert,
                             std::optional<double> seconds = std::nullopt) {
    Json j;
    j["lambda"] = partition_json(cert.lambda);
    j["p"] = cert.p;
    j["mu"] = partition_json(cert.mu);
    j["sylow_order"] = cert.sylow_order.str();
    j["generators"] = cycle_list_json(cert.sylow_generators);
    j["fixed_ok"] = cert.fixed_ok ? Json(*cert.fixed_ok) : Json(nullptr);
    j["not_trace_ok"] = cert.not_trace_ok ? Json(*cert.not_trace_ok) : Json(nullptr);
    j["brauer_dim"] = cert.brauer_dim ? Json(*cert.brauer_dim) : Json(nullptr);
    j["verdict"] = cert.verdict ? Json(verdict_name(*cert.verdict)) : Json(nullptr);
    j["timings"] = seconds ? Json{{"seconds", *seconds}} : Json(nullptr);

    j["eta"] = partition_json(cert.eta);
    j["dim_specht"] = cert.dim_specht.str();
    j["mode"] = cert.structural_only ? "structural-only" : "full";
    if (cert.structural_only) j["structural_reason"] = cert.structural_reason;
    j["group"] = Json{{"order", cert.group_order.str()},
                      {"type", cert.group_type},
                      {"generators", cycle_list_json(cert.group_generators)}};
    Json lemma;
    lemma["holds"] = cert.lemma.holds;
    lemma["structural_ran"] = cert.lemma.structural_ran;
    lemma["expansion_ran"] = cert.lemma.expansion_ran;
    lemma["counterexample"] =
        cert.lemma.counterexample ? Json(cert.lemma.counterexample->cycle_string()) : Json(nullptr);
    j["lemma_fixed_point"] = lemma;
    j["fixed_dim"] = cert.fixed_dim ? Json(*cert.fixed_dim) : Json(nullptr);
    j["trace_dim"] = cert.trace_dim ? Json(*cert.trace_dim) : Json(nullptr);
    j["endo"] = Json{{"dim_endo", cert.dim_endo ? Json(*cert.dim_endo) : Json(nullptr)},
                     {"method", cert.endo_method}};
    j["theorem_claim"] = cert.theorem_claim;
    return j;
}

inline Json caps_json(const CertificateCaps& caps) {
    Json j;
    j["elements"] = caps.elements;
    j["terms"] = caps.terms;
    j["dimension"] = caps.dimension;
    j["tableau_n"] = caps.tableau_n;
    j["endo_exhaustive"] = caps.endo_exhaustive;
    j["endo_samples"] = caps.endo_samples;
    j["endo_dimension"] = caps.endo_dimension;
    return j;
}

inline Json report_json(const Report& report) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    Json config;
    config["lambda"] = partition_json(report.config.lambda);
    config["p"] = report.config.p;
    config["mu_selection"] = mu_selection_name(report.config.mu_selection);
    Json mus = Json::array();
    for (const auto& mu : report.config.mus) mus.push_back(partition_json(mu));
    config["mus"] = mus;
    config["seed"] = report.config.seed;
    config["caps"] = caps_json(report.config.caps);
    j["config"] = config;
    j["n"] = report.config.lambda.n();
    j["dim_specht"] = report.dim_specht.str();
    j["t_star"] = tableau_json(t_star(report.config.lambda));
    j["partial"] = report.partial;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r = certificate_json(row.cert, report.config.with_timings
                                                ? std::optional<double>(row.seconds)
                                                : std::nullopt);
        r["improvement_over_empty_mu"] = row.improvement;
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    return j;
}

inline std::string report_text(const Report& report) {
    std::ostringstream out;
    out << kToolName << " " << kVersion << "\n";
    out << "lambda = " << report.config.lambda.display() << "   n = " << report.config.lambda.n()
        << "   p = " << report.config.p << "   dim S^lambda = " << report.dim_specht.str()
        << "\n\n";
    const auto& base = report.rows.front();
    for (const auto& row : report.rows) {
        const auto& c = row.cert;
        out << "mu = " << c.mu.display() << "\n";
        out << "  L_mu(t*) = " << (c.group_type.empty() ? "?" : c.group_type)
            << ", |L| = " << c.group_order.str() << ", Sylow_" << c.p << " order "
            << c.sylow_order.str() << "\n";
        out << "  group generators: ";
        for (std::size_t i = 0; i < c.group_generators.size(); ++i)
            out << (i ? ", " : "") << c.group_generators[i].cycle_string();
        if (c.group_generators.empty()) out << "(none)";
        out << "\n";
        out << "  sylow generators: ";
        for (std::size_t i = 0; i < c.sylow_generators.size(); ++i)
            out << (i ? ", " : "") << c.sylow_generators[i].cycle_string();
        if (c.sylow_generators.empty()) out << "(none)";
        out << "\n";
        if (&row != &base)
            out << "  improves the empty-tail Sylow order ("
                << base.cert.sylow_order.str() << "): " << (row.improvement ? "yes" : "no")
                << "\n";
        // hook shapes with the all-ones tail: the bound is known to be sharp
        // away from the characteristic
        {
            const auto& lambda = c.lambda;
            const int k = c.mu.rows();
            const bool all_ones_tail = k >= 1 && c.mu.part(0) == 1;
            const bool hook = lambda.rows() == k + 1 && lambda.first_part() >= 2;
            if (all_ones_tail && hook) {
                if (lambda.n() % c.p == 0)
                    out << "  hook tail: attainment of this bound is known only for p "
                           "not dividing n (here p | n)\n";
                else
                    out << "  hook tail: p does not divide n, where this bound is known "
                           "to be attained\n";
            }
        }
        out << "  lemma fixed-point check: " << (c.lemma.holds ? "holds" : "FAILS")
            << (c.lemma.structural_ran ? " [structural]" : "")
            << (c.lemma.expansion_ran ? " [expansion]" : "") << "\n";
        if (c.structural_only) {
            out << "  certificate: structural-only (" << c.structural_reason << ")\n";
        } else {
            out << "  e_{t*} fixed: " << (*c.fixed_ok ? "yes" : "NO")
                << "; e_{t*} outside trace subspace: " << (*c.not_trace_ok ? "yes" : "NO")
                << "; dim fixed = " << *c.fixed_dim << ", dim trace = " << *c.trace_dim
                << ", Brauer quotient dim = " << *c.brauer_dim << "\n";
            out << "  endomorphism algebra: dim " << *c.dim_endo << ", verdict "
                << verdict_name(*c.verdict) << " (" << c.endo_method << ")\n";
            out << "  vertex bound certified: " << (c.theorem_claim ? "YES" : "not claimed")
                << "\n";
        }
        if (report.config.with_timings) out << "  seconds: " << row.seconds << "\n";
        out << "\n";
    }
    return out.str();
}

} // namespace specht
