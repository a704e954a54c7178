#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specht/brauer.hpp"
#include "specht/endo.hpp"
#include "specht/errors.hpp"
#include "specht/numbers.hpp"
#include "specht/partition.hpp"
#include "specht/perm_group.hpp"
#include "specht/specht_module.hpp"

namespace specht {

inline constexpr int kDefaultDimensionCap = 200;

struct CertificateCaps {
    std::size_t elements = kDefaultElementCap;
    std::size_t terms = kDefaultTermCap;
    int dimension = kDefaultDimensionCap;
    int tableau_n = kDefaultTableauCap;
    std::uint64_t endo_exhaustive = kDefaultEndoExhaustiveCap;
    int endo_samples = kDefaultEndoSamples;
    // The commutant solve is a dense d^2-variable system, so it gets a much
    // tighter dimension budget than the fixed/trace computations.
    int endo_dimension = 48;
};

// The verified facts about one (lambda, p, mu) triple. The linear-algebra
// fields are empty on a structural-only certificate, and the headline claim
// is made only when membership, non-membership and indecomposability all
// landed.
struct VertexCertificate {
    Partition lambda;
    int p = 2;
    Partition mu;
    Partition eta;

    BigInt group_order;                 // |L_mu(t*)|, closed form
    std::string group_type;             // "S_3 x S_4" style
    std::vector<Perm> group_generators;
    BigInt sylow_order;
    std::vector<Perm> sylow_generators;

    BigInt dim_specht;                  // hook length count
    bool structural_only = false;
    std::string structural_reason;

    Lemma31Result lemma;
    std::optional<bool> fixed_ok;       // e_{t*} lies in the P-fixed subspace
    std::optional<bool> not_trace_ok;   // e_{t*} avoids the trace subspace
    std::optional<int> fixed_dim;
    std::optional<int> trace_dim;
    std::optional<int> brauer_dim;
    std::optional<Verdict> verdict;
    std::optional<int> dim_endo;
    std::string endo_method;
    bool theorem_claim = false;
};

// Shared per-(lambda, p) state: the standard basis, the module over GF(p)
// with its caches, and the lazily computed indecomposability verdict, reused
// by the certificates of every splitting tail.
class CertificateSession {
public:
    CertificateSession(Partition lambda, int p, CertificateCaps caps = {},
                       std::uint64_t seed = 0)
        : lambda_(std::move(lambda)), p_(p), caps_(caps), seed_(seed),
          dim_(syt_count(lambda_)) {
        detail::check_prime(p);
        if (lambda_.empty()) throw invalid_input("lambda must be a nonempty partition");
        if (dim_ > caps_.dimension) {
            skip_reason_ = "dim S = " + dim_.str() + " exceeds the dimension cap of " +
                           std::to_string(caps_.dimension);
        } else if (lambda_.n() > caps_.tableau_n) {
            skip_reason_ = "n = " + std::to_string(lambda_.n()) +
                           " exceeds the tableau enumeration cap of " +
                           std::to_string(caps_.tableau_n);
        } else {
            basis_ = std::make_shared<const StandardBasis>(lambda_, caps_.tableau_n);
            module_.emplace(PrimeField(p), basis_, caps_.terms);
        }
    }

    const Partition& lambda() const { return lambda_; }
    int p() const { return p_; }
    const CertificateCaps& caps() const { return caps_; }
    const BigInt& dim_specht() const { return dim_; }
    bool full_mode() const { return module_.has_value(); }
    const std::string& skip_reason() const { return skip_reason_; }
    SpechtModule<PrimeField>& module() { return *module_; }

    const DecompositionResult& decomposition() {
        if (!decomposition_) {
            if (module_->dimension() > caps_.endo_dimension)
                throw cap_exceeded("endomorphism solve capped at module dimension " +
                                   std::to_string(caps_.endo_dimension));
            const EndoAlgebra algebra = endomorphism_basis(*module_);
            decomposition_ = indecomposability_verdict(algebra, caps_.endo_exhaustive,
                                                       caps_.endo_samples, seed_);
        }
        return *decomposition_;
    }

private:
    Partition lambda_;
    int p_;
    CertificateCaps caps_;
    std::uint64_t seed_;
    BigInt dim_;
    std::string skip_reason_;
    std::shared_ptr<const StandardBasis> basis_;
    std::optional<SpechtModule<PrimeField>> module_;
    std::optional<DecompositionResult> decomposition_;
};

inline VertexCertificate vertex_certificate(CertificateSession& session,
                                            const SplittingContext& ctx) {
    if (!(ctx.lambda == session.lambda()))
        throw invalid_input("vertex_certificate: context does not match the session shape");
    const int p = session.p();
    const CertificateCaps& caps = session.caps();

    VertexCertificate cert;
    cert.lambda = session.lambda();
    cert.p = p;
    cert.mu = ctx.mu;
    cert.eta = ctx.eta;
    cert.dim_specht = session.dim_specht();

    const Tableau tstar = t_star(session.lambda());
    const PermGroup L = l_group(ctx, tstar);
    const PermGroup P = sylow_p(L, p, caps.elements);
    cert.group_order = L.order();
    cert.group_type = L.abstract_type();
    cert.group_generators = L.generators();
    cert.sylow_order = P.order();
    cert.sylow_generators = P.generators();

    cert.lemma = lemma31_check(ctx, tstar, p, caps.terms);

    if (!session.full_mode()) {
        cert.structural_only = true;
        cert.structural_reason = session.skip_reason();
        cert.fixed_ok = cert.lemma.holds;
        return cert;
    }

    try {
        SpechtModule<PrimeField>& module = session.module();
        const PrimeField& F = module.ring();

        const auto tstar_index = module.basis().index_of(Tabloid::of(tstar));
        if (!tstar_index || *tstar_index != 0)
            throw consistency_error("t_star is not the first standard basis element");
        std::vector<std::int64_t> unit(static_cast<std::size_t>(module.dimension()), F.zero());
        unit[0] = F.one();

        const Subspace fixed = fixed_space(module, P);
        const Subspace trace = trace_subspace(module, P, p, caps.elements);
        if (!fixed.contains_subspace(trace))
            throw consistency_error("trace subspace is not contained in the fixed subspace");

        cert.fixed_ok = fixed.contains(unit);
        if (cert.lemma.holds && !*cert.fixed_ok)
            throw consistency_error("lemma check and fixed-space membership disagree");
        cert.not_trace_ok = !trace.contains(unit);
        cert.fixed_dim = fixed.dim();
        cert.trace_dim = trace.dim();
        cert.brauer_dim = fixed.dim() - trace.dim();

        if (module.dimension() <= caps.endo_dimension) {
            const DecompositionResult& endo = session.decomposition();
            cert.verdict = endo.verdict;
            cert.dim_endo = endo.dim_endo;
            cert.endo_method = endo.method;
            cert.theorem_claim = *cert.fixed_ok && *cert.not_trace_ok &&
                                 endo.verdict == Verdict::Indecomposable;
        } else {
            cert.endo_method = "skipped: module dimension over the endomorphism cap";
        }
    } catch (const cap_exceeded& e) {
        cert.structural_only = true;
        cert.structural_reason = e.what();
        cert.fixed_ok = cert.lemma.holds;
        cert.not_trace_ok.reset();
        cert.fixed_dim.reset();
        cert.trace_dim.reset();
        cert.brauer_dim.reset();
        cert.verdict.reset();
        cert.dim_endo.reset();
        cert.endo_method.clear();
        cert.theorem_claim = false;
    }
    return cert;
}

// Convenience entry point building a one-shot session.
inline VertexCertificate vertex_certificate(const Partition& lambda, int p,
                                            const SplittingContext& ctx,
                                            const CertificateCaps& caps = {},
                                            std::uint64_t seed = 0) {
    CertificateSession session(lambda, p, caps, seed);
    return vertex_certificate(session, ctx);
}

} // namespace specht
