#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/matrix.hpp"
#include "specht/perm_group.hpp"
#include "specht/specht_module.hpp"

namespace specht {

// Common fixed subspace of the generators of Q, as row vectors in the
// standard basis. Fixing the generators fixes the whole group.
inline Subspace fixed_space(const SpechtModule<PrimeField>& module, const PermGroup& Q) {
    const PrimeField& F = module.ring();
    const int d = module.dimension();
    const auto& gens = Q.generators();
    if (gens.empty()) return Subspace::full(F, d);

    Matrix<PrimeField> stacked(static_cast<int>(gens.size()) * d, d, F.zero());
    int base = 0;
    for (const Perm& g : gens) {
        const auto& m = module.rep_matrix(g);
        // v·M = v  <=>  (M^T - I)·v^T = 0
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                auto entry = m.at(j, i);
                if (i == j) entry = F.sub(entry, F.one());
                stacked.at(base + i, j) = entry;
            }
        base += d;
    }
    return Subspace::span(F, kernel_basis(F, std::move(stacked)));
}

// Sum of v·g over explicit right coset representatives.
inline std::vector<std::int64_t> relative_trace_over(const SpechtModule<PrimeField>& module,
                                                     const std::vector<std::int64_t>& v,
                                                     const std::vector<Perm>& reps) {
    const PrimeField& F = module.ring();
    std::vector<std::int64_t> out(v.size(), F.zero());
    for (const Perm& g : reps) {
        const auto vg = module.act_coords(v, g);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(out[i], vg[i]);
    }
    return out;
}

// Sum of v·g over right coset representatives of R in Q. Requires R <= Q and
// v fixed by R; the result is fixed by Q and does not depend on the choice of
// representatives.
inline std::vector<std::int64_t> relative_trace(const SpechtModule<PrimeField>& module,
                                                const std::vector<std::int64_t>& v,
                                                const PermGroup& R, const PermGroup& Q,
                                                std::size_t element_cap = kDefaultElementCap) {
    const PrimeField& F = module.ring();
    for (const Perm& g : R.generators()) {
        const auto vg = module.act_coords(v, g);
        if (vg != v) throw invalid_input("relative_trace: vector is not fixed by R");
    }
    (void)F;
    return relative_trace_over(module, v, right_coset_reps(R, Q, element_cap));
}

// Sum over the maximal subgroups R of Q of the images of V^R under the
// relative trace into Q, in canonical echelon form.
inline Subspace trace_subspace(const SpechtModule<PrimeField>& module, const PermGroup& Q,
                               int p, std::size_t element_cap = kDefaultElementCap) {
    const PrimeField& F = module.ring();
    Subspace total(F, module.dimension());
    for (const PermGroup& R : maximal_subgroups(Q, p, element_cap)) {
        const Subspace vr = fixed_space(module, R);
        const auto reps = right_coset_reps(R, Q, element_cap);
        Matrix<PrimeField> rows(vr.dim(), module.dimension(), F.zero());
        for (int r = 0; r < vr.dim(); ++r) {
            const auto tr = relative_trace_over(module, vr.basis().row(r), reps);
            for (int j = 0; j < module.dimension(); ++j)
                rows.at(r, j) = tr[static_cast<std::size_t>(j)];
        }
        total = total.sum(Subspace::span(F, std::move(rows)));
    }
    return total;
}

inline int brauer_dim(const SpechtModule<PrimeField>& module, const PermGroup& Q, int p,
                      std::size_t element_cap = kDefaultElementCap) {
    const Subspace fixed = fixed_space(module, Q);
    const Subspace trace = trace_subspace(module, Q, p, element_cap);
    if (!fixed.contains_subspace(trace))
        throw consistency_error("trace subspace is not contained in the fixed subspace");
    return fixed.dim() - trace.dim();
}

enum class Lemma31Strategy { Auto, Structural, Expansion };

struct Lemma31Result {
    bool holds = true;
    bool structural_ran = false;
    bool expansion_ran = false;
    std::optional<Perm> counterexample;
};

// Expansion cap used by the automatic strategy; above it only the structural
// route runs.
inline constexpr std::size_t kLemmaExpansionCap = 100'000;

// Checks that every generator of the Sylow p-subgroup of L_mu(t) fixes the
// polytabloid of t over GF(p).
//
// Structural route, generator by generator: a generator supported inside the
// trailing subtableau must stabilize rows and permute columns of t as blocks
// (so conjugating the column stabilizer leaves it and the tabloid fixed); a
// generator supported inside the bottom subtableau must stabilize columns
// and, for odd p, be even. Expansion route: compare the acted polytabloid
// with the original, term by term.
inline Lemma31Result lemma31_check(const SplittingContext& ctx, const Tableau& t, int p,
                                   std::size_t term_cap = kDefaultTermCap,
                                   Lemma31Strategy strategy = Lemma31Strategy::Auto) {
    const PermGroup P = sylow_p(l_group(ctx, t), p);
    const Tableau u = subtableau_u(ctx, t);
    const Tableau z = subtableau_z(ctx, t);
    const auto u_supp = u.support();
    const auto z_supp = z.support();

    auto inside = [](const std::vector<int>& support, const std::vector<int>& set) {
        for (int x : support)
            if (!std::binary_search(set.begin(), set.end(), x)) return false;
        return true;
    };

    Lemma31Result result;

    const bool want_structural = strategy != Lemma31Strategy::Expansion;
    const std::size_t expansion_limit =
        strategy == Lemma31Strategy::Auto ? std::min(term_cap, kLemmaExpansionCap) : term_cap;
    const bool want_expansion = strategy != Lemma31Strategy::Structural &&
                                column_group_order(t) <= expansion_limit;
    if (strategy == Lemma31Strategy::Expansion && !want_expansion)
        throw cap_exceeded("lemma31_check: expansion strategy over the term budget");

    std::optional<bool> structural_verdict;
    std::optional<Perm> structural_witness;
    if (want_structural) {
        bool ok = true;
        bool applicable = true;
        for (const Perm& y : P.generators()) {
            const auto support = y.support();
            bool good;
            if (inside(support, u_supp))
                good = stabilizes_rows(t, y) && permutes_columns_as_blocks(t, y);
            else if (inside(support, z_supp))
                good = stabilizes_columns(t, y) && (p == 2 || y.sign() == 1);
            else {
                applicable = false;
                break;
            }
            if (!good) {
                ok = false;
                if (!structural_witness) structural_witness = y;
            }
        }
        if (applicable) {
            structural_verdict = ok;
            result.structural_ran = true;
        }
    }

    std::optional<bool> expansion_verdict;
    std::optional<Perm> expansion_witness;
    if (want_expansion) {
        const PrimeField F(p);
        const auto e_t = polytabloid(F, t, term_cap);
        bool ok = true;
        for (const Perm& y : P.generators()) {
            if (!(act(e_t, y) == e_t)) {
                ok = false;
                if (!expansion_witness) expansion_witness = y;
            }
        }
        expansion_verdict = ok;
        result.expansion_ran = true;
    }

    if (structural_verdict && expansion_verdict && *structural_verdict != *expansion_verdict)
        throw consistency_error("lemma31_check: structural and expansion strategies disagree");
    if (!structural_verdict && !expansion_verdict)
        throw cap_exceeded("lemma31_check: no verification strategy applicable");

    result.holds = structural_verdict ? *structural_verdict : *expansion_verdict;
    result.counterexample = structural_witness ? structural_witness : expansion_witness;
    return result;
}

} // namespace specht
