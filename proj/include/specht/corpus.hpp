#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "specht/report.hpp"

namespace specht {

struct Check {
    std::string module;
    std::string name;
    std::string input;
    bool pass = true;
    std::string detail;
};

inline void add_check(std::vector<Check>& checks, std::string module, std::string name,
                      std::string input, bool pass, std::string detail = "") {
    checks.push_back(Check{std::move(module), std::move(name), std::move(input), pass,
                           std::move(detail)});
}

// All fillings of the shape whose columns increase downwards: every way to
// distribute {1..n} over the columns, each column sorted.
inline std::vector<Tableau> column_standard_fillings(const Partition& shape) {
    const auto col_lengths = shape.column_lengths();
    const int n = shape.n();
    std::vector<std::vector<int>> columns(col_lengths.size());
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<Tableau> out;

    auto build = [&]() {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
        for (int r = 0; r < shape.rows(); ++r)
            for (int c = 0; c < shape.part(r); ++c)
                rows[static_cast<std::size_t>(r)].push_back(
                    columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
        out.push_back(Tableau(shape, std::move(rows)));
    };

    auto fill_col = [&](auto&& self, std::size_t c) -> void {
        if (c == columns.size()) {
            build();
            return;
        }
        const int len = col_lengths[c];
        std::vector<int> chosen;
        auto choose = [&](auto&& inner, int from) -> void {
            if (static_cast<int>(chosen.size()) == len) {
                columns[c] = chosen;
                self(self, c + 1);
                return;
            }
            for (int e = from; e <= n; ++e) {
                if (used[static_cast<std::size_t>(e - 1)]) continue;
                used[static_cast<std::size_t>(e - 1)] = true;
                chosen.push_back(e);
                inner(inner, e + 1);
                chosen.pop_back();
                used[static_cast<std::size_t>(e - 1)] = false;
            }
        };
        choose(choose, 1);
    };
    fill_col(fill_col, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Standard basis battery: rank of the standard polytabloid family and the
// unitriangular expansion of every column-standard filling, per ring.
// ---------------------------------------------------------------------------

namespace detail {

template <class Ring>
Matrix<Ring> polytabloid_family_matrix(const Ring& ring, const SpechtModule<Ring>& module) {
    std::map<Tabloid, int> column_of;
    std::vector<const TabloidVector<Ring>*> polys;
    for (int i = 0; i < module.dimension(); ++i) {
        const auto& e = module.standard_polytabloid(i);
        polys.push_back(&e);
        for (const auto& [key, c] : e.terms())
            column_of.emplace(key, static_cast<int>(column_of.size()));
    }
    Matrix<Ring> m(module.dimension(), static_cast<int>(column_of.size()), ring.zero());
    for (int i = 0; i < module.dimension(); ++i)
        for (const auto& [key, c] : polys[static_cast<std::size_t>(i)]->terms())
            m.at(i, column_of.at(key)) = c;
    return m;
}

template <class Ring>
void unitriangular_checks(std::vector<Check>& checks, const Ring& ring,
                          const SpechtModule<Ring>& module, const std::string& input) {
    const auto& basis = module.basis();
    bool coeff_ok = true, support_ok = true;
    std::string witness;
    for (const Tableau& v : column_standard_fillings(module.shape())) {
        const Tableau vbar = row_straighten(v);
        if (!vbar.standard()) {
            coeff_ok = false;
            witness = "row straightening of a column-standard filling is not standard";
            break;
        }
        const auto idx = basis.index_of(Tabloid::of(vbar));
        const auto coords = module.coords_of_polytabloid(v);
        if (!idx || !(coords[static_cast<std::size_t>(*idx)] == ring.one())) {
            coeff_ok = false;
            witness = "leading coefficient at " + std::to_string(idx ? *idx : -1);
            break;
        }
        for (int j = 0; j < module.dimension(); ++j) {
            if (j == *idx || ring.is_zero(coords[static_cast<std::size_t>(j)])) continue;
            if (!dominance_leq(basis.tableau(j), vbar) || j < *idx) {
                support_ok = false;
                witness = "support term " + std::to_string(j) + " not strictly dominated";
                break;
            }
        }
        if (!support_ok) break;
    }
    add_check(checks, "specht_modules", "unitriangular-" + ring.descriptor(), input,
              coeff_ok && support_ok, witness);
}

} // namespace detail

inline std::vector<Check> standard_basis_battery(int n_max, int tableau_cap = kDefaultTableauCap,
                                                 std::size_t term_cap = kDefaultTermCap) {
    std::vector<Check> checks;
    for (int n = 1; n <= n_max; ++n) {
        for (const Partition& shape : all_partitions(n)) {
            const std::string input = "lambda=" + shape.display();
            auto basis = std::make_shared<const StandardBasis>(shape, tableau_cap);
            add_check(checks, "specht_modules", "dimension-hook-count", input,
                      BigInt(basis->dimension()) == syt_count(shape));

            {
                IntegerRing Z;
                SpechtModule<IntegerRing> module(Z, basis, term_cap);
                const auto family = detail::polytabloid_family_matrix(Z, module);
                add_check(checks, "specht_modules", "standard-basis-rank-Z", input,
                          integer_rank(family) == module.dimension());
                detail::unitriangular_checks(checks, Z, module, input);
            }
            for (int p : {2, 3, 5}) {
                PrimeField F(p);
                SpechtModule<PrimeField> module(F, basis, term_cap);
                const auto family = detail::polytabloid_family_matrix(F, module);
                add_check(checks, "specht_modules",
                          "standard-basis-rank-" + F.descriptor(), input,
                          field_rank(F, family) == module.dimension());
                detail::unitriangular_checks(checks, F, module, input);
            }
        }
    }
    return checks;
}

// ---------------------------------------------------------------------------
// Brauer oracle battery for one p-group: containment, representative
// independence, transitivity, and the maximal-vs-all-proper trace sum.
// ---------------------------------------------------------------------------

inline std::vector<Check> brauer_oracle_battery(const SpechtModule<PrimeField>& module,
                                                const PermGroup& Q, int p, std::uint64_t seed,
                                                const std::string& input,
                                                std::size_t element_cap = kDefaultElementCap) {
    std::vector<Check> checks;
    const PrimeField& F = module.ring();
    std::mt19937_64 rng(seed);

    const Subspace fixed = fixed_space(module, Q);
    const Subspace trace = trace_subspace(module, Q, p, element_cap);
    add_check(checks, "brauer_vertex", "trace-inside-fixed", input,
              fixed.contains_subspace(trace));

    const auto maximals = maximal_subgroups(Q, p, element_cap);

    bool independence = true;
    for (const PermGroup& R : maximals) {
        const auto canonical = right_coset_reps(R, Q, element_cap);
        const auto& relems = R.elements(element_cap);
        std::uniform_int_distribution<std::size_t> pick(0, relems.size() - 1);
        std::vector<Perm> shuffled;
        for (const Perm& rep : canonical) shuffled.push_back(relems[pick(rng)] * rep);
        const Subspace vr = fixed_space(module, R);
        for (int r = 0; r < vr.dim() && independence; ++r) {
            const auto v = vr.basis().row(r);
            independence = relative_trace_over(module, v, canonical) ==
                           relative_trace_over(module, v, shuffled);
        }
        if (!independence) break;
    }
    add_check(checks, "brauer_vertex", "trace-representative-independence", input, independence);

    bool transitivity = true;
    if (Q.elements(element_cap).size() >= static_cast<std::size_t>(p) * static_cast<std::size_t>(p)) {
        for (const PermGroup& mid : maximals) {
            for (const PermGroup& R : maximal_subgroups(mid, p, element_cap)) {
                const Subspace vr = fixed_space(module, R);
                for (int r = 0; r < vr.dim() && transitivity; ++r) {
                    const auto v = vr.basis().row(r);
                    const auto direct = relative_trace(module, v, R, Q, element_cap);
                    const auto inner = relative_trace(module, v, R, mid, element_cap);
                    const auto nested = relative_trace(module, inner, mid, Q, element_cap);
                    transitivity = direct == nested;
                }
                if (!transitivity) break;
            }
            if (!transitivity) break;
        }
    }
    add_check(checks, "brauer_vertex", "trace-transitivity", input, transitivity);

    // Sum over every proper subgroup, maximal or not, against the
    // maximal-only sum actually used.
    Subspace all_proper(F, module.dimension());
    for (const PermGroup& R : all_subgroups(Q, element_cap)) {
        if (R.elements(element_cap).size() == Q.elements(element_cap).size()) continue;
        const Subspace vr = fixed_space(module, R);
        const auto reps = right_coset_reps(R, Q, element_cap);
        Matrix<PrimeField> rows(vr.dim(), module.dimension(), F.zero());
        for (int r = 0; r < vr.dim(); ++r) {
            const auto tr = relative_trace_over(module, vr.basis().row(r), reps);
            for (int j = 0; j < module.dimension(); ++j)
                rows.at(r, j) = tr[static_cast<std::size_t>(j)];
        }
        all_proper = all_proper.sum(Subspace::span(F, std::move(rows)));
    }
    add_check(checks, "brauer_vertex", "maximal-equals-all-proper-sum", input,
              all_proper == trace);

    return checks;
}

// ---------------------------------------------------------------------------
// Frozen worked examples at shapes (5,5,2,2,2,2) and (6,6,6,3,3,3,3,3,3).
// ---------------------------------------------------------------------------

inline std::vector<Check> figure_example_checks() {
    std::vector<Check> checks;
    {
        const Partition shape({5, 5, 2, 2, 2, 2});
        const std::string input = "lambda=" + shape.display();
        const Tableau t = t_star(shape);

        const PermGroup H = h_group(t);
        const PermGroup expected_h(
            18, {Perm::parse_cycles(18, "(3,4,5)(8,9,10)"), Perm::parse_cycles(18, "(3,4)(8,9)"),
                 Perm::parse_cycles(18, "(1,2)(6,7)(11,12)(13,14)(15,16)(17,18)")});
        add_check(checks, "perm_groups", "figure1-h-group-elements", input,
                  H.same_elements(expected_h));
        add_check(checks, "perm_groups", "figure1-h-group-order", input,
                  H.elements().size() == 12 && H.order() == 12);
        add_check(checks, "perm_groups", "figure1-h-group-type", input,
                  H.factor_sizes() == std::vector<int>({2, 3}));

        const auto ctx = make_splitting_context(shape, 1);
        add_check(checks, "young_combinatorics", "figure1-splitting-mu", input,
                  ctx.mu == Partition({2, 2, 2, 2}) && ctx.eta == Partition({3, 3}));

        const PermGroup U = u_group(ctx, t);
        const PermGroup Z = z_group(ctx, t);
        std::vector<std::string> u_gens, z_gens;
        for (const Perm& g : U.generators()) u_gens.push_back(g.cycle_string());
        for (const Perm& g : Z.generators()) z_gens.push_back(g.cycle_string());
        add_check(checks, "perm_groups", "figure1-u-generators-verbatim", input,
                  u_gens == std::vector<std::string>({"(3,4,5)(8,9,10)", "(3,4)(8,9)"}));
        add_check(checks, "perm_groups", "figure1-z-generators-verbatim", input,
                  z_gens == std::vector<std::string>(
                                {"(11,13,15,17)(12,14,16,18)", "(11,13)(12,14)"}));

        const PermGroup L = l_group(ctx, t);
        add_check(checks, "perm_groups", "figure1-l-group-order", input,
                  L.elements().size() == 144 && L.order() == 144);
        add_check(checks, "perm_groups", "figure1-l-group-type", input,
                  L.abstract_type() == "S_3 x S_4");
        for (int p : {2, 3}) {
            const auto lemma = lemma31_check(ctx, t, p);
            add_check(checks, "brauer_vertex",
                      "figure1-lemma-p" + std::to_string(p), input,
                      lemma.holds && lemma.structural_ran);
        }
        add_check(checks, "perm_groups", "figure1-sylow3-orders", input,
                  sylow_p(h_group(t), 3).order() == 3 && sylow_p(L, 3).order() == 9);
    }
    {
        const Partition shape({6, 6, 6, 3, 3, 3, 3, 3, 3});
        const std::string input = "lambda=" + shape.display();
        const Tableau t = t_star(shape);
        const auto ctx = make_splitting_context(shape, 1);
        add_check(checks, "young_combinatorics", "figure2-splitting-mu", input,
                  ctx.mu == Partition({3, 3, 3, 3, 3, 3}) && ctx.eta == Partition({3, 3, 3}));

        const Tableau u = subtableau_u(ctx, t);
        const Tableau z = subtableau_z(ctx, t);
        add_check(checks, "young_combinatorics", "figure2-subtableau-supports", input,
                  u.support() == std::vector<int>({4, 5, 6, 10, 11, 12, 16, 17, 18}) &&
                      z.support().front() == 19 && z.support().back() == 36 &&
                      z.support().size() == 18);

        const PermGroup L = l_group(ctx, t);
        const PermGroup P = sylow_p(L, 3);
        add_check(checks, "perm_groups", "figure2-sylow-order-27", input, P.order() == 27);

        std::vector<std::string> gens;
        for (const Perm& g : P.generators()) gens.push_back(g.cycle_string());
        const std::vector<std::string> expected = {"(4,5,6)(10,11,12)(16,17,18)",
                                                   "(19,22,25)(20,23,26)(21,24,27)",
                                                   "(28,31,34)(29,32,35)(30,33,36)"};
        add_check(checks, "perm_groups", "figure2-sylow-generators", input, gens == expected);

        const auto& elems = P.elements();
        bool elementary_abelian = elems.size() == 27;
        for (const Perm& x : elems)
            elementary_abelian = elementary_abelian && (x.is_identity() || x.order() == 3);
        for (const Perm& x : P.generators())
            for (const Perm& y : P.generators())
                elementary_abelian = elementary_abelian && x * y == y * x;
        add_check(checks, "perm_groups", "figure2-sylow-elementary-abelian", input,
                  elementary_abelian);

        const auto lemma = lemma31_check(ctx, t, 3);
        add_check(checks, "brauer_vertex", "figure2-lemma-structural", input,
                  lemma.holds && lemma.structural_ran && !lemma.expansion_ran);
    }
    return checks;
}

// ---------------------------------------------------------------------------
// Module invariant suites.
// ---------------------------------------------------------------------------

inline std::vector<Check> young_invariant_suite(std::uint64_t seed) {
    std::vector<Check> checks;
    std::mt19937_64 rng(seed);

    {
        bool ok = run_decomposition(Partition({5, 5, 2, 2, 2, 2})) ==
                      std::vector<std::pair<int, int>>({{5, 2}, {2, 4}}) &&
                  run_decomposition(Partition({3})) ==
                      std::vector<std::pair<int, int>>({{3, 1}}) &&
                  run_decomposition(Partition({6, 6, 6, 3, 3, 3, 3, 3, 3})) ==
                      std::vector<std::pair<int, int>>({{6, 3}, {3, 6}});
        add_check(checks, "young_combinatorics", "run-decomposition-frozen", "-", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 8 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const auto runs = run_decomposition(shape);
                std::vector<int> rebuilt;
                for (auto [value, mult] : runs)
                    rebuilt.insert(rebuilt.end(), static_cast<std::size_t>(mult), value);
                ok = rebuilt == shape.parts() &&
                     splitting_partitions(shape).size() == runs.size();
                for (std::size_t i = 0; i + 1 < runs.size(); ++i)
                    ok = ok && runs[i].first > runs[i + 1].first;
                if (!ok) break;
            }
        add_check(checks, "young_combinatorics", "runs-and-splitting-count", "n<=8", ok);
    }
    {
        const auto contexts = splitting_partitions(Partition({4, 3, 2}));
        bool ok = contexts.size() == 3 && contexts[0].mu.empty() &&
                  contexts[1].mu == Partition({2}) && contexts[2].mu == Partition({3, 2}) &&
                  contexts[0].eta == Partition({4, 3, 2}) &&
                  contexts[1].eta == Partition({2, 1}) && contexts[2].eta == Partition({1});
        add_check(checks, "young_combinatorics", "splitting-4-3-2-frozen", "lambda=[4,3,2]", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 10 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                ok = BigInt(standard_tableaux(shape).size()) == syt_count(shape);
                if (!ok) break;
            }
        add_check(checks, "young_combinatorics", "hook-count-vs-enumeration", "n<=10", ok);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 6 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const auto tableaux = standard_tableaux(shape);
                const Tableau star = t_star(shape);
                ok = tableaux.front() == star;
                for (std::size_t i = 0; i < tableaux.size() && ok; ++i) {
                    ok = tableaux[i].standard() && dominance_leq(tableaux[i], star);
                    // No later tableau may strictly dominate an earlier one.
                    for (std::size_t j = i + 1; j < tableaux.size() && ok; ++j)
                        ok = !(dominance_leq(tableaux[i], tableaux[j]) &&
                               !(tableaux[i] == tableaux[j]));
                }
                if (!ok) witness = "lambda=" + shape.display();
            }
        add_check(checks, "young_combinatorics", "basis-order-refines-dominance", "n<=6", ok,
                  witness);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 6 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const auto n_boxes = shape.n();
                std::vector<int> entries(static_cast<std::size_t>(n_boxes));
                std::iota(entries.begin(), entries.end(), 1);
                for (int trial = 0; trial < 4 && ok; ++trial) {
                    std::shuffle(entries.begin(), entries.end(), rng);
                    std::vector<std::vector<int>> rows;
                    int next = 0;
                    for (int part : shape.parts()) {
                        rows.emplace_back(entries.begin() + next, entries.begin() + next + part);
                        next += part;
                    }
                    const Tableau t(shape, rows);
                    const Tableau s = row_straighten(t);
                    ok = s.row_standard() && row_straighten(s) == s &&
                         Tabloid::of(s) == Tabloid::of(t);
                }
                if (!ok) break;
            }
        add_check(checks, "young_combinatorics", "row-straighten-idempotent", "n<=6", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 6 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const auto tableaux = standard_tableaux(shape);
                for (const auto& a : tableaux)
                    for (const auto& b : tableaux) {
                        if (dominance_leq(a, b) && dominance_leq(b, a) && !(a == b)) ok = false;
                        if (a == b && !dominance_leq(a, b)) ok = false;
                    }
                if (!ok) break;
            }
        add_check(checks, "young_combinatorics", "dominance-partial-order", "n<=6", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 7 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const Tableau star = t_star(shape);
                for (const auto& ctx : splitting_partitions(shape)) {
                    const auto zs = subtableau_z(ctx, star).support();
                    const auto us = subtableau_u(ctx, star).support();
                    std::vector<int> merged = zs;
                    merged.insert(merged.end(), us.begin(), us.end());
                    std::sort(merged.begin(), merged.end());
                    ok = merged.size() ==
                             static_cast<std::size_t>(ctx.mu.n() + ctx.eta.n()) &&
                         std::adjacent_find(merged.begin(), merged.end()) == merged.end();
                    if (!ok) break;
                }
                if (!ok) break;
            }
        add_check(checks, "young_combinatorics", "subtableau-supports-disjoint", "n<=7", ok);
    }
    return checks;
}

inline std::vector<Check> perm_group_invariant_suite(std::uint64_t seed) {
    std::vector<Check> checks;
    std::mt19937_64 rng(seed);
    constexpr std::size_t kOrderCheckCap = kDefaultElementCap;

    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 12 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const Tableau star = t_star(shape);
                for (const auto& ctx : splitting_partitions(shape)) {
                    const PermGroup L = l_group(ctx, star);
                    if (L.order() > kOrderCheckCap) continue;
                    ok = BigInt(L.elements(kOrderCheckCap).size()) == L.order();
                    if (!ok) {
                        witness = "lambda=" + shape.display() + " mu=" + ctx.mu.display();
                        break;
                    }
                }
                if (!ok) break;
            }
        add_check(checks, "perm_groups", "l-group-order-closed-form", "n<=12", ok, witness);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 7 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const Tableau star = t_star(shape);
                const PermGroup R = row_stabilizer(star);
                const PermGroup C = column_stabilizer(star);
                const PermGroup H = h_group(star);
                BigInt row_order = 1, col_order = 1;
                for (int part : shape.parts()) row_order *= factorial(part);
                for (int len : shape.column_lengths()) col_order *= factorial(len);
                ok = BigInt(R.elements().size()) == row_order &&
                     BigInt(C.elements().size()) == col_order && H.subgroup_of(R);
                for (const auto& ctx : splitting_partitions(shape)) {
                    const PermGroup U = u_group(ctx, star);
                    const PermGroup Z = z_group(ctx, star);
                    const PermGroup L = l_group(ctx, star);
                    ok = ok && U.subgroup_of(H) && Z.subgroup_of(C) &&
                         BigInt(L.elements().size()) ==
                             BigInt(U.elements().size()) * BigInt(Z.elements().size());
                    for (const Perm& g : U.generators())
                        ok = ok && stabilizes_rows(star, g) &&
                             permutes_columns_as_blocks(star, g);
                    for (const Perm& g : Z.generators()) ok = ok && stabilizes_columns(star, g);
                }
                if (!ok) break;
            }
        add_check(checks, "perm_groups", "subgroup-tower-and-block-actions", "n<=7", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 6 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                std::vector<int> entries(static_cast<std::size_t>(shape.n()));
                std::iota(entries.begin(), entries.end(), 1);
                std::shuffle(entries.begin(), entries.end(), rng);
                std::vector<std::vector<int>> rows;
                int next = 0;
                for (int part : shape.parts()) {
                    rows.emplace_back(entries.begin() + next, entries.begin() + next + part);
                    next += part;
                }
                const Tableau star = t_star(shape);
                const Tableau other(shape, rows);
                const Perm g = tableau_map(star, other);
                ok = act(star, g) == other;
                for (const auto& ctx : splitting_partitions(shape))
                    ok = ok && conjugated(l_group(ctx, star), g)
                                   .same_elements(l_group(ctx, other));
                if (!ok) break;
            }
        add_check(checks, "perm_groups", "l-groups-conjugate-under-tableau-maps", "n<=6", ok);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 7 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const Tableau star = t_star(shape);
                for (const auto& ctx : splitting_partitions(shape)) {
                    const PermGroup L = l_group(ctx, star);
                    for (int p : {2, 3}) {
                        const PermGroup P = sylow_p(L, p);
                        const auto& elems = P.elements();
                        ok = BigInt(elems.size()) == p_part(L.order(), p) &&
                             BigInt(elems.size()) == P.order() && P.subgroup_of(L);
                        for (const Perm& x : elems) ok = ok && x.is_p_element(p);
                        if (!ok) break;
                    }
                    const PermGroup PZ = sylow_p(z_group(ctx, star), 3);
                    for (const Perm& x : PZ.elements()) ok = ok && x.sign() == 1;
                    if (!ok) {
                        witness = "lambda=" + shape.display() + " mu=" + ctx.mu.display();
                        break;
                    }
                }
                if (!ok) break;
            }
        add_check(checks, "perm_groups", "sylow-order-and-p-elements", "n<=7", ok, witness);
    }
    {
        // Wreath-tower Sylow orders against the factorial p-valuation.
        bool ok = true;
        for (int p : {2, 3, 5})
            for (int m = 1; m <= 8; ++m) {
                std::vector<std::vector<int>> blocks;
                for (int i = 1; i <= m; ++i) blocks.push_back({i});
                PermGroup sym(m, {}, std::vector<SymmetricFactor>{SymmetricFactor{blocks}});
                const PermGroup P = sylow_p(sym, p);
                ok = ok && BigInt(P.elements().size()) == pow_int(p, nu_p_factorial(m, p));
            }
        add_check(checks, "perm_groups", "wreath-tower-sylow-orders", "S_m, m<=8", ok);
    }
    {
        // Brute-force Sylow on a structure-stripped group.
        const Partition shape({3, 1, 1});
        const Tableau star = t_star(shape);
        const auto ctx = make_splitting_context(shape, 1);
        const PermGroup L = l_group(ctx, star);
        bool ok = true;
        for (int p : {2, 3}) {
            const PermGroup stripped(L.degree(), L.generators());
            const PermGroup P = sylow_p(stripped, p);
            ok = ok && BigInt(P.elements().size()) == p_part(BigInt(L.elements().size()), p) &&
                 is_p_group(P, p);
        }
        add_check(checks, "perm_groups", "brute-force-sylow", "lambda=[3,1,1]", ok);
    }
    {
        bool ok = true;
        const PermGroup four(4, {Perm::parse_cycles(4, "(1,2)"), Perm::parse_cycles(4, "(3,4)")});
        ok = ok && right_coset_reps(four, four).size() == 1 &&
             right_coset_reps(four, four).front().is_identity();
        ok = ok && right_coset_reps(PermGroup::trivial(4), four).size() == 4;
        const PermGroup sub(4, {Perm::parse_cycles(4, "(1,2)")});
        ok = ok && right_coset_reps(sub, four).size() == 2;
        try {
            const PermGroup outside(4, {Perm::parse_cycles(4, "(1,3)")});
            right_coset_reps(outside, four);
            ok = false;
        } catch (const invalid_input&) {
        }
        add_check(checks, "perm_groups", "coset-representatives", "klein-four", ok);
    }
    return checks;
}

inline std::vector<Check> specht_invariant_suite(std::uint64_t seed) {
    std::vector<Check> checks;
    std::mt19937_64 rng(seed);

    auto random_perm = [&](int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        return Perm::from_images(img);
    };

    {
        bool ok = true;
        IntegerRing Z;
        for (int n = 2; n <= 6 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                const Tableau star = t_star(shape);
                const auto e = polytabloid(Z, star);
                const PermGroup col_stab = column_stabilizer(star);
                const auto& celems = col_stab.elements();
                std::uniform_int_distribution<std::size_t> pick(0, celems.size() - 1);
                for (int trial = 0; trial < 20 && ok; ++trial) {
                    const Perm& g = celems[pick(rng)];
                    const auto lhs = act(e, g);
                    const auto rhs = g.sign() == 1 ? e : e.scaled(Z.from_int(-1));
                    ok = lhs == rhs;
                }
                for (int trial = 0; trial < 5 && ok; ++trial) {
                    const Perm h = random_perm(shape.n());
                    ok = act(e, h) == polytabloid(Z, act(star, h));
                }
                if (!ok) break;
            }
        add_check(checks, "specht_modules", "column-sign-and-translation-identities", "n<=6", ok);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 2; n <= 6 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                auto basis = std::make_shared<const StandardBasis>(shape);
                for (int p : {2, 3}) {
                    PrimeField F(p);
                    SpechtModule<PrimeField> module(F, basis);
                    ok = module.rep_matrix(Perm(shape.n())) ==
                         Matrix<PrimeField>::identity(F, module.dimension());
                    for (int trial = 0; trial < 50 && ok; ++trial) {
                        const Perm g = random_perm(shape.n());
                        const Perm h = random_perm(shape.n());
                        ok = mat_mul(F, module.rep_matrix(g), module.rep_matrix(h)) ==
                             module.rep_matrix(g * h);
                    }
                    if (!ok) break;
                }
                if (!ok) witness = "lambda=" + shape.display();
            }
        add_check(checks, "specht_modules", "representation-homomorphism", "n<=6", ok, witness);
    }
    {
        bool ok = true;
        IntegerRing Z;
        for (int n = 2; n <= 5 && ok; ++n)
            for (const Partition& shape : all_partitions(n)) {
                auto basis = std::make_shared<const StandardBasis>(shape);
                SpechtModule<IntegerRing> zmodule(Z, basis);
                for (int trial = 0; trial < 10 && ok; ++trial) {
                    const Perm g = random_perm(shape.n());
                    const Perm h = random_perm(shape.n());
                    ok = mat_mul(Z, zmodule.rep_matrix(g), zmodule.rep_matrix(h)) ==
                         zmodule.rep_matrix(g * h);
                }
                for (int p : {2, 3}) {
                    PrimeField F(p);
                    SpechtModule<PrimeField> fmodule(F, basis);
                    for (int trial = 0; trial < 3 && ok; ++trial) {
                        const Perm g = random_perm(shape.n());
                        const auto zm = zmodule.rep_matrix(g);
                        const auto fm = fmodule.rep_matrix(g);
                        for (std::size_t k = 0; k < zm.data.size() && ok; ++k)
                            ok = F.from_bigint(zm.data[k]) == fm.data[k];
                    }
                }
                if (!ok) break;
            }
        add_check(checks, "specht_modules", "integer-and-mod-p-actions-compatible", "n<=5", ok);
    }
    {
        // The sign representation at the single-column shape.
        bool ok = true;
        IntegerRing Z;
        for (int n = 2; n <= 5 && ok; ++n) {
            const Partition shape(std::vector<int>(static_cast<std::size_t>(n), 1));
            SpechtModule<IntegerRing> module(Z, shape);
            for (int trial = 0; trial < 5 && ok; ++trial) {
                const Perm g = random_perm(n);
                const auto m = module.rep_matrix(g);
                ok = m.rows == 1 && m.at(0, 0) == g.sign();
            }
        }
        add_check(checks, "specht_modules", "single-column-sign-representation", "n<=5", ok);
    }
    return checks;
}

inline std::vector<Check> endo_invariant_suite(std::uint64_t seed) {
    std::vector<Check> checks;
    const PrimeField F3(3);

    auto diag = [&](std::vector<std::int64_t> entries) {
        Matrix<PrimeField> m(static_cast<int>(entries.size()), static_cast<int>(entries.size()),
                             F3.zero());
        for (std::size_t i = 0; i < entries.size(); ++i)
            m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
        return m;
    };

    {
        // Synthetic split module: distinct characters on the two summands.
        EndoAlgebra algebra{F3, 2, {diag({1, 1}), diag({1, 0})}, {diag({1, 2})}};
        const auto exhaustive = indecomposability_verdict(algebra, 1'000'000, 8, seed);
        bool ok = exhaustive.verdict == Verdict::Decomposable && exhaustive.witness &&
                  exhaustive.method == "exhaustive";
        if (ok) {
            const auto& w = *exhaustive.witness;
            ok = mat_mul(F3, w, w) == w && !(w == diag({0, 0})) && !(w == diag({1, 1})) &&
                 mat_mul(F3, w, algebra.action_generators[0]) ==
                     mat_mul(F3, algebra.action_generators[0], w);
        }
        add_check(checks, "endo_probe", "synthetic-split-exhaustive", "2-dim", ok);

        const auto fitting = indecomposability_verdict(algebra, 1, 64, seed);
        bool fitting_ok = fitting.verdict == Verdict::Decomposable && fitting.witness &&
                          fitting.method == "fitting";
        if (fitting_ok) {
            const auto& w = *fitting.witness;
            fitting_ok = mat_mul(F3, w, w) == w && !(w == diag({0, 0})) && !(w == diag({1, 1}));
        }
        add_check(checks, "endo_probe", "synthetic-split-fitting", "2-dim", fitting_ok);

        const auto again = indecomposability_verdict(algebra, 1, 64, seed);
        add_check(checks, "endo_probe", "verdict-deterministic-given-seed", "2-dim",
                  again.verdict == fitting.verdict &&
                      (!again.witness || *again.witness == *fitting.witness));
    }
    {
        bool ok = true;
        for (int n = 2; n <= 6 && ok; ++n) {
            SpechtModule<PrimeField> module(PrimeField(5), Partition({n}));
            const auto algebra = endomorphism_basis(module);
            const auto verdict = indecomposability_verdict(algebra);
            ok = algebra.dim_endo() == 1 && verdict.verdict == Verdict::Indecomposable &&
                 verdict.method == "scalars-only";
        }
        add_check(checks, "endo_probe", "trivial-module-scalars", "single-row", ok);
    }
    {
        SpechtModule<PrimeField> module(PrimeField(5), Partition({2, 1}));
        const auto algebra = endomorphism_basis(module);
        add_check(checks, "endo_probe", "two-one-endo-dim-p5", "lambda=[2,1]",
                  algebra.dim_endo() == 1);
        SpechtModule<PrimeField> module3(PrimeField(3), Partition({2, 1}));
        const auto algebra3 = endomorphism_basis(module3);
        const auto verdict3 = indecomposability_verdict(algebra3);
        add_check(checks, "endo_probe", "two-one-endo-decisive-p3", "lambda=[2,1]",
                  algebra3.dim_endo() >= 1 && verdict3.verdict != Verdict::Inconclusive);
    }
    return checks;
}

// ---------------------------------------------------------------------------
// The certificate sweep with its per-case consistency checks.
// ---------------------------------------------------------------------------

struct CorpusOptions {
    int n_max = 7;
    std::vector<int> primes = {2, 3};
    CertificateCaps caps;
    std::uint64_t seed = 0;
    unsigned threads = 0; // 0: hardware concurrency
};

struct CorpusCase {
    Partition lambda;
    int p = 2;
    std::vector<VertexCertificate> certs;
    std::vector<Check> checks;
};

struct CorpusResult {
    std::vector<CorpusCase> cases;
    std::vector<Check> checks; // case checks flattened plus the global suites
    int pass = 0;
    int fail = 0;
};

inline CorpusCase corpus_case(const Partition& lambda, int p, const CertificateCaps& caps,
                              std::uint64_t seed) {
    CorpusCase result;
    result.lambda = lambda;
    result.p = p;
    const std::string input = "lambda=" + lambda.display() + " p=" + std::to_string(p);
    try {
        CertificateSession session(lambda, p, caps, seed);
        const Tableau star = t_star(lambda);
        const PermGroup H = h_group(star);
        for (const auto& ctx : splitting_partitions(lambda)) {
            const std::string ctx_input = input + " mu=" + ctx.mu.display();
            VertexCertificate cert = vertex_certificate(session, ctx);

            add_check(result.checks, "brauer_vertex", "certificate-full-mode", ctx_input,
                      !cert.structural_only, cert.structural_reason);
            add_check(result.checks, "brauer_vertex", "lemma31-holds", ctx_input,
                      cert.lemma.holds,
                      cert.lemma.counterexample ? cert.lemma.counterexample->cycle_string() : "");
            const bool expansion_expected =
                column_group_order(star) <= std::min<std::size_t>(caps.terms, kLemmaExpansionCap);
            add_check(result.checks, "brauer_vertex", "lemma31-strategies-ran", ctx_input,
                      cert.lemma.structural_ran &&
                          (!expansion_expected || cert.lemma.expansion_ran));
            if (!cert.structural_only) {
                add_check(result.checks, "brauer_vertex", "fixed-membership", ctx_input,
                          cert.fixed_ok.value_or(false));
                if (cert.verdict && *cert.verdict == Verdict::Indecomposable)
                    add_check(result.checks, "brauer_vertex", "theorem-consistency", ctx_input,
                              cert.not_trace_ok.value_or(false) &&
                                  cert.brauer_dim.value_or(0) >= 1);
            }
            if (ctx.mu.empty()) {
                const PermGroup L = l_group(ctx, star);
                add_check(result.checks, "brauer_vertex", "empty-tail-equals-h-group",
                          ctx_input, L.same_elements(H));
            }

            if (!cert.structural_only) {
                const PermGroup P = sylow_p(l_group(ctx, star), p, caps.elements);
                const BigInt bound = pow_int(p, 3);
                if (P.order() <= bound) {
                    auto battery = brauer_oracle_battery(session.module(), P, p,
                                                         seed ^ 0x9e3779b97f4a7c15ull,
                                                         ctx_input, caps.elements);
                    result.checks.insert(result.checks.end(), battery.begin(), battery.end());

                    const auto maximals = maximal_subgroups(P, p, caps.elements);
                    const auto all = all_subgroups(P, caps.elements);
                    std::set<std::vector<Perm>> expected;
                    for (const PermGroup& G : all)
                        if (G.elements().size() * p == P.elements().size())
                            expected.insert(G.elements());
                    std::set<std::vector<Perm>> got;
                    for (const PermGroup& G : maximals) got.insert(G.elements());
                    add_check(result.checks, "perm_groups", "maximal-subgroups-oracle",
                              ctx_input, got == expected);

                    bool covers = true;
                    for (const Perm& x : P.elements()) {
                        bool inside = false;
                        for (const PermGroup& G : maximals)
                            inside = inside || G.contains(x);
                        if (!inside)
                            covers = covers &&
                                     generate_elements(P.degree(), {x}).size() ==
                                         P.elements().size();
                    }
                    add_check(result.checks, "perm_groups",
                              "maximal-union-covers-non-generators", ctx_input, covers);
                }
            }
            result.certs.push_back(std::move(cert));
        }
    } catch (const std::exception& e) {
        add_check(result.checks, "brauer_vertex", "case-completed", input, false, e.what());
    }
    return result;
}

inline CorpusResult corpus(const CorpusOptions& options = {}) {
    CorpusResult result;

    struct Task {
        Partition lambda;
        int p;
    };
    std::vector<Task> tasks;
    for (int n = 1; n <= options.n_max; ++n)
        for (const Partition& shape : all_partitions(n))
            for (int p : options.primes) tasks.push_back({shape, p});

    std::vector<CorpusCase> cases(tasks.size());
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            cases[i] = corpus_case(tasks[i].lambda, tasks[i].p, options.caps,
                                   options.seed + i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    try {
                        cases[i] = corpus_case(tasks[i].lambda, tasks[i].p, options.caps,
                                               options.seed + i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    result.cases = std::move(cases);
    for (const auto& c : result.cases)
        result.checks.insert(result.checks.end(), c.checks.begin(), c.checks.end());

    const auto figures = figure_example_checks();
    result.checks.insert(result.checks.end(), figures.begin(), figures.end());
    for (auto&& suite :
         {young_invariant_suite(options.seed), perm_group_invariant_suite(options.seed),
          specht_invariant_suite(options.seed), endo_invariant_suite(options.seed)})
        result.checks.insert(result.checks.end(), suite.begin(), suite.end());

    const auto basis_battery = standard_basis_battery(options.n_max, options.caps.tableau_n,
                                                      options.caps.terms);
    result.checks.insert(result.checks.end(), basis_battery.begin(), basis_battery.end());

    {
        // Byte-stable reporting for a fixed configuration and seed.
        RunConfig config;
        config.lambda = Partition({3, 1, 1});
        config.p = 2;
        config.mu_selection = MuSelection::All;
        config.caps = options.caps;
        config.seed = options.seed;
        const std::string first = report_json(run(config)).dump(2);
        const std::string second = report_json(run(config)).dump(2);
        add_check(result.checks, "cli_report", "report-determinism", "lambda=[3,1,1] p=2",
                  first == second);
    }

    for (const auto& check : result.checks) (check.pass ? result.pass : result.fail)++;
    return result;
}

inline Json corpus_json(const CorpusResult& result, const CorpusOptions& options) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["seed"] = options.seed;
    j["n_max"] = options.n_max;
    j["primes"] = options.primes;
    j["summary"] = Json{{"pass", result.pass}, {"fail", result.fail}};
    Json checks = Json::array();
    for (const auto& c : result.checks) {
        Json e;
        e["module"] = c.module;
        e["invariant"] = c.name;
        e["input"] = c.input;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = checks;
    Json cases = Json::array();
    for (const auto& c : result.cases) {
        Json e;
        e["lambda"] = partition_json(c.lambda);
        e["p"] = c.p;
        Json rows = Json::array();
        for (const auto& cert : c.certs) rows.push_back(certificate_json(cert));
        e["rows"] = rows;
        cases.push_back(std::move(e));
    }
    j["cases"] = cases;
    return j;
}

inline std::string corpus_text(const CorpusResult& result) {
    std::ostringstream out;
    for (const auto& c : result.checks)
        if (!c.pass)
            out << "FAIL " << c.module << " :: " << c.name << " :: " << c.input
                << (c.detail.empty() ? "" : " :: " + c.detail) << "\n";
    out << "corpus: " << result.pass << " passed, " << result.fail << " failed\n";
    return out.str();
}

} // namespace specht
