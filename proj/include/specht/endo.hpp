#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/matrix.hpp"
#include "specht/specht_module.hpp"

namespace specht {

// Matrices commuting with the module action, spanned by `basis`. The span
// contains the identity and is closed under products.
struct EndoAlgebra {
    PrimeField field;
    int dim_module = 0;
    std::vector<Matrix<PrimeField>> basis;
    std::vector<Matrix<PrimeField>> action_generators;

    int dim_endo() const { return static_cast<int>(basis.size()); }
};

// Solves X M = M X for the representation matrices of (1 2) and the n-cycle,
// which generate the whole symmetric group; the solution space is the full
// endomorphism algebra.
inline EndoAlgebra endomorphism_basis(const SpechtModule<PrimeField>& module) {
    const PrimeField F = module.ring();
    const int d = module.dimension();
    const int n = module.shape().n();

    std::vector<Perm> group_gens;
    if (n >= 2) {
        group_gens.push_back(Perm::from_cycles(n, {{1, 2}}));
        std::vector<int> full(static_cast<std::size_t>(n));
        std::iota(full.begin(), full.end(), 1);
        group_gens.push_back(Perm::from_cycles(n, {full}));
    }

    std::vector<Matrix<PrimeField>> action;
    for (const Perm& g : group_gens) action.push_back(module.rep_matrix(g));

    const int vars = d * d;
    Matrix<PrimeField> system(static_cast<int>(action.size()) * vars, vars, F.zero());
    int base = 0;
    for (const auto& m : action) {
        // equation (i,j): sum_k X[i][k] m[k][j] - m[i][k] X[k][j] = 0
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const int eq = base + i * d + j;
                for (int k = 0; k < d; ++k) {
                    system.at(eq, i * d + k) = F.add(system.at(eq, i * d + k), m.at(k, j));
                    system.at(eq, k * d + j) = F.sub(system.at(eq, k * d + j), m.at(i, k));
                }
            }
        base += vars;
    }

    EndoAlgebra algebra{F, d, {}, std::move(action)};
    const Matrix<PrimeField> kernel = kernel_basis(F, std::move(system));
    for (int r = 0; r < kernel.rows; ++r) {
        Matrix<PrimeField> e(d, d, F.zero());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) e.at(i, j) = kernel.at(r, i * d + j);
        algebra.basis.push_back(std::move(e));
    }
    return algebra;
}

enum class Verdict { Indecomposable, Decomposable, Inconclusive };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Indecomposable: return "indecomposable";
        case Verdict::Decomposable: return "decomposable";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct DecompositionResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Matrix<PrimeField>> witness; // idempotent, not 0 or 1
    std::string method;
    int dim_endo = 0;
};

namespace detail {

// Coordinates of `flat` against RREF basis rows: read off the pivot columns,
// then insist the combination reproduces the vector exactly.
inline std::optional<std::vector<std::int64_t>> coords_against_rref(
    const PrimeField& F, const std::vector<std::vector<std::int64_t>>& rows,
    const std::vector<int>& pivots, const std::vector<std::int64_t>& flat) {
    std::vector<std::int64_t> coords(rows.size(), F.zero());
    std::vector<std::int64_t> residual = flat;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto c = residual[static_cast<std::size_t>(pivots[r])];
        coords[r] = c;
        if (F.is_zero(c)) continue;
        for (std::size_t j = 0; j < residual.size(); ++j)
            residual[j] = F.sub(residual[j], F.mul(c, rows[r][j]));
    }
    for (auto x : residual)
        if (!F.is_zero(x)) return std::nullopt;
    return coords;
}

} // namespace detail

inline constexpr std::uint64_t kDefaultEndoExhaustiveCap = 1'000'000;
inline constexpr int kDefaultEndoSamples = 40;

// Decides decomposability from the endomorphism algebra. When p^dim fits the
// exhaustive budget every algebra element is tested for being a nontrivial
// idempotent, which is decisive either way. Otherwise random elements are
// probed for a nontrivial stable kernel/image splitting; failure to find one
// is reported as inconclusive, never as a verdict.
inline DecompositionResult indecomposability_verdict(
    const EndoAlgebra& algebra, std::uint64_t exhaustive_cap = kDefaultEndoExhaustiveCap,
    int sample_rounds = kDefaultEndoSamples, std::uint64_t seed = 0) {
    const PrimeField& F = algebra.field;
    const int e = algebra.dim_endo();
    const int d = algebra.dim_module;
    DecompositionResult result;
    result.dim_endo = e;

    if (e == 0) throw consistency_error("endomorphism algebra without identity");

    auto commutes_with_action = [&](const Matrix<PrimeField>& m) {
        for (const auto& g : algebra.action_generators)
            if (!(mat_mul(F, m, g) == mat_mul(F, g, m))) return false;
        return true;
    };

    if (e == 1) {
        // Only scalar multiples of the identity: the sole idempotents are 0 and 1.
        result.verdict = Verdict::Indecomposable;
        result.method = "scalars-only";
        return result;
    }

    // Canonicalize: flatten the basis and reduce to echelon form, so that
    // coordinates can be read off the pivot columns.
    Matrix<PrimeField> stacked(e, d * d, F.zero());
    for (int r = 0; r < e; ++r)
        for (std::size_t k = 0; k < algebra.basis[static_cast<std::size_t>(r)].data.size(); ++k)
            stacked.at(r, static_cast<int>(k)) =
                algebra.basis[static_cast<std::size_t>(r)].data[k];
    const auto pivots = rref_in_place(F, stacked);
    if (static_cast<int>(pivots.size()) != e)
        throw consistency_error("endomorphism basis is linearly dependent");
    std::vector<std::vector<std::int64_t>> flat_basis;
    for (int r = 0; r < e; ++r) flat_basis.push_back(stacked.row(r));

    auto coords_of = [&](const Matrix<PrimeField>& m) {
        std::vector<std::int64_t> flat;
        for (const auto& x : m.data) flat.push_back(x);
        return detail::coords_against_rref(F, flat_basis, pivots, flat);
    };

    const auto id_coords = coords_of(Matrix<PrimeField>::identity(F, d));
    if (!id_coords)
        throw consistency_error("identity is not in the endomorphism algebra span");

    std::vector<Matrix<PrimeField>> rref_mats;
    for (int r = 0; r < e; ++r) {
        Matrix<PrimeField> m(d, d, F.zero());
        for (std::size_t k = 0; k < m.data.size(); ++k)
            m.data[k] = flat_basis[static_cast<std::size_t>(r)][k];
        rref_mats.push_back(std::move(m));
    }

    // Structure constants: products of basis elements re-expanded in the basis.
    // A failed expansion would mean the span is not multiplicatively closed.
    std::vector<std::vector<std::vector<std::int64_t>>> table(
        static_cast<std::size_t>(e),
        std::vector<std::vector<std::int64_t>>(static_cast<std::size_t>(e)));
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) {
            const auto prod = mat_mul(F, rref_mats[static_cast<std::size_t>(i)],
                                      rref_mats[static_cast<std::size_t>(j)]);
            auto coords = coords_of(prod);
            if (!coords)
                throw consistency_error("endomorphism span is not closed under products");
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(*coords);
        }

    auto materialize = [&](const std::vector<std::int64_t>& coords) {
        Matrix<PrimeField> m(d, d, F.zero());
        for (int i = 0; i < e; ++i) {
            if (F.is_zero(coords[static_cast<std::size_t>(i)])) continue;
            for (std::size_t k = 0; k < m.data.size(); ++k)
                m.data[k] = F.add(m.data[k], F.mul(coords[static_cast<std::size_t>(i)],
                                                   flat_basis[static_cast<std::size_t>(i)][k]));
        }
        return m;
    };

    // Exhaustive idempotent search over all p^e algebra elements.
    BigInt space = pow_int(static_cast<int>(F.p), e);
    if (space <= exhaustive_cap) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(e), 0);
        std::vector<std::int64_t> square(static_cast<std::size_t>(e), 0);
        for (;;) {
            int pos = e - 1;
            while (pos >= 0 && c[static_cast<std::size_t>(pos)] == F.p - 1)
                c[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++c[static_cast<std::size_t>(pos)];

            std::fill(square.begin(), square.end(), 0);
            for (int i = 0; i < e; ++i) {
                const auto ci = c[static_cast<std::size_t>(i)];
                if (F.is_zero(ci)) continue;
                for (int j = 0; j < e; ++j) {
                    const auto cj = c[static_cast<std::size_t>(j)];
                    if (F.is_zero(cj)) continue;
                    const auto w = F.mul(ci, cj);
                    const auto& tij = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    for (int k = 0; k < e; ++k)
                        square[static_cast<std::size_t>(k)] =
                            F.add(square[static_cast<std::size_t>(k)],
                                  F.mul(w, tij[static_cast<std::size_t>(k)]));
                }
            }
            if (square == c && c != *id_coords) {
                auto witness = materialize(c);
                if (!(mat_mul(F, witness, witness) == witness) || !commutes_with_action(witness))
                    throw consistency_error("exhaustive idempotent witness failed verification");
                result.verdict = Verdict::Decomposable;
                result.witness = std::move(witness);
                result.method = "exhaustive";
                return result;
            }
        }
        result.verdict = Verdict::Indecomposable;
        result.method = "exhaustive";
        return result;
    }

    // Randomized splitting probe: stable kernel and image of powers of a
    // sampled endomorphism.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, F.p - 1);
    for (int round = 0; round < sample_rounds; ++round) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(e));
        for (auto& x : c) x = dist(rng);
        Matrix<PrimeField> theta = materialize(c);
        // theta^(2^k) until the rank stabilizes.
        Matrix<PrimeField> power = theta;
        int rank = field_rank(F, power);
        for (int step = 0; step < 2 * d + 2; ++step) {
            Matrix<PrimeField> next = mat_mul(F, power, power);
            const int next_rank = field_rank(F, next);
            if (next_rank == rank) break;
            power = std::move(next);
            rank = next_rank;
        }
        if (rank == 0 || rank == d) continue;

        // Row space of `power` and kernel of the row action v -> v.power.
        Matrix<PrimeField> image_rows = power;
        const auto image_pivots = rref_in_place(F, image_rows);
        Matrix<PrimeField> kernel_rows = kernel_basis(F, transpose(power));
        Matrix<PrimeField> change(d, d, F.zero());
        for (std::size_t r = 0; r < image_pivots.size(); ++r)
            for (int j = 0; j < d; ++j) change.at(static_cast<int>(r), j) = image_rows.at(static_cast<int>(r), j);
        for (int r = 0; r < kernel_rows.rows; ++r)
            for (int j = 0; j < d; ++j)
                change.at(static_cast<int>(image_pivots.size()) + r, j) = kernel_rows.at(r, j);
        if (field_rank(F, change) != d) continue;

        // Projection onto the image along the kernel: B^-1 D B for row vectors.
        Matrix<PrimeField> augmented(d, 2 * d, F.zero());
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) augmented.at(i, j) = change.at(i, j);
            augmented.at(i, d + i) = F.one();
        }
        rref_in_place(F, augmented);
        Matrix<PrimeField> inverse(d, d, F.zero());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) inverse.at(i, j) = augmented.at(i, d + j);
        Matrix<PrimeField> diag(d, d, F.zero());
        for (int i = 0; i < rank; ++i) diag.at(i, i) = F.one();
        Matrix<PrimeField> projector = mat_mul(F, mat_mul(F, inverse, diag), change);

        if (mat_mul(F, projector, projector) == projector && commutes_with_action(projector)) {
            bool trivial = projector == Matrix<PrimeField>::identity(F, d);
            bool zero = true;
            for (const auto& x : projector.data)
                if (!F.is_zero(x)) {
                    zero = false;
                    break;
                }
            if (!trivial && !zero) {
                result.verdict = Verdict::Decomposable;
                result.witness = std::move(projector);
                result.method = "fitting";
                return result;
            }
        }
    }
    result.verdict = Verdict::Inconclusive;
    result.method = "sampling-exhausted";
    return result;
}

} // namespace specht
