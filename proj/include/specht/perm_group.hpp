#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/numbers.hpp"
#include "specht/partition.hpp"
#include "specht/perm.hpp"
#include "specht/tableau.hpp"

namespace specht {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

// One direct factor: the full symmetric group on `blocks`, acting by permuting
// the blocks and preserving positions inside each block. Blocks are pairwise
// disjoint, equally sized, ordered point lists.
struct SymmetricFactor {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }

    std::vector<int> support() const {
        std::vector<int> out;
        for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Point permutation induced by a permutation of block indices: position k of
// block b goes to position k of block index_images[b].
inline Perm block_perm(int degree, const std::vector<std::vector<int>>& blocks,
                       const std::vector<int>& index_images) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& src = blocks[b];
        const auto& dst = blocks[static_cast<std::size_t>(index_images[b])];
        for (std::size_t k = 0; k < src.size(); ++k)
            images[static_cast<std::size_t>(src[k] - 1)] = dst[k];
    }
    return Perm::from_images(std::move(images));
}

enum class FactorGenerators { AdjacentTranspositions, CycleAndTransposition };

inline std::vector<Perm> factor_generators(int degree, const SymmetricFactor& factor,
                                           FactorGenerators style) {
    const int m = factor.block_count();
    std::vector<Perm> gens;
    if (m < 2) return gens;
    if (style == FactorGenerators::AdjacentTranspositions) {
        for (int i = 0; i + 1 < m; ++i) {
            std::vector<int> idx(static_cast<std::size_t>(m));
            std::iota(idx.begin(), idx.end(), 0);
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i + 1)]);
            gens.push_back(block_perm(degree, factor.blocks, idx));
        }
        return gens;
    }
    if (m >= 3) {
        std::vector<int> cycle(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % m;
        gens.push_back(block_perm(degree, factor.blocks, cycle));
    }
    std::vector<int> swap01(static_cast<std::size_t>(m));
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    gens.push_back(block_perm(degree, factor.blocks, swap01));
    return gens;
}

// Breadth-first closure of the generators; sorted. Throws once the closure
// would exceed `cap`.
inline std::vector<Perm> generate_elements(int degree, const std::vector<Perm>& gens,
                                           std::size_t cap = kDefaultElementCap) {
    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> work;
    Perm id(degree);
    seen.insert(id);
    work.push_back(id);
    while (!work.empty()) {
        Perm x = std::move(work.front());
        work.pop_front();
        for (const Perm& g : gens) {
            if (g.degree() != degree) throw invalid_input("generator degree mismatch");
            Perm y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw cap_exceeded("group enumeration cap of " + std::to_string(cap) +
                                       " elements exceeded");
                work.push_back(std::move(y));
            }
        }
    }
    std::vector<Perm> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Finitely generated subgroup of S_degree. Element enumeration is lazy,
// capped, and computed at most once; concurrent readers share the result.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators,
              std::optional<std::vector<SymmetricFactor>> structure = std::nullopt,
              std::optional<BigInt> declared_order = std::nullopt)
        : degree_(degree),
          generators_(std::move(generators)),
          structure_(std::move(structure)),
          declared_order_(std::move(declared_order)),
          cache_(std::make_shared<Cache>()) {
        for (const Perm& g : generators_)
            if (g.degree() != degree_) throw invalid_input("generator degree mismatch");
    }

    static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

    static PermGroup with_elements(int degree, std::vector<Perm> generators,
                                   std::vector<Perm> elements,
                                   std::optional<std::vector<SymmetricFactor>> structure = std::nullopt) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        PermGroup g(degree, std::move(generators), std::move(structure),
                    BigInt(elements.size()));
        g.cache_->elements = std::move(elements);
        return g;
    }

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::optional<std::vector<SymmetricFactor>>& structure() const { return structure_; }

    const std::vector<Perm>& elements(std::size_t cap = kDefaultElementCap) const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (!cache_->elements)
            cache_->elements = generate_elements(degree_, generators_, cap);
        return *cache_->elements;
    }

    bool elements_known() const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        return cache_->elements.has_value();
    }

    // Order without enumeration where a declared order or a direct-product
    // structure is available.
    BigInt order() const {
        if (declared_order_) return *declared_order_;
        if (structure_) {
            BigInt o = 1;
            for (const auto& f : *structure_) o *= factorial(f.block_count());
            return o;
        }
        return BigInt(elements().size());
    }

    bool contains(const Perm& p, std::size_t cap = kDefaultElementCap) const {
        const auto& e = elements(cap);
        return std::binary_search(e.begin(), e.end(), p);
    }

    bool same_elements(const PermGroup& other, std::size_t cap = kDefaultElementCap) const {
        return degree_ == other.degree_ && elements(cap) == other.elements(cap);
    }

    bool subgroup_of(const PermGroup& other, std::size_t cap = kDefaultElementCap) const {
        if (degree_ != other.degree_) return false;
        const auto& mine = elements(cap);
        const auto& theirs = other.elements(cap);
        return std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end());
    }

    // "S_3 x S_4" style tag from the structure, "1" for an empty product.
    // Empty when no structure is recorded.
    std::string abstract_type() const {
        if (!structure_) return "";
        if (structure_->empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < structure_->size(); ++i) {
            if (i) out += " x ";
            out += "S_" + std::to_string((*structure_)[i].block_count());
        }
        return out;
    }

    // Sizes of the symmetric factors, sorted; empty when no structure.
    std::vector<int> factor_sizes() const {
        std::vector<int> out;
        if (structure_)
            for (const auto& f : *structure_) out.push_back(f.block_count());
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::optional<std::vector<Perm>> elements;
    };

    int degree_;
    std::vector<Perm> generators_;
    std::optional<std::vector<SymmetricFactor>> structure_;
    std::optional<BigInt> declared_order_;
    std::shared_ptr<Cache> cache_;
};

namespace detail {

// Rows (or columns) as point lists, grouped into maximal runs of equal
// length; lengths are monotone so equal-length groups are contiguous.
inline std::vector<SymmetricFactor> group_lists_by_length(
    const std::vector<std::vector<int>>& lists) {
    std::vector<SymmetricFactor> factors;
    for (const auto& list : lists) {
        if (!factors.empty() && factors.back().blocks.front().size() == list.size())
            factors.back().blocks.push_back(list);
        else
            factors.push_back(SymmetricFactor{{list}});
    }
    return factors;
}

inline std::vector<Perm> factors_generators(int degree, const std::vector<SymmetricFactor>& fs,
                                            FactorGenerators style) {
    std::vector<Perm> gens;
    for (const auto& f : fs) {
        auto g = factor_generators(degree, f, style);
        gens.insert(gens.end(), g.begin(), g.end());
    }
    return gens;
}

} // namespace detail

// Setwise stabilizer of the rows of t: the product of the symmetric groups on
// the individual rows. Generated by adjacent transpositions within each row.
inline PermGroup row_stabilizer(const Tableau& t) {
    if (!t.proper()) throw invalid_input("row_stabilizer needs a proper tableau");
    std::vector<SymmetricFactor> factors;
    for (const auto& row : t.rows()) {
        SymmetricFactor f;
        for (int e : row) f.blocks.push_back({e});
        factors.push_back(std::move(f));
    }
    auto gens = detail::factors_generators(t.box_count(), factors,
                                           FactorGenerators::AdjacentTranspositions);
    return PermGroup(t.box_count(), std::move(gens), std::move(factors));
}

inline PermGroup column_stabilizer(const Tableau& t) {
    if (!t.proper()) throw invalid_input("column_stabilizer needs a proper tableau");
    std::vector<SymmetricFactor> factors;
    for (const auto& col : t.columns()) {
        SymmetricFactor f;
        for (int e : col) f.blocks.push_back({e});
        factors.push_back(std::move(f));
    }
    auto gens = detail::factors_generators(t.box_count(), factors,
                                           FactorGenerators::AdjacentTranspositions);
    return PermGroup(t.box_count(), std::move(gens), std::move(factors));
}

// Subgroup of the row stabilizer permuting equal-length columns of t as
// blocks. One symmetric factor per column-length class, taken left to right;
// each factor contributes its block cycle and the swap of its first two
// blocks as generators.
inline PermGroup h_group(const Tableau& t) {
    if (!t.proper()) throw invalid_input("h_group needs a proper tableau");
    auto factors = detail::group_lists_by_length(t.columns());
    auto gens = detail::factors_generators(t.box_count(), factors,
                                           FactorGenerators::CycleAndTransposition);
    return PermGroup(t.box_count(), std::move(gens), std::move(factors));
}

// Block permutations of the equal-length columns of the trailing subtableau
// only. Fixes everything outside its support; a subgroup of h_group(t).
inline PermGroup u_group(const SplittingContext& ctx, const Tableau& t) {
    if (t.shape() != ctx.lambda) throw invalid_input("u_group: shape mismatch");
    if (!t.proper()) throw invalid_input("u_group needs a proper tableau");
    const Tableau u = subtableau_u(ctx, t);
    auto factors = detail::group_lists_by_length(u.columns());
    auto gens = detail::factors_generators(t.box_count(), factors,
                                           FactorGenerators::CycleAndTransposition);
    return PermGroup(t.box_count(), std::move(gens), std::move(factors));
}

// Block permutations of the equal-length rows of the bottom subtableau. Fixes
// everything outside its support; a subgroup of column_stabilizer(t).
inline PermGroup z_group(const SplittingContext& ctx, const Tableau& t) {
    if (t.shape() != ctx.lambda) throw invalid_input("z_group: shape mismatch");
    if (!t.proper()) throw invalid_input("z_group needs a proper tableau");
    const Tableau z = subtableau_z(ctx, t);
    auto factors = detail::group_lists_by_length(z.rows());
    auto gens = detail::factors_generators(t.box_count(), factors,
                                           FactorGenerators::CycleAndTransposition);
    return PermGroup(t.box_count(), std::move(gens), std::move(factors));
}

// Internal direct product of u_group and z_group; their supports are disjoint.
inline PermGroup l_group(const SplittingContext& ctx, const Tableau& t) {
    PermGroup u = u_group(ctx, t);
    PermGroup z = z_group(ctx, t);

    std::vector<char> used(static_cast<std::size_t>(t.box_count()), 0);
    for (const auto& f : *u.structure())
        for (int x : f.support()) used[static_cast<std::size_t>(x - 1)] = 1;
    for (const auto& f : *z.structure())
        for (int x : f.support()) {
            if (used[static_cast<std::size_t>(x - 1)])
                throw consistency_error("l_group: factor supports are not disjoint");
            used[static_cast<std::size_t>(x - 1)] = 1;
        }

    std::vector<Perm> gens = u.generators();
    gens.insert(gens.end(), z.generators().begin(), z.generators().end());
    std::vector<SymmetricFactor> factors = *u.structure();
    factors.insert(factors.end(), z.structure()->begin(), z.structure()->end());
    return PermGroup(t.box_count(), std::move(gens), std::move(factors));
}

// Generators, as 0-based index permutations of {0..m-1}, of a Sylow
// p-subgroup of the symmetric group on m symbols: one iterated wreath tower
// per base-p digit of m, most significant digit first, towers laid out on
// consecutive indices. The level-j generator of a tower of size p^i shifts
// the first p^j indices of the tower by p^(j-1) modulo p^j.
inline std::vector<std::vector<int>> sylow_index_generators(int m, int p) {
    std::vector<std::vector<int>> gens;
    if (m <= 0) return gens;
    std::vector<int> digits; // digits[i] = coefficient of p^i
    for (int mm = m; mm > 0; mm /= p) digits.push_back(mm % p);
    long long offset = 0;
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
        long long tree = 1;
        for (int j = 0; j < i; ++j) tree *= p;
        for (int copy = 0; copy < digits[static_cast<std::size_t>(i)]; ++copy) {
            long long window = 1;
            for (int level = 1; level <= i; ++level) {
                const long long stride = window;
                window *= p;
                std::vector<int> img(static_cast<std::size_t>(m));
                std::iota(img.begin(), img.end(), 0);
                for (long long v = 0; v < window; ++v)
                    img[static_cast<std::size_t>(offset + v)] =
                        static_cast<int>(offset + (v + stride) % window);
                gens.push_back(std::move(img));
            }
            offset += tree;
        }
    }
    return gens;
}

namespace detail {
inline void check_prime(int p) {
    if (p < 2) throw invalid_input("p must be a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw invalid_input("p must be a prime");
}
} // namespace detail

// Sylow p-subgroup of a group enumerated explicitly: repeatedly extend a
// p-subgroup by a normalizing element until the full p-part is reached.
inline PermGroup sylow_p_brute(const PermGroup& G, int p, std::size_t cap = kDefaultElementCap) {
    detail::check_prime(p);
    const auto& elems = G.elements(cap);
    const BigInt target = p_part(BigInt(elems.size()), p);

    std::vector<Perm> pgens;
    std::vector<Perm> pelems = {Perm(G.degree())};
    while (BigInt(pelems.size()) < target) {
        bool extended = false;
        for (const Perm& x : elems) {
            if (std::binary_search(pelems.begin(), pelems.end(), x)) continue;
            if (!x.is_p_element(p)) continue;
            bool normalizes = true;
            for (const Perm& g : pgens)
                if (!std::binary_search(pelems.begin(), pelems.end(), conjugate(g, x))) {
                    normalizes = false;
                    break;
                }
            if (!normalizes) continue;
            auto trial = pgens;
            trial.push_back(x);
            auto closure = generate_elements(G.degree(), trial, cap);
            if (BigInt(closure.size()) == BigInt(pelems.size()) * p) {
                pgens = std::move(trial);
                pelems = std::move(closure);
                extended = true;
                break;
            }
        }
        if (!extended)
            throw consistency_error("sylow_p_brute: no normalizing p-element found");
    }
    return PermGroup::with_elements(G.degree(), std::move(pgens), std::move(pelems));
}

// Sylow p-subgroup. Uses the recorded direct-product structure when present
// (the product of the factor Sylows, each built from wreath towers transported
// through the block action); otherwise falls back to the brute-force search.
inline PermGroup sylow_p(const PermGroup& G, int p, std::size_t cap = kDefaultElementCap) {
    detail::check_prime(p);
    if (!G.structure()) return sylow_p_brute(G, p, cap);
    std::vector<Perm> gens;
    BigInt order = 1;
    for (const auto& f : *G.structure()) {
        for (const auto& idx : sylow_index_generators(f.block_count(), p))
            gens.push_back(block_perm(G.degree(), f.blocks, idx));
        order *= pow_int(p, nu_p_factorial(f.block_count(), p));
    }
    return PermGroup(G.degree(), std::move(gens), std::nullopt, order);
}

// Exactly [Q:R] representatives, one per right coset Rq, chosen canonically:
// the least element of each coset in the sorted enumeration of Q.
inline std::vector<Perm> right_coset_reps(const PermGroup& R, const PermGroup& Q,
                                          std::size_t cap = kDefaultElementCap) {
    if (!R.subgroup_of(Q, cap))
        throw invalid_input("right_coset_reps: R is not a subgroup of Q");
    const auto& qe = Q.elements(cap);
    const auto& re = R.elements(cap);
    auto index_of = [&](const Perm& x) {
        auto it = std::lower_bound(qe.begin(), qe.end(), x);
        return static_cast<std::size_t>(it - qe.begin());
    };
    std::vector<bool> covered(qe.size(), false);
    std::vector<Perm> reps;
    for (std::size_t i = 0; i < qe.size(); ++i) {
        if (covered[i]) continue;
        reps.push_back(qe[i]);
        for (const Perm& r : re) covered[index_of(r * qe[i])] = true;
    }
    return reps;
}

inline bool is_p_group(const PermGroup& Q, int p, std::size_t cap = kDefaultElementCap) {
    return is_p_power(BigInt(Q.elements(cap).size()), p);
}

// All index-p subgroups of a p-group Q: preimages of the hyperplanes of the
// elementary abelian quotient by the Frattini subgroup (commutators and p-th
// powers). Count is (p^d - 1)/(p - 1) where d is the quotient rank.
inline std::vector<PermGroup> maximal_subgroups(const PermGroup& Q, int p,
                                                std::size_t cap = kDefaultElementCap) {
    detail::check_prime(p);
    const auto& elems = Q.elements(cap);
    if (!is_p_power(BigInt(elems.size()), p))
        throw invalid_input("maximal_subgroups: group is not a p-group");
    if (elems.size() == 1) return {};

    const int degree = Q.degree();
    const auto& qgens = Q.generators();

    // Frattini subgroup: normal closure of generator commutators and p-th powers.
    std::vector<Perm> seeds;
    for (const Perm& g : qgens) seeds.push_back(perm_power(g, p));
    for (const Perm& a : qgens)
        for (const Perm& b : qgens) seeds.push_back(commutator(a, b));
    std::vector<Perm> frattini = generate_elements(degree, seeds, cap);
    for (;;) {
        std::vector<Perm> extra;
        for (const Perm& g : qgens)
            for (const Perm& x : frattini) {
                Perm y = conjugate(x, g);
                if (!std::binary_search(frattini.begin(), frattini.end(), y))
                    extra.push_back(std::move(y));
            }
        if (extra.empty()) break;
        auto gens2 = frattini;
        gens2.insert(gens2.end(), extra.begin(), extra.end());
        frattini = generate_elements(degree, gens2, cap);
    }

    // Pivot generators: a minimal generating set modulo the Frattini subgroup.
    std::vector<Perm> pivots;
    std::vector<Perm> span = frattini;
    for (const Perm& g : qgens) {
        if (std::binary_search(span.begin(), span.end(), g)) continue;
        pivots.push_back(g);
        auto gens2 = span;
        gens2.push_back(g);
        span = generate_elements(degree, gens2, cap);
        if (span.size() == elems.size()) break;
    }
    if (span.size() != elems.size())
        throw consistency_error("maximal_subgroups: generators do not span the quotient");
    const int d = static_cast<int>(pivots.size());

    // Coordinates of every element in the elementary abelian quotient.
    std::unordered_map<Perm, std::vector<int>, PermHash> coord;
    std::vector<int> tuple(static_cast<std::size_t>(d), 0);
    for (;;) {
        Perm rep(degree);
        for (int i = 0; i < d; ++i)
            rep = rep * perm_power(pivots[static_cast<std::size_t>(i)],
                                   tuple[static_cast<std::size_t>(i)]);
        for (const Perm& phi : frattini) coord[rep * phi] = tuple;
        int pos = d - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == p - 1)
            tuple[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    if (coord.size() != elems.size())
        throw consistency_error("maximal_subgroups: quotient coordinates incomplete");

    // Hyperplanes: normal vectors with leading coefficient 1, lexicographic.
    std::vector<PermGroup> out;
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    auto next_vector = [&]() -> bool {
        int pos = d - 1;
        while (pos >= 0 && v[static_cast<std::size_t>(pos)] == p - 1)
            v[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return false;
        ++v[static_cast<std::size_t>(pos)];
        return true;
    };
    while (next_vector()) {
        int lead = 0;
        while (v[static_cast<std::size_t>(lead)] == 0) ++lead;
        if (v[static_cast<std::size_t>(lead)] != 1) continue;
        std::vector<Perm> members;
        for (const Perm& x : elems) {
            const auto& cx = coord.at(x);
            long long dot = 0;
            for (int i = 0; i < d; ++i)
                dot += static_cast<long long>(cx[static_cast<std::size_t>(i)]) *
                       v[static_cast<std::size_t>(i)];
            if (dot % p == 0) members.push_back(x);
        }
        // Greedy small generating set for the subgroup.
        std::vector<Perm> sub_gens;
        std::vector<Perm> closed = {Perm(degree)};
        for (const Perm& x : members) {
            if (std::binary_search(closed.begin(), closed.end(), x)) continue;
            sub_gens.push_back(x);
            closed = generate_elements(degree, sub_gens, cap);
            if (closed.size() == members.size()) break;
        }
        out.push_back(PermGroup::with_elements(degree, std::move(sub_gens), std::move(members)));
    }
    return out;
}

// Every subgroup, including the trivial group and Q itself. Exponential in
// general; intended for tiny groups used as test oracles.
inline std::vector<PermGroup> all_subgroups(const PermGroup& Q, std::size_t cap = 4096) {
    const auto& elems = Q.elements(cap);
    const int degree = Q.degree();
    std::map<std::vector<Perm>, std::vector<Perm>> found; // elements -> generators
    std::deque<std::vector<Perm>> work;
    std::vector<Perm> triv = {Perm(degree)};
    found.emplace(triv, std::vector<Perm>{});
    work.push_back(triv);
    while (!work.empty()) {
        auto current = std::move(work.front());
        work.pop_front();
        const auto gens = found.at(current);
        for (const Perm& x : elems) {
            if (std::binary_search(current.begin(), current.end(), x)) continue;
            auto gens2 = gens;
            gens2.push_back(x);
            auto closure = generate_elements(degree, gens2, cap);
            if (found.emplace(closure, gens2).second) work.push_back(std::move(closure));
        }
    }
    std::vector<PermGroup> out;
    for (auto& [members, gens] : found)
        out.push_back(PermGroup::with_elements(degree, gens, members));
    return out;
}

// --- membership of a permutation in the structural pieces of one tableau ---

inline bool stabilizes_rows(const Tableau& t, const Perm& y) {
    for (const auto& row : t.rows())
        for (int e : row) {
            const int image = y(e);
            bool found = false;
            for (int f : row)
                if (f == image) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    return true;
}

inline bool stabilizes_columns(const Tableau& t, const Perm& y) {
    for (const auto& col : t.columns())
        for (int e : col) {
            const int image = y(e);
            bool found = false;
            for (int f : col)
                if (f == image) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    return true;
}

// y maps each column of t onto a column of t preserving row positions.
inline bool permutes_columns_as_blocks(const Tableau& t, const Perm& y) {
    const auto cols = t.columns();
    for (const auto& col : cols) {
        std::vector<int> image;
        image.reserve(col.size());
        for (int e : col) image.push_back(y(e));
        bool matched = false;
        for (const auto& target : cols)
            if (target == image) {
                matched = true;
                break;
            }
        if (!matched) return false;
    }
    return true;
}

// The conjugate group {by^-1 g by}, with the block structure transported.
inline PermGroup conjugated(const PermGroup& G, const Perm& by) {
    if (by.degree() != G.degree()) throw invalid_input("conjugated: degree mismatch");
    std::vector<Perm> gens;
    for (const Perm& g : G.generators()) gens.push_back(conjugate(g, by));
    std::optional<std::vector<SymmetricFactor>> structure;
    if (G.structure()) {
        structure.emplace();
        for (const auto& f : *G.structure()) {
            SymmetricFactor nf;
            for (const auto& b : f.blocks) {
                std::vector<int> nb;
                for (int x : b) nb.push_back(by(x));
                nf.blocks.push_back(std::move(nb));
            }
            structure->push_back(std::move(nf));
        }
    }
    return PermGroup(G.degree(), std::move(gens), std::move(structure));
}

} // namespace specht
