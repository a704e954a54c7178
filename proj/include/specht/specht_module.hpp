#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/matrix.hpp"
#include "specht/partition.hpp"
#include "specht/perm.hpp"
#include "specht/ring.hpp"
#include "specht/tableau.hpp"
#include "specht/tabloid_vector.hpp"

namespace specht {

// Standard tableaux of one shape in the frozen basis order: lexicographic by
// row reading word, so dominating tableaux come first and t_star has index 0.
class StandardBasis {
public:
    explicit StandardBasis(Partition shape, int n_cap = kDefaultTableauCap)
        : shape_(std::move(shape)), tableaux_(standard_tableaux(shape_, n_cap)) {
        for (int i = 0; i < dimension(); ++i)
            index_.emplace(Tabloid::of(tableaux_[static_cast<std::size_t>(i)]), i);
        if (!tableaux_.empty() && !(tableaux_.front() == t_star(shape_)))
            throw consistency_error("standard basis does not start at the dominance maximum");
    }

    const Partition& shape() const { return shape_; }
    int dimension() const { return static_cast<int>(tableaux_.size()); }
    const std::vector<Tableau>& tableaux() const { return tableaux_; }
    const Tableau& tableau(int i) const { return tableaux_.at(static_cast<std::size_t>(i)); }

    std::optional<int> index_of(const Tabloid& key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    Partition shape_;
    std::vector<Tableau> tableaux_;
    std::map<Tabloid, int> index_;
};

// The span of the polytabloids of one shape over one ring, in the standard
// polytabloid basis. Caches standard polytabloids and representation matrices;
// not safe for concurrent use, clone per thread instead.
template <class Ring>
class SpechtModule {
public:
    using Value = typename Ring::Value;

    SpechtModule(Ring ring, std::shared_ptr<const StandardBasis> basis,
                 std::size_t term_cap = kDefaultTermCap)
        : ring_(std::move(ring)),
          basis_(std::move(basis)),
          term_cap_(term_cap),
          poly_cache_(static_cast<std::size_t>(basis_->dimension())) {}

    SpechtModule(Ring ring, const Partition& shape, int n_cap = kDefaultTableauCap,
                 std::size_t term_cap = kDefaultTermCap)
        : SpechtModule(std::move(ring), std::make_shared<const StandardBasis>(shape, n_cap),
                       term_cap) {}

    const Ring& ring() const { return ring_; }
    const StandardBasis& basis() const { return *basis_; }
    const Partition& shape() const { return basis_->shape(); }
    int dimension() const { return basis_->dimension(); }

    const TabloidVector<Ring>& standard_polytabloid(int i) const {
        auto& slot = poly_cache_.at(static_cast<std::size_t>(i));
        if (!slot) slot = polytabloid(ring_, basis_->tableau(i), term_cap_);
        return *slot;
    }

    // Coordinates in the standard basis, by greedy elimination: repeatedly
    // take the term whose row-standard representative has the least row word
    // (a dominance-maximal term), which must be the tabloid of a standard
    // tableau, and subtract that standard polytabloid.
    std::vector<Value> expand(TabloidVector<Ring> v) const {
        std::vector<Value> coords(static_cast<std::size_t>(dimension()), ring_.zero());
        while (!v.zero()) {
            const Tabloid* best = nullptr;
            std::vector<int> best_word;
            for (const auto& [key, c] : v.terms()) {
                auto word = key.row_word();
                if (!best || word < best_word) {
                    best = &key;
                    best_word = std::move(word);
                }
            }
            const auto index = basis_->index_of(*best);
            if (!index)
                throw invalid_input("vector is not in the span of the standard polytabloids");
            const Value c = v.coefficient(*best);
            coords[static_cast<std::size_t>(*index)] =
                ring_.add(coords[static_cast<std::size_t>(*index)], c);
            v.subtract_scaled(standard_polytabloid(*index), c);
        }
        return coords;
    }

    std::vector<Value> coords_of_polytabloid(const Tableau& t) const {
        return expand(polytabloid(ring_, t, term_cap_));
    }

    TabloidVector<Ring> from_coords(const std::vector<Value>& coords) const {
        if (static_cast<int>(coords.size()) != dimension())
            throw invalid_input("coordinate vector has wrong length");
        TabloidVector<Ring> out(ring_);
        for (int i = 0; i < dimension(); ++i) {
            const auto& c = coords[static_cast<std::size_t>(i)];
            if (ring_.is_zero(c)) continue;
            TabloidVector<Ring> scaled = standard_polytabloid(i).scaled(c);
            out += scaled;
        }
        return out;
    }

    // Matrix of the right action of g: row i holds the coordinates of the
    // image of the i-th standard polytabloid, so M(gh) = M(g) M(h) with
    // coordinate rows acting on the left.
    const Matrix<Ring>& rep_matrix(const Perm& g) const {
        auto it = rep_cache_.find(g);
        if (it != rep_cache_.end()) return it->second;
        Matrix<Ring> m(dimension(), dimension(), ring_.zero());
        for (int i = 0; i < dimension(); ++i) {
            const auto coords = expand(act(standard_polytabloid(i), g));
            for (int j = 0; j < dimension(); ++j)
                m.at(i, j) = coords[static_cast<std::size_t>(j)];
        }
        return rep_cache_.emplace(g, std::move(m)).first->second;
    }

    std::vector<Value> act_coords(const std::vector<Value>& coords, const Perm& g) const {
        return row_vec_mul(ring_, coords, rep_matrix(g));
    }

private:
    Ring ring_;
    std::shared_ptr<const StandardBasis> basis_;
    std::size_t term_cap_;
    mutable std::vector<std::optional<TabloidVector<Ring>>> poly_cache_;
    mutable std::map<Perm, Matrix<Ring>> rep_cache_;
};

inline BigInt specht_dimension(const Partition& shape) { return syt_count(shape); }

} // namespace specht
