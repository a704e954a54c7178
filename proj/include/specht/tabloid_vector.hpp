#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/numbers.hpp"
#include "specht/ring.hpp"
#include "specht/tableau.hpp"

namespace specht {

inline constexpr std::size_t kDefaultTermCap = 10'000'000;

// Sparse element of the permutation module spanned by the tabloids of one
// shape. Zero coefficients are never stored.
template <class Ring>
class TabloidVector {
public:
    using Value = typename Ring::Value;

    explicit TabloidVector(Ring ring) : ring_(std::move(ring)) {}

    const Ring& ring() const { return ring_; }
    const std::map<Tabloid, Value>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Tabloid& key, Value c) {
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Value coefficient(const Tabloid& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    TabloidVector& operator+=(const TabloidVector& other) {
        for (const auto& [key, c] : other.terms_) add_term(key, c);
        return *this;
    }

    void subtract_scaled(const TabloidVector& other, const Value& scale) {
        for (const auto& [key, c] : other.terms_)
            add_term(key, ring_.neg(ring_.mul(scale, c)));
    }

    TabloidVector scaled(const Value& scale) const {
        TabloidVector out(ring_);
        for (const auto& [key, c] : terms_) out.add_term(key, ring_.mul(scale, c));
        return out;
    }

    friend bool operator==(const TabloidVector& a, const TabloidVector& b) {
        return a.terms_ == b.terms_;
    }

private:
    Ring ring_;
    std::map<Tabloid, Value> terms_;
};

template <class Ring>
TabloidVector<Ring> act(const TabloidVector<Ring>& v, const Perm& g) {
    TabloidVector<Ring> out(v.ring());
    for (const auto& [key, c] : v.terms()) out.add_term(act(key, g), c);
    return out;
}

// Number of terms the signed column sum will have.
inline BigInt column_group_order(const Tableau& t) {
    BigInt total = 1;
    for (int c = 0; c < t.shape().first_part(); ++c) total *= factorial(t.column_length(c));
    return total;
}

namespace detail {

// All permutations of {0..len-1} with their signs, in lexicographic order.
inline std::pair<std::vector<std::vector<int>>, std::vector<int>> position_perms(int len) {
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
    std::vector<int> p(static_cast<std::size_t>(len));
    std::iota(p.begin(), p.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j)
                if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
        perms.push_back(p);
        signs.push_back(inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(p.begin(), p.end()));
    return {std::move(perms), std::move(signs)};
}

} // namespace detail

// The signed sum of {t}g over the column stabilizer of t. The coefficient of
// {t} itself is +1, and distinct column permutations give distinct tabloids.
template <class Ring>
TabloidVector<Ring> polytabloid(const Ring& ring, const Tableau& t,
                                std::size_t term_cap = kDefaultTermCap) {
    if (!t.proper()) throw invalid_input("polytabloid needs a proper tableau");
    if (column_group_order(t) > term_cap)
        throw cap_exceeded("polytabloid term budget of " + std::to_string(term_cap) +
                           " exceeded");

    const auto columns = t.columns();
    const int ncols = static_cast<int>(columns.size());

    // Per-column-length permutation tables, shared between equal columns.
    std::map<int, std::pair<std::vector<std::vector<int>>, std::vector<int>>> tables;
    for (const auto& col : columns) {
        const int len = static_cast<int>(col.size());
        if (!tables.count(len)) tables.emplace(len, detail::position_perms(len));
    }

    std::vector<int> base_row_of(static_cast<std::size_t>(t.box_count()), 0);
    for (int r = 0; r < t.shape().rows(); ++r)
        for (int e : t.rows()[static_cast<std::size_t>(r)])
            base_row_of[static_cast<std::size_t>(e - 1)] = r;

    TabloidVector<Ring> out(ring);
    std::vector<std::size_t> choice(static_cast<std::size_t>(ncols), 0);
    for (;;) {
        std::vector<int> row_of = base_row_of;
        int sign = 1;
        for (int c = 0; c < ncols; ++c) {
            const auto& col = columns[static_cast<std::size_t>(c)];
            const auto& [perms, signs] = tables.at(static_cast<int>(col.size()));
            const auto& sigma = perms[choice[static_cast<std::size_t>(c)]];
            sign *= signs[choice[static_cast<std::size_t>(c)]];
            for (std::size_t j = 0; j < col.size(); ++j)
                row_of[static_cast<std::size_t>(col[j] - 1)] = sigma[j];
        }
        out.add_term(Tabloid(t.shape(), std::move(row_of)), ring.from_int(sign));

        int pos = ncols - 1;
        while (pos >= 0) {
            const auto& col = columns[static_cast<std::size_t>(pos)];
            const auto limit = tables.at(static_cast<int>(col.size())).first.size();
            if (++choice[static_cast<std::size_t>(pos)] < limit) break;
            choice[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

} // namespace specht
