#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/partition.hpp"
#include "specht/perm.hpp"

namespace specht {

inline constexpr int kDefaultTableauCap = 14;

class Tabloid;

// Filling of the Young diagram of `shape` with distinct positive integers.
// A filling whose entries are exactly {1..n} is "proper"; subtableaux cut out
// of a larger tableau keep their original entries and are usually not proper.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != shape_.rows())
            throw invalid_input("tableau row count does not match shape");
        std::vector<int> entries;
        for (int r = 0; r < shape_.rows(); ++r) {
            if (static_cast<int>(rows_[static_cast<std::size_t>(r)].size()) != shape_.part(r))
                throw invalid_input("tableau row length does not match shape");
            for (int e : rows_[static_cast<std::size_t>(r)]) {
                if (e < 1) throw invalid_input("tableau entries must be positive");
                entries.push_back(e);
            }
        }
        std::sort(entries.begin(), entries.end());
        if (std::adjacent_find(entries.begin(), entries.end()) != entries.end())
            throw invalid_input("tableau entries must be distinct");
    }

    const Partition& shape() const { return shape_; }
    int box_count() const { return shape_.n(); }

    int entry(int r, int c) const {
        return rows_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int column_length(int c) const {
        int len = 0;
        while (len < shape_.rows() && shape_.part(len) > c) ++len;
        return len;
    }

    std::vector<int> column(int c) const {
        std::vector<int> out;
        for (int r = 0; r < column_length(c); ++r) out.push_back(entry(r, c));
        return out;
    }

    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> out;
        for (int c = 0; c < shape_.first_part(); ++c) out.push_back(column(c));
        return out;
    }

    // Sorted entry set.
    std::vector<int> support() const {
        std::vector<int> out;
        for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    bool proper() const {
        const auto s = support();
        for (int i = 0; i < static_cast<int>(s.size()); ++i)
            if (s[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    }

    // Rows concatenated top to bottom.
    std::vector<int> row_word() const {
        std::vector<int> out;
        for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
        return out;
    }

    bool row_standard() const {
        for (const auto& row : rows_)
            if (!std::is_sorted(row.begin(), row.end())) return false;
        return true;
    }

    bool column_standard() const {
        for (int c = 0; c < shape_.first_part(); ++c)
            for (int r = 1; r < column_length(c); ++r)
                if (entry(r - 1, c) >= entry(r, c)) return false;
        return true;
    }

    bool standard() const { return row_standard() && column_standard(); }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return a.rows_ <=> b.rows_;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

// Row-equivalence class of proper tableaux, kept in canonical form: the map
// sending each entry to its row. Two tableaux are row-equivalent exactly when
// these maps coincide.
class Tabloid {
public:
    Tabloid(Partition shape, std::vector<int> row_of)
        : shape_(std::move(shape)), row_of_(std::move(row_of)) {
        if (static_cast<int>(row_of_.size()) != shape_.n())
            throw invalid_input("tabloid row map has wrong length");
        std::vector<int> counts(static_cast<std::size_t>(shape_.rows()), 0);
        for (int r : row_of_) {
            if (r < 0 || r >= shape_.rows())
                throw invalid_input("tabloid row index out of range");
            ++counts[static_cast<std::size_t>(r)];
        }
        for (int r = 0; r < shape_.rows(); ++r)
            if (counts[static_cast<std::size_t>(r)] != shape_.part(r))
                throw invalid_input("tabloid row sizes do not match shape");
    }

    static Tabloid of(const Tableau& t) {
        if (!t.proper())
            throw invalid_input("tabloids are defined for fillings by {1..n} only");
        std::vector<int> row_of(static_cast<std::size_t>(t.box_count()), 0);
        for (int r = 0; r < t.shape().rows(); ++r)
            for (int e : t.rows()[static_cast<std::size_t>(r)])
                row_of[static_cast<std::size_t>(e - 1)] = r;
        return Tabloid(t.shape(), std::move(row_of));
    }

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }

    // 0-based row of an entry in 1..n.
    int row_of(int entry) const {
        if (entry < 1 || entry > n()) throw invalid_input("tabloid entry out of range");
        return row_of_[static_cast<std::size_t>(entry - 1)];
    }

    const std::vector<int>& row_map() const { return row_of_; }

    // Rows with entries in increasing order.
    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.rows()));
        for (int e = 1; e <= n(); ++e)
            out[static_cast<std::size_t>(row_of_[static_cast<std::size_t>(e - 1)])].push_back(e);
        return out;
    }

    // The row-standard tableau representing this class.
    Tableau representative() const { return Tableau(shape_, rows()); }

    std::vector<int> row_word() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n()));
        for (const auto& row : rows()) out.insert(out.end(), row.begin(), row.end());
        return out;
    }

    friend bool operator==(const Tabloid&, const Tabloid&) = default;
    friend auto operator<=>(const Tabloid& a, const Tabloid& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return a.row_of_ <=> b.row_of_;
    }

private:
    Partition shape_;
    std::vector<int> row_of_;
};

// Entries mapped through g. Needs g.degree() >= every entry.
inline Tableau act(const Tableau& t, const Perm& g) {
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& row : rows)
        for (int& e : row) e = g(e);
    return Tableau(t.shape(), std::move(rows));
}

inline Tabloid act(const Tabloid& tab, const Perm& g) {
    if (g.degree() != tab.n()) throw invalid_input("tabloid action: degree mismatch");
    std::vector<int> row_of(static_cast<std::size_t>(tab.n()), 0);
    for (int e = 1; e <= tab.n(); ++e)
        row_of[static_cast<std::size_t>(g(e) - 1)] = tab.row_of(e);
    return Tabloid(tab.shape(), std::move(row_of));
}

// Row i holds the consecutive block after rows 1..i-1. Standard, and the
// dominance-greatest standard tableau of its shape.
inline Tableau t_star(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int part : shape.parts()) {
        std::vector<int> row(static_cast<std::size_t>(part));
        std::iota(row.begin(), row.end(), next);
        next += part;
        rows.push_back(std::move(row));
    }
    return Tableau(shape, std::move(rows));
}

// Sorts every row increasingly. Idempotent; the result is row-equivalent to t.
inline Tableau row_straighten(const Tableau& t) {
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& row : rows) std::sort(row.begin(), row.end());
    return Tableau(t.shape(), std::move(rows));
}

// a <= b in the dominance order on tabloids of one shape: for every i and m,
// b has at least as many of the entries 1..m in its first i rows as a does.
inline bool dominance_leq(const Tabloid& a, const Tabloid& b) {
    if (a.shape() != b.shape()) throw invalid_input("dominance: shape mismatch");
    const int n = a.n();
    const int k = a.shape().rows();
    std::vector<int> ca(static_cast<std::size_t>(k), 0), cb(static_cast<std::size_t>(k), 0);
    for (int m = 1; m <= n; ++m) {
        ++ca[static_cast<std::size_t>(a.row_of(m))];
        ++cb[static_cast<std::size_t>(b.row_of(m))];
        int suma = 0, sumb = 0;
        for (int i = 0; i < k; ++i) {
            suma += ca[static_cast<std::size_t>(i)];
            sumb += cb[static_cast<std::size_t>(i)];
            if (sumb < suma) return false;
        }
    }
    return true;
}

// Dominance on standard tableaux of one shape, via their tabloids.
inline bool dominance_leq(const Tableau& a, const Tableau& b) {
    if (a.shape() != b.shape()) throw invalid_input("dominance: shape mismatch");
    if (!a.standard() || !b.standard())
        throw invalid_input("tableau dominance is defined for standard tableaux");
    return dominance_leq(Tabloid::of(a), Tabloid::of(b));
}

// All standard tableaux of the shape, sorted by lexicographic row reading
// word. That order refines dominance with dominating tableaux first, so the
// result starts with t_star.
inline std::vector<Tableau> standard_tableaux(const Partition& shape, int n_cap = kDefaultTableauCap) {
    if (shape.n() > n_cap)
        throw cap_exceeded("standard tableau enumeration capped at n = " + std::to_string(n_cap));
    std::vector<Tableau> out;
    const int k = shape.rows();
    const int n = shape.n();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k));
    std::vector<int> fill(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int m) -> void {
        if (m > n) {
            out.push_back(Tableau(shape, rows));
            return;
        }
        for (int r = 0; r < k; ++r) {
            const auto ru = static_cast<std::size_t>(r);
            if (fill[ru] >= shape.part(r)) continue;
            if (r > 0 && fill[ru - 1] <= fill[ru]) continue;
            rows[ru].push_back(m);
            ++fill[ru];
            self(self, m + 1);
            rows[ru].pop_back();
            --fill[ru];
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.row_word() < b.row_word();
    });
    return out;
}

// Bottom rows of t, one per part of mu.
inline Tableau subtableau_z(const SplittingContext& ctx, const Tableau& t) {
    if (t.shape() != ctx.lambda) throw invalid_input("subtableau_z: shape mismatch");
    const auto skip = static_cast<std::size_t>(ctx.lambda.rows() - ctx.mu.rows());
    std::vector<std::vector<int>> rows(t.rows().begin() + static_cast<std::ptrdiff_t>(skip),
                                       t.rows().end());
    return Tableau(ctx.mu, std::move(rows));
}

// Trailing columns of t: everything right of column mu_1 in the kept rows.
inline Tableau subtableau_u(const SplittingContext& ctx, const Tableau& t) {
    if (t.shape() != ctx.lambda) throw invalid_input("subtableau_u: shape mismatch");
    const int c0 = ctx.mu_first_part();
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < ctx.eta.rows(); ++r) {
        const auto& row = t.rows()[static_cast<std::size_t>(r)];
        rows.emplace_back(row.begin() + c0, row.end());
    }
    return Tableau(ctx.eta, std::move(rows));
}

// The permutation g with s.g = t (same shape, both proper).
inline Perm tableau_map(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape()) throw invalid_input("tableau_map: shape mismatch");
    if (!s.proper() || !t.proper()) throw invalid_input("tableau_map needs proper tableaux");
    std::vector<int> images(static_cast<std::size_t>(s.box_count()), 0);
    for (int r = 0; r < s.shape().rows(); ++r)
        for (int c = 0; c < s.shape().part(r); ++c)
            images[static_cast<std::size_t>(s.entry(r, c) - 1)] = t.entry(r, c);
    return Perm::from_images(std::move(images));
}

} // namespace specht
