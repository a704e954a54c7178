#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/ring.hpp"

namespace specht {

template <class Ring>
struct Matrix {
    using Value = typename Ring::Value;

    int rows = 0;
    int cols = 0;
    std::vector<Value> data; // row-major

    Matrix() = default;
    Matrix(int r, int c, Value fill)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

    static Matrix zero(const Ring& ring, int r, int c) { return Matrix(r, c, ring.zero()); }

    static Matrix identity(const Ring& ring, int n) {
        Matrix m(n, n, ring.zero());
        for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
        return m;
    }

    Value& at(int i, int j) {
        return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                    static_cast<std::size_t>(j)];
    }
    const Value& at(int i, int j) const {
        return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                    static_cast<std::size_t>(j)];
    }

    std::vector<Value> row(int i) const {
        return std::vector<Value>(data.begin() + static_cast<std::ptrdiff_t>(i) * cols,
                                  data.begin() + (static_cast<std::ptrdiff_t>(i) + 1) * cols);
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <class Ring>
Matrix<Ring> transpose(const Matrix<Ring>& m) {
    Matrix<Ring> t(m.cols, m.rows, typename Ring::Value{});
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

template <class Ring>
Matrix<Ring> mat_mul(const Ring& ring, const Matrix<Ring>& a, const Matrix<Ring>& b) {
    if (a.cols != b.rows) throw invalid_input("matrix product: dimension mismatch");
    Matrix<Ring> c(a.rows, b.cols, ring.zero());
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const auto& aik = a.at(i, k);
            if (ring.is_zero(aik)) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = ring.add(c.at(i, j), ring.mul(aik, b.at(k, j)));
        }
    return c;
}

template <class Ring>
Matrix<Ring> mat_sub(const Ring& ring, const Matrix<Ring>& a, const Matrix<Ring>& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw invalid_input("matrix difference: dimension mismatch");
    Matrix<Ring> c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = ring.sub(a.data[i], b.data[i]);
    return c;
}

// v * M for a row vector v.
template <class Ring>
std::vector<typename Ring::Value> row_vec_mul(const Ring& ring,
                                              const std::vector<typename Ring::Value>& v,
                                              const Matrix<Ring>& m) {
    if (static_cast<int>(v.size()) != m.rows)
        throw invalid_input("row vector product: dimension mismatch");
    std::vector<typename Ring::Value> out(static_cast<std::size_t>(m.cols), ring.zero());
    for (int i = 0; i < m.rows; ++i) {
        const auto& vi = v[static_cast<std::size_t>(i)];
        if (ring.is_zero(vi)) continue;
        for (int j = 0; j < m.cols; ++j)
            out[static_cast<std::size_t>(j)] =
                ring.add(out[static_cast<std::size_t>(j)], ring.mul(vi, m.at(i, j)));
    }
    return out;
}

// Reduced row echelon form in place; returns the pivot columns. Canonical:
// pivots are 1, pivot columns are cleared above and below, rows ordered by
// pivot column, zero rows moved to the bottom.
inline std::vector<int> rref_in_place(const PrimeField& F, Matrix<PrimeField>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (!F.is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        const auto inv = F.inv(m.at(row, col));
        for (int j = 0; j < m.cols; ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            const auto f = m.at(i, col);
            if (F.is_zero(f)) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int field_rank(const PrimeField& F, Matrix<PrimeField> m) {
    return static_cast<int>(rref_in_place(F, m).size());
}

// Basis (as rows) of the right kernel {x : M x = 0}.
inline Matrix<PrimeField> kernel_basis(const PrimeField& F, Matrix<PrimeField> m) {
    const int n = m.cols;
    const auto pivots = rref_in_place(F, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    Matrix<PrimeField> basis(static_cast<int>(free_cols.size()), n, F.zero());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis.at(static_cast<int>(k), f) = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis.at(static_cast<int>(k), pivots[r]) = F.neg(m.at(static_cast<int>(r), f));
    }
    return basis;
}

// Exact rank over the integers: fraction-free (Bareiss) elimination with row
// swaps and column skipping; every division is exact.
inline int integer_rank(Matrix<IntegerRing> m) {
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        for (int i = row + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j)
                m.at(i, j) = (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
    }
    return row;
}

// Row space of vectors over GF(p), held in reduced row echelon form, which is
// unique per subspace; equality of subspaces is equality of the forms.
class Subspace {
public:
    Subspace(PrimeField F, int ambient)
        : field_(F), ambient_(ambient), basis_(0, ambient, F.zero()) {}

    static Subspace span(const PrimeField& F, Matrix<PrimeField> rows) {
        Subspace s(F, rows.cols);
        const auto pivots = rref_in_place(F, rows);
        Matrix<PrimeField> basis(static_cast<int>(pivots.size()), rows.cols, F.zero());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (int j = 0; j < rows.cols; ++j)
                basis.at(static_cast<int>(r), j) = rows.at(static_cast<int>(r), j);
        s.basis_ = std::move(basis);
        s.pivots_ = pivots;
        return s;
    }

    static Subspace full(const PrimeField& F, int ambient) {
        return span(F, Matrix<PrimeField>::identity(F, ambient));
    }

    const PrimeField& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows; }
    const Matrix<PrimeField>& basis() const { return basis_; }

    bool contains(std::vector<std::int64_t> v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw invalid_input("subspace membership: dimension mismatch");
        for (int r = 0; r < basis_.rows; ++r) {
            const auto f = v[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
            if (field_.is_zero(f)) continue;
            for (int j = 0; j < ambient_; ++j)
                v[static_cast<std::size_t>(j)] =
                    field_.sub(v[static_cast<std::size_t>(j)], field_.mul(f, basis_.at(r, j)));
        }
        for (auto x : v)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool contains_subspace(const Subspace& other) const {
        for (int r = 0; r < other.basis_.rows; ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        if (ambient_ != other.ambient_ || !(field_ == other.field_))
            throw invalid_input("subspace sum: ambient mismatch");
        Matrix<PrimeField> stacked(basis_.rows + other.basis_.rows, ambient_, field_.zero());
        for (int r = 0; r < basis_.rows; ++r)
            for (int j = 0; j < ambient_; ++j) stacked.at(r, j) = basis_.at(r, j);
        for (int r = 0; r < other.basis_.rows; ++r)
            for (int j = 0; j < ambient_; ++j)
                stacked.at(basis_.rows + r, j) = other.basis_.at(r, j);
        return span(field_, std::move(stacked));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    PrimeField field_;
    int ambient_;
    Matrix<PrimeField> basis_;
    std::vector<int> pivots_;
};

} // namespace specht
