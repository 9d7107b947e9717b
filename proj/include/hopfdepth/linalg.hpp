#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfdepth/errors.hpp"
#include "hopfdepth/rational.hpp"

namespace hopfdepth {

// Exact dense linear algebra over any field type F with value semantics,
// F{} == 0, F(1) == 1, the four arithmetic operators and an is_zero(F)
// overload. Rows are the primary orientation throughout: subspaces are row
// spans, and a matrix is a vector of rows.

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

template <class F>
using Row = std::vector<F>;

template <class F>
using Matrix = std::vector<Row<F>>;

template <class F>
bool is_zero_row(const Row<F>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

/// target += factor * source
template <class F>
void axpy(Row<F>& target, const F& factor, const Row<F>& source) {
    if (is_zero(factor)) return;
    for (std::size_t i = 0; i < target.size(); ++i)
        if (!is_zero(source[i])) target[i] += factor * source[i];
}

/// Reduced row echelon form of a row list. `transform` (if tracked) expresses
/// each reduced row as a combination of the input rows.
template <class F>
struct RowEchelon {
    Matrix<F> rows;
    std::vector<std::size_t> pivots;
    Matrix<F> transform;
};

/// Gauss-Jordan elimination. Pivot columns are scanned left to right and the
/// pivot row is the first remaining row with a nonzero entry, so the result
/// is deterministic for a given input order.
template <class F>
RowEchelon<F> row_echelon(Matrix<F> m, std::size_t cols, bool track_transform = false) {
    const std::size_t n = m.size();
    Matrix<F> t;
    if (track_transform) {
        t.assign(n, Row<F>(n));
        for (std::size_t i = 0; i < n; ++i) t[i][i] = F(1);
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t p = r;
        while (p < n && is_zero(m[p][c])) ++p;
        if (p == n) continue;
        std::swap(m[p], m[r]);
        if (track_transform) std::swap(t[p], t[r]);
        const F inv = F(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        if (track_transform)
            for (auto& x : t[r]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            const F f = -m[i][c];
            axpy(m[i], f, m[r]);
            if (track_transform) axpy(t[i], f, t[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    if (track_transform) t.resize(r);
    return {std::move(m), std::move(pivots), std::move(t)};
}

template <class F>
std::size_t rank(const Matrix<F>& m, std::size_t cols) {
    return row_echelon(m, cols).rows.size();
}

/// Basis of {x : A x = 0} for A with `cols` columns.
template <class F>
Matrix<F> nullspace(const Matrix<F>& a, std::size_t cols) {
    auto e = row_echelon(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix<F> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row<F> v(cols);
        v[free] = F(1);
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incrementally built row span. Stored rows are normalized at their pivot
/// and vanish at the pivots of all earlier rows, so a single forward sweep
/// reduces any vector against the span.
template <class F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    Subspace(std::size_t ambient, const Matrix<F>& spanning) : ambient_(ambient) {
        for (const auto& v : spanning) insert(v);
    }

    std::size_t ambient_dimension() const noexcept { return ambient_; }
    std::size_t dimension() const noexcept { return rows_.size(); }

    Row<F> reduce(Row<F> v) const {
        if (v.size() != ambient_) throw DimensionMismatch("subspace: vector length mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (is_zero(v[pivots_[r]])) continue;
            const F f = -v[pivots_[r]];
            axpy(v, f, rows_[r]);
        }
        return v;
    }

    bool contains(const Row<F>& v) const { return is_zero_row(reduce(v)); }

    /// Adds v to the span; returns false if it was already contained.
    bool insert(const Row<F>& v) {
        auto w = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && is_zero(w[p])) ++p;
        if (p == ambient_) return false;
        const F inv = F(1) / w[p];
        for (auto& x : w) x *= inv;
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

    /// Equal as subspaces of the same ambient space.
    bool same_span(const Subspace& other) const {
        if (dimension() != other.dimension()) return false;
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    const Matrix<F>& rows() const noexcept { return rows_; }

private:
    std::size_t ambient_;
    Matrix<F> rows_;
    std::vector<std::size_t> pivots_;
};

/// A linearly independent list of rows with exact coordinate recovery:
/// coordinates(v) returns c with Σ c_i rows_i = v, or nullopt if v is not in
/// the span.
template <class F>
class RowBasis {
public:
    RowBasis() = default;
    RowBasis(Matrix<F> rows, std::size_t ambient) : ambient_(ambient), input_(std::move(rows)) {
        auto e = row_echelon(input_, ambient_, true);
        if (e.rows.size() != input_.size())
            throw DimensionMismatch("row basis: rows are linearly dependent");
        echelon_ = std::move(e);
    }

    std::size_t size() const noexcept { return input_.size(); }
    std::size_t ambient_dimension() const noexcept { return ambient_; }
    const Matrix<F>& rows() const noexcept { return input_; }

    std::optional<Row<F>> coordinates(const Row<F>& v) const {
        if (v.size() != ambient_) throw DimensionMismatch("row basis: vector length mismatch");
        const std::size_t k = input_.size();
        Row<F> residual = v;
        Row<F> c(k);
        for (std::size_t r = 0; r < k; ++r) {
            const F a = v[echelon_.pivots[r]];
            if (is_zero(a)) continue;
            axpy(residual, F(-a), echelon_.rows[r]);
            axpy(c, a, echelon_.transform[r]);
        }
        if (!is_zero_row(residual)) return std::nullopt;
        return c;
    }

    bool contains(const Row<F>& v) const { return coordinates(v).has_value(); }

    /// Σ c_i rows_i
    Row<F> combine(const Row<F>& c) const {
        Row<F> out(ambient_);
        for (std::size_t i = 0; i < c.size(); ++i) axpy(out, c[i], input_[i]);
        return out;
    }

private:
    std::size_t ambient_ = 0;
    Matrix<F> input_;
    RowEchelon<F> echelon_;
};

}  // namespace hopfdepth
