#pragma once

// Exact linear algebra over Q: sorted sparse vectors, column-sparse
// matrices, dense matrices, and an incremental echelon basis that reports
// coordinates of dependent vectors.

#include "bkf/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bkf {

using Key = std::int64_t;

class SparseVector {
public:
    using Entry = std::pair<Key, Rational>;

    SparseVector() = default;
    static SparseVector unit(Key k) {
        SparseVector v;
        v.entries_.emplace_back(k, Rational(1));
        return v;
    }

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t nnz() const noexcept { return entries_.size(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// Leading (smallest) key. Precondition: !empty().
    Key lead_key() const { return entries_.front().first; }
    const Rational& lead_value() const { return entries_.front().second; }

    Rational get(Key k) const;
    void set(Key k, const Rational& value);
    void add(Key k, const Rational& value);

    /// this += scale * other
    void axpy(const Rational& scale, const SparseVector& other);
    void scale(const Rational& s);

    SparseVector& operator+=(const SparseVector& o) {
        axpy(Rational(1), o);
        return *this;
    }
    SparseVector& operator-=(const SparseVector& o) {
        axpy(Rational(-1), o);
        return *this;
    }
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(const Rational& s, SparseVector v) {
        v.scale(s);
        return v;
    }
    bool operator==(const SparseVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;  // sorted by key, no zero values
};

/// Matrix stored by columns; column j is the image of basis vector j.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_.size(); }
    const SparseVector& col(std::size_t j) const { return cols_[j]; }
    SparseVector& col(std::size_t j) { return cols_[j]; }
    void resize(std::size_t rows, std::size_t cols) {
        rows_ = rows;
        cols_.resize(cols);
    }
    Rational at(std::size_t i, std::size_t j) const { return cols_[j].get(static_cast<Key>(i)); }
    bool is_zero() const;

    SparseVector apply(const SparseVector& v) const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& s) const;
    bool operator==(const SparseMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    friend SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
        return a * b - b * a;
    }

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> cols_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const = default;
    bool is_zero() const;

    std::size_t rank() const;
    /// Basis of {x : A x = 0}, in reduced form (free variable set to 1).
    std::vector<std::vector<Rational>> nullspace() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Incrementally built semi-echelon basis of a subspace spanned by accepted
/// vectors. Every stored pivot row is kept as a combination of the accepted
/// inputs so dependent vectors can be expressed in the accepted basis.
class IncrementalBasis {
public:
    /// If v lies in the current span, returns its coordinates with respect to
    /// the accepted vectors (in acceptance order). Otherwise accepts v as a
    /// new basis vector and returns std::nullopt.
    std::optional<std::vector<Rational>> insert(const SparseVector& v);

    /// Coordinates of v in the accepted basis, or nullopt if v is not in the span.
    std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;

    std::size_t size() const noexcept { return pivots_.size(); }

private:
    struct Pivot {
        SparseVector row;                 // lead value normalized to 1
        std::vector<Rational> combo;      // row = sum combo[j] * accepted[j]
    };
    // Reduces v in place; returns coefficients c with v_in = sum c_k pivot_k + v_out.
    std::vector<Rational> reduce(SparseVector& v) const;
    std::optional<std::size_t> find_pivot(Key k) const;

    std::vector<Pivot> pivots_;
    std::vector<std::pair<Key, std::size_t>> pivot_index_;  // sorted by key
};

std::size_t rank(std::span<const SparseVector> vectors);

}  // namespace bkf
