#include "bkf/linalg.hpp"

#include <algorithm>

namespace bkf {

// ---------------------------------------------------------------- SparseVector

Rational SparseVector::get(Key k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, Key key) { return e.first < key; });
    if (it != entries_.end() && it->first == k) return it->second;
    return Rational(0);
}

void SparseVector::set(Key k, const Rational& value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, Key key) { return e.first < key; });
    if (it != entries_.end() && it->first == k) {
        if (value == 0)
            entries_.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        entries_.emplace(it, k, value);
    }
}

void SparseVector::add(Key k, const Rational& value) {
    if (value == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, Key key) { return e.first < key; });
    if (it != entries_.end() && it->first == k) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    } else {
        entries_.emplace(it, k, value);
    }
}

void SparseVector::axpy(const Rational& s, const SparseVector& other) {
    if (s == 0 || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = other.entries_.begin(), be = other.entries_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == ae || b->first < a->first) {
            out.emplace_back(b->first, s * b->second);
            ++b;
        } else {
            Rational v = a->second + s * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

void SparseVector::scale(const Rational& s) {
    if (s == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= s;
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i] = SparseVector::unit(static_cast<Key>(i));
    return m;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [k, val] : v) out.axpy(val, cols_[static_cast<std::size_t>(k)]);
    return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols() != o.rows()) throw Error("linalg", "matrix product shape mismatch");
    SparseMatrix out(rows_, o.cols());
    for (std::size_t j = 0; j < o.cols(); ++j) out.cols_[j] = apply(o.cols_[j]);
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) throw Error("linalg", "matrix sum shape mismatch");
    SparseMatrix out = *this;
    for (std::size_t j = 0; j < cols(); ++j) out.cols_[j] += o.cols_[j];
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) throw Error("linalg", "matrix difference shape mismatch");
    SparseMatrix out = *this;
    for (std::size_t j = 0; j < cols(); ++j) out.cols_[j] -= o.cols_[j];
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix out = *this;
    for (auto& c : out.cols_) c.scale(s);
    return out;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("linalg", "matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) out(i, j) += a * o(k, j);
        }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("linalg", "matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
        Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (a(row, j) != 0) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return rref(copy).size();
}

std::vector<std::vector<Rational>> Matrix::nullspace() const {
    Matrix r = *this;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols_);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

// ---------------------------------------------------------------- IncrementalBasis

std::optional<std::size_t> IncrementalBasis::find_pivot(Key k) const {
    auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), k,
                               [](const auto& e, Key key) { return e.first < key; });
    if (it != pivot_index_.end() && it->first == k) return it->second;
    return std::nullopt;
}

std::vector<Rational> IncrementalBasis::reduce(SparseVector& v) const {
    std::vector<Rational> coeff(pivots_.size());
    while (!v.empty()) {
        auto p = find_pivot(v.lead_key());
        if (!p) break;
        Rational c = v.lead_value();
        v.axpy(-c, pivots_[*p].row);
        coeff[*p] += c;
    }
    return coeff;
}

std::optional<std::vector<Rational>> IncrementalBasis::coordinates(const SparseVector& input) const {
    SparseVector v = input;
    auto coeff = reduce(v);
    if (!v.empty()) return std::nullopt;
    std::vector<Rational> out(pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        if (coeff[k] == 0) continue;
        const auto& combo = pivots_[k].combo;
        for (std::size_t j = 0; j < combo.size(); ++j)
            if (combo[j] != 0) out[j] += coeff[k] * combo[j];
    }
    return out;
}

std::optional<std::vector<Rational>> IncrementalBasis::insert(const SparseVector& input) {
    SparseVector v = input;
    auto coeff = reduce(v);
    const std::size_t n = pivots_.size();
    std::vector<Rational> combined(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        if (coeff[k] == 0) continue;
        const auto& combo = pivots_[k].combo;
        for (std::size_t j = 0; j < combo.size(); ++j)
            if (combo[j] != 0) combined[j] += coeff[k] * combo[j];
    }
    if (v.empty()) {
        combined.pop_back();
        return combined;
    }
    // v_reduced = input - sum coeff_k pivot_k = e_new - combined
    Rational inv = 1 / v.lead_value();
    for (auto& c : combined) c = -c * inv;
    combined[n] = inv;
    v.scale(inv);
    Key lead = v.lead_key();
    pivots_.push_back(Pivot{std::move(v), std::move(combined)});
    auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), lead,
                               [](const auto& e, Key key) { return e.first < key; });
    pivot_index_.emplace(it, lead, n);
    return std::nullopt;
}

std::size_t rank(std::span<const SparseVector> vectors) {
    // Coordinates are not needed, so reduce without tracking combinations.
    std::vector<SparseVector> rows;
    std::vector<std::pair<Key, std::size_t>> index;
    for (const auto& input : vectors) {
        SparseVector v = input;
        while (!v.empty()) {
            auto it = std::lower_bound(index.begin(), index.end(), v.lead_key(),
                                       [](const auto& e, Key key) { return e.first < key; });
            if (it == index.end() || it->first != v.lead_key()) break;
            Rational c = v.lead_value();
            v.axpy(-c, rows[it->second]);
        }
        if (v.empty()) continue;
        v.scale(1 / v.lead_value());
        Key lead = v.lead_key();
        auto it = std::lower_bound(index.begin(), index.end(), lead,
                                   [](const auto& e, Key key) { return e.first < key; });
        index.emplace(it, lead, rows.size());
        rows.push_back(std::move(v));
    }
    return rows.size();
}

}  // namespace bkf
