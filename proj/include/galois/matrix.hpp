#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "galois/rational.hpp"

namespace galois {

// Dense row-major matrix over an exact field. Elimination uses plain
// exact Gaussian elimination; the pivot is the first nonzero entry
// scanning down the column (lowest row index), which keeps every
// reduced form deterministic.
template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(int rows, int cols, const K& fill)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Matrix zero(int rows, int cols, const K& model) {
        return Matrix(rows, cols, zero_like(model));
    }

    static Matrix identity(int n, const K& model) {
        Matrix m = zero(n, n, model);
        const K one = one_like(model);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<K>>& cols, const K& model) {
        int r = cols.empty() ? 0 : static_cast<int>(cols[0].size());
        Matrix m = zero(r, static_cast<int>(cols.size()), model);
        for (size_t j = 0; j < cols.size(); ++j) {
            if (static_cast<int>(cols[j].size()) != r)
                throw std::invalid_argument("ragged column list");
            for (int i = 0; i < r; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows, const K& model) {
        int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        Matrix m = zero(static_cast<int>(rows.size()), c, model);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("ragged row list");
            for (int j = 0; j < c; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        if (e_.empty() && o.e_.empty()) return Matrix();
        const K model = e_.empty() ? o.e_[0] : e_[0];
        Matrix r = zero(rows_, o.cols_, model);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (is_zero_elem(a)) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix difference shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<K> r;
        r.reserve(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            K acc = v.empty() ? K() : zero_like(v[0]);
            if (v.empty() && !e_.empty()) acc = zero_like(e_[0]);
            for (int j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[static_cast<size_t>(j)];
            r.push_back(std::move(acc));
        }
        return r;
    }

    std::vector<K> column(int j) const {
        std::vector<K> r;
        r.reserve(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) r.push_back(at(i, j));
        return r;
    }

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int lead = 0;
        for (int col = 0; col < cols_ && lead < rows_; ++col) {
            int p = -1;
            for (int i = lead; i < rows_; ++i)
                if (!is_zero_elem(at(i, col))) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != lead)
                for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(lead, j));
            K inv = one_like(at(lead, col)) / at(lead, col);
            for (int j = 0; j < cols_; ++j) at(lead, j) = at(lead, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == lead || is_zero_elem(at(i, col))) continue;
                K f = at(i, col);
                for (int j = 0; j < cols_; ++j) at(i, j) = at(i, j) - f * at(lead, j);
            }
            pivots.push_back(col);
            ++lead;
        }
        return pivots;
    }

    int rank() const {
        Matrix tmp = *this;
        return static_cast<int>(tmp.rref().size());
    }

    K determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        if (rows_ == 0) throw std::invalid_argument("determinant of empty matrix");
        Matrix tmp = *this;
        K det = one_like(e_[0]);
        for (int col = 0; col < cols_; ++col) {
            int p = -1;
            for (int i = col; i < rows_; ++i)
                if (!is_zero_elem(tmp.at(i, col))) {
                    p = i;
                    break;
                }
            if (p < 0) return zero_like(e_[0]);
            if (p != col) {
                for (int j = 0; j < cols_; ++j) std::swap(tmp.at(p, j), tmp.at(col, j));
                det = zero_like(det) - det;
            }
            det = det * tmp.at(col, col);
            K inv = one_like(det) / tmp.at(col, col);
            for (int i = col + 1; i < rows_; ++i) {
                if (is_zero_elem(tmp.at(i, col))) continue;
                K f = tmp.at(i, col) * inv;
                for (int j = col; j < cols_; ++j)
                    tmp.at(i, j) = tmp.at(i, j) - f * tmp.at(col, j);
            }
        }
        return det;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        if (rows_ == 0) return Matrix();
        Matrix aug = zero(rows_, 2 * cols_, e_[0]);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = one_like(e_[0]);
        }
        auto pivots = aug.rref();
        if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
            if (pivots[static_cast<size_t>(i)] != i) return std::nullopt;
        Matrix inv = zero(rows_, cols_, e_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

  private:
    int rows_, cols_;
    std::vector<K> e_;
};

// Exact basis of the right null space { v : m v = 0 }. Free variables
// are set to 1 one at a time in ascending column order, so the basis is
// canonical for a given matrix.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m, const K& model) {
    Matrix<K> r = m;
    std::vector<int> pivots = r.rref();
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<K>> basis;
    const K zero = zero_like(model);
    const K one = one_like(model);
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<K> v(static_cast<size_t>(m.cols()), zero);
        v[static_cast<size_t>(free_col)] = one;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<size_t>(pivots[pi])] =
                zero - r.at(static_cast<int>(pi), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves m x = b exactly; empty when inconsistent.
template <class K>
std::optional<std::vector<K>> solve_linear(const Matrix<K>& m, const std::vector<K>& b,
                                           const K& model) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve shape mismatch");
    Matrix<K> aug = Matrix<K>::zero(m.rows(), m.cols() + 1, model);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<K> x(static_cast<size_t>(m.cols()), zero_like(model));
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[static_cast<size_t>(pivots[pi])] = aug.at(static_cast<int>(pi), m.cols());
    return x;
}

using QMatrix = Matrix<Rational>;

}  // namespace galois
