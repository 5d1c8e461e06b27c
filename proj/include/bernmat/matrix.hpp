// Copyright 2026 The bernmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BERNMAT_MATRIX_HPP
#define BERNMAT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bernmat/errors.hpp"
#include "bernmat/polynomial.hpp"
#include "bernmat/rational.hpp"

namespace bernmat {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    using value_type = F;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    /// Throws DomainError on ragged input.
    static Matrix from_rows(const std::vector<std::vector<F>> &rows)
    {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    F &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const F &at(std::size_t i, std::size_t j) const
    {
        if (i >= rows_ || j >= cols_)
            throw RangeError("matrix index out of range");
        return (*this)(i, j);
    }

    std::vector<F> column(std::size_t j) const
    {
        std::vector<F> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c.push_back(at(i, j));
        return c;
    }

    /// Drops the last column.
    Matrix without_last_column() const
    {
        if (cols_ == 0)
            throw DomainError("matrix has no column to drop");
        Matrix m(rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j + 1 < cols_; ++j)
                m(i, j) = (*this)(i, j);
        return m;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    F trace() const
    {
        require_square("trace");
        F t(0);
        for (std::size_t i = 0; i < rows_; ++i)
            t += (*this)(i, i);
        return t;
    }

    void require_square(const char *op) const
    {
        if (!is_square())
            throw DomainError(std::string(op) + " needs a square matrix, got " + std::to_string(rows_) +
                              "x" + std::to_string(cols_));
    }

    friend Matrix operator+(const Matrix &a, const Matrix &b)
    {
        a.require_same_shape(b, "addition");
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] += b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix &a, const Matrix &b)
    {
        a.require_same_shape(b, "subtraction");
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] -= b.data_[k];
        return r;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.cols_ != b.rows_)
            throw DomainError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                              std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                              std::to_string(b.cols_));
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F &aik = a(i, k);
                if (aik == F(0))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const F &c, Matrix m)
    {
        for (auto &x : m.data_)
            x *= c;
        return m;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    void require_same_shape(const Matrix &o, const char *op) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DomainError(std::string("matrix ") + op + " shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

using RationalMatrix = Matrix<Rational>;

template <class F>
Matrix<F> pow(const Matrix<F> &a, unsigned exponent)
{
    a.require_square("matrix power");
    Matrix<F> result = Matrix<F>::identity(a.rows());
    Matrix<F> base = a;
    while (exponent) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

/// Exact elimination, pivoting on the first nonzero entry of each column.
/// The 0x0 determinant is 1.
template <class F>
F determinant(Matrix<F> a)
{
    a.require_square("determinant");
    const std::size_t n = a.rows();
    F det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == F(0))
            ++pivot;
        if (pivot == n)
            return F(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        const F p = a(col, col);
        det *= p;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == F(0))
                continue;
            F factor = a(i, col) / p;
            for (std::size_t j = col; j < n; ++j)
                a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

/// Gauss-Jordan inverse with first-nonzero pivoting. This is the reference
/// the trace-based inverses are checked against.
/** Throws SingularMatrixError carrying the column that had no pivot. */
template <class F>
Matrix<F> inverse_gauss(Matrix<F> a)
{
    a.require_square("inverse");
    const std::size_t n = a.rows();
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == F(0))
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError("matrix is singular", col);
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const F p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == F(0))
                continue;
            F factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

/// tr(A^1), ..., tr(A^count), together with the powers A^0..A^(count-1)
/// that are needed by both trace-based inverses.
template <class F>
struct PowerTraces {
    std::vector<Matrix<F>> powers; // A^0 .. A^(count-1)
    std::vector<F> traces;         // traces[k-1] = tr(A^k), k = 1..count
};

template <class F>
PowerTraces<F> power_traces(const Matrix<F> &a, std::size_t count)
{
    a.require_square("power traces");
    PowerTraces<F> pt;
    Matrix<F> p = Matrix<F>::identity(a.rows());
    for (std::size_t k = 1; k <= count; ++k) {
        pt.powers.push_back(p);
        p = p * a;
        pt.traces.push_back(p.trace());
    }
    return pt;
}

/// Which inversion route to take.
enum class InverseAlgorithm { Gauss, CayleyHamilton, Bell };

} // namespace bernmat

#endif
