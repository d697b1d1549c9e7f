#pragma once

#include "lgkit/rational.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace lgkit {

// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            assert(row.size() == cols_);
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix c(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    template <typename U>
    Matrix<U> cast() const {
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RationalVector = std::vector<Rational>;

RationalVector multiply(const RationalMatrix& a, const RationalVector& x);

// Solution set {particular + span(kernel)} of A x = b.
struct AffineSolution {
    RationalVector particular;
    std::vector<RationalVector> kernel;

    bool unique() const { return kernel.empty(); }
};

// Exact Gauss-Jordan solve. std::nullopt when the system is inconsistent.
// The particular solution is checked by multiplication before returning.
std::optional<AffineSolution> solve_exact(const RationalMatrix& a, const RationalVector& b);

struct RankKernel {
    std::size_t rank = 0;
    std::vector<RationalVector> kernel;
};

RankKernel rank_and_kernel(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a);

Rational determinant(const RationalMatrix& a);
// Fraction-free (Bareiss) determinant.
Integer determinant(const IntegerMatrix& a);

// Throws Error(InvalidArgument) for singular or non-square input.
RationalMatrix inverse(const RationalMatrix& a);

// U * A * V = D with U, V unimodular and D = diag(d_1 | d_2 | ... | d_n),
// every d_i >= 1.
struct SmithDecomposition {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;

    std::vector<Integer> diagonal() const;
};

// Requires a square matrix that is nonsingular over the rationals. Pivots on
// the smallest nonzero absolute value (ties broken row-major); signs are
// normalized through the columns of V.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

} // namespace lgkit
