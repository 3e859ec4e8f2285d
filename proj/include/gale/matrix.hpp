#ifndef GALE_MATRIX_HPP
#define GALE_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gale/numeric.hpp"

namespace gale {

/// Dense row-major matrix over T (T = Rat or Int).
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            assert(r.size() == cols_);
            for (const auto& x : r) data_.push_back(x);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

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

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        assert(v.size() == cols_);
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;
using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

inline RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

}  // namespace gale

#endif
