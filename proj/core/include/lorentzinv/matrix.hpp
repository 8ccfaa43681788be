#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lorentzinv/error.hpp"
#include "lorentzinv/rational.hpp"

namespace lorentzinv {

/// Small dense row-major matrix over an exact coefficient ring.
template <class C>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, C(0)) {}
  Matrix(std::initializer_list<std::initializer_list<C>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::ShapeError, "ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = C(1);
    return m;
  }

  static Matrix diagonal(const std::vector<C>& diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  C& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const C& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    Matrix b(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
  }

  template <class D, class F>
  Matrix<D> map(F&& f) const {
    Matrix<D> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  C trace() const {
    C t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeError, "matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const C& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const C& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<C>& data() const { return data_; }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::ShapeError, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<C> data_;
};

/// Coefficients c_0..c_n of det(I - z*A) = sum_k c_k z^k, by the
/// Faddeev-LeVerrier recurrence. Only divides by small integers, so it works
/// over any ring containing the rationals (Rational, BoostScalar).
template <class C>
std::vector<C> reversed_characteristic(const Matrix<C>& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeError, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  // coeff[k] is the coefficient of lambda^{n-k} in det(lambda I - A).
  std::vector<C> coeff(n + 1, C(0));
  coeff[0] = C(1);
  Matrix<C> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<C> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeff[k - 1];
    m = std::move(next);
    const C tr = (a * m).trace();
    coeff[k] = C(Rational(-1, static_cast<long>(k))) * tr;
  }
  return coeff;
}

template <class C>
C determinant(const Matrix<C>& a) {
  auto coeff = reversed_characteristic(a);
  C d = coeff.back();
  return (a.rows() % 2 == 0) ? d : -d;
}

}  // namespace lorentzinv
