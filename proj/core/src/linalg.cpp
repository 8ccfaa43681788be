#include "lorentzinv/linalg.hpp"

#include <utility>

namespace lorentzinv {

RowEchelon row_reduce(Matrix<Rational> m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    }
    const Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix<Rational>& m) { return row_reduce(m).rank(); }

std::optional<std::vector<Rational>> solve(const Matrix<Rational>& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::ShapeError, "right-hand side length mismatch");
  Matrix<Rational> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon ech = row_reduce(std::move(aug));
  std::vector<Rational> x(a.cols());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
    const std::size_t c = ech.pivots[k];
    if (c == a.cols()) return std::nullopt;  // pivot in the augmented column: inconsistent
    x[c] = ech.reduced(k, a.cols());
  }
  return x;
}

}  // namespace lorentzinv
