#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lorentzinv/matrix.hpp"
#include "lorentzinv/rational.hpp"

namespace lorentzinv {

struct RowEchelon {
  Matrix<Rational> reduced;          // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row

  std::size_t rank() const { return pivots.size(); }
};

/// Exact Gauss-Jordan elimination over the rationals.
RowEchelon row_reduce(Matrix<Rational> m);

std::size_t rank(const Matrix<Rational>& m);

/// One solution of a x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Rational>> solve(const Matrix<Rational>& a, const std::vector<Rational>& b);

}  // namespace lorentzinv
