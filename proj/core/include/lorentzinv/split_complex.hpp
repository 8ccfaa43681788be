#pragma once

#include <cmath>

namespace lorentzinv {

/// re + h*im with h^2 = 1; models the Minkowski plane (x, y) -> x + h y.
struct SplitComplex {
  double re = 0.0;
  double h = 0.0;

  static SplitComplex exp_h(double beta) { return {std::cosh(beta), std::sinh(beta)}; }

  SplitComplex conj() const { return {re, -h}; }
  /// (a + hb)(a - hb) = a^2 - b^2.
  double modulus_sq() const { return re * re - h * h; }

  friend SplitComplex operator+(SplitComplex a, SplitComplex b) { return {a.re + b.re, a.h + b.h}; }
  friend SplitComplex operator-(SplitComplex a, SplitComplex b) { return {a.re - b.re, a.h - b.h}; }
  friend SplitComplex operator*(SplitComplex a, SplitComplex b) {
    return {a.re * b.re + a.h * b.h, a.re * b.h + a.h * b.re};
  }
};

}  // namespace lorentzinv
