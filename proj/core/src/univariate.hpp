#pragma once

// Dense univariate polynomials over Q, coefficients in ascending order.

#include <utility>
#include <vector>

#include "lorentzinv/error.hpp"
#include "lorentzinv/rational.hpp"

namespace lorentzinv::uni {

using Coeffs = std::vector<Rational>;

inline Coeffs trim(Coeffs a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

inline int degree(const Coeffs& a) { return static_cast<int>(trim(a).size()) - 1; }

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

inline Coeffs scale(const Coeffs& a, const Rational& s) {
  Coeffs out = a;
  for (auto& c : out) c *= s;
  return trim(std::move(out));
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(std::move(out));
}

/// a = q*b + r with deg r < deg b.
inline std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b_in) {
  const Coeffs b = trim(b_in);
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  a = trim(std::move(a));
  if (a.size() < b.size()) return {{}, a};
  Coeffs q(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  return {trim(std::move(q)), trim(std::move(a))};
}

inline Coeffs exact_div(const Coeffs& a, const Coeffs& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw Error(ErrorCode::Internal, "inexact polynomial division");
  return q;
}

/// Monic greatest common divisor.
inline Coeffs gcd(Coeffs a, Coeffs b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Coeffs r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(a, a.back().inverse());
}

/// (1 - z^k)
inline Coeffs one_minus_power(int k) {
  Coeffs out(static_cast<std::size_t>(k) + 1);
  out[0] = Rational(1);
  out[static_cast<std::size_t>(k)] += Rational(-1);
  return trim(std::move(out));
}

}  // namespace lorentzinv::uni
