#include "lorentzinv/boost_scalar.hpp"

#include <array>
#include <cmath>
#include <ostream>

#include "lorentzinv/error.hpp"

namespace lorentzinv {

BoostScalar::BoostScalar(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

BoostScalar BoostScalar::monomial(const Rational& c, int power) {
  BoostScalar out;
  out.add_term(power, c);
  return out;
}

BoostScalar BoostScalar::cosh_half_multiple(int m) {
  const Rational half(1, 2);
  return monomial(half, m) + monomial(half, -m);
}

BoostScalar BoostScalar::sinh_half_multiple(int m) {
  const Rational half(1, 2);
  return monomial(half, m) - monomial(half, -m);
}

Rational BoostScalar::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational() : it->second;
}

Rational BoostScalar::as_rational() const {
  if (!is_rational()) {
    throw Error(ErrorCode::NonRationalCoefficient, "boost-dependent value " + to_string() + " is not rational");
  }
  return coefficient(0);
}

int BoostScalar::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int BoostScalar::max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

BoostScalar BoostScalar::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::NotAUnit, "cannot invert non-unit " + to_string());
  const auto& [power, c] = *terms_.begin();
  return monomial(c.inverse(), -power);
}

BoostScalar BoostScalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  BoostScalar result(1);
  BoostScalar base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

bool BoostScalar::exact_sqrt(BoostScalar& root) const {
  if (!is_unit()) return false;
  const auto& [power, c] = *terms_.begin();
  if (power % 2 != 0) return false;
  Rational r;
  if (!c.exact_sqrt(r)) return false;
  root = monomial(r, power / 2);
  return true;
}

double BoostScalar::eval_numeric(double beta) const {
  double sum = 0.0;
  for (const auto& [power, c] : terms_) {
    sum += c.to_double() * std::exp(0.5 * beta * power);
  }
  if (!std::isfinite(sum)) {
    throw Error(ErrorCode::EvaluationOverflow, "evaluation of " + to_string() + " overflowed");
  }
  return sum;
}

int BoostScalar::dominant_sign() const {
  if (terms_.empty()) return 0;
  const int high = terms_.rbegin()->second.sign();
  const int low = terms_.begin()->second.sign();
  if (high != low) {
    throw Error(ErrorCode::Internal, "sign of " + to_string() + " is not constant in beta");
  }
  for (double beta : std::array{-1.0, 0.5, 2.0}) {
    const double v = eval_numeric(beta);
    if ((v > 0 ? 1 : (v < 0 ? -1 : 0)) != high) {
      throw Error(ErrorCode::Internal, "sign check of " + to_string() + " failed at a sample beta");
    }
  }
  return high;
}

std::string BoostScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [power, c] = *it;
    std::string coeff = c.to_string();
    if (!first) {
      if (c.sign() < 0) {
        out += " - ";
        coeff = (-c).to_string();
      } else {
        out += " + ";
      }
    }
    first = false;
    if (power == 0) {
      out += coeff;
    } else {
      if (coeff == "-1") out += "-";
      else if (coeff != "1") out += coeff + "*";
      out += "s";
      if (power != 1) out += "^" + std::to_string(power);
    }
  }
  return out;
}

BoostScalar BoostScalar::operator-() const {
  BoostScalar out;
  for (const auto& [power, c] : terms_) out.terms_.emplace(power, -c);
  return out;
}

void BoostScalar::add_term(int power, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BoostScalar& BoostScalar::operator+=(const BoostScalar& rhs) {
  for (const auto& [power, c] : rhs.terms_) add_term(power, c);
  return *this;
}

BoostScalar& BoostScalar::operator-=(const BoostScalar& rhs) {
  for (const auto& [power, c] : rhs.terms_) add_term(power, -c);
  return *this;
}

BoostScalar operator*(const BoostScalar& a, const BoostScalar& b) {
  BoostScalar out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) out.add_term(pa + pb, ca * cb);
  }
  return out;
}

BoostScalar& BoostScalar::operator*=(const BoostScalar& rhs) { return *this = *this * rhs; }

std::strong_ordering operator<=>(const BoostScalar& a, const BoostScalar& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::ostream& operator<<(std::ostream& os, const BoostScalar& b) { return os << b.to_string(); }

}  // namespace lorentzinv
