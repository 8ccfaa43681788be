#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>

#include "lorentzinv/rational.hpp"

namespace lorentzinv {

/// Laurent polynomial with rational coefficients in the half-boost unit
/// s = e^{beta/2}. Boost entries are exact: cosh(beta) = (s^2 + s^-2)/2 and
/// cosh(beta/2) = (s + s^-1)/2 live in the same ring.
class BoostScalar {
 public:
  using Terms = std::map<int, Rational>;

  BoostScalar() = default;
  BoostScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  BoostScalar(long c) : BoostScalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  BoostScalar(int c) : BoostScalar(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static BoostScalar monomial(const Rational& c, int power);
  /// The unit s itself.
  static BoostScalar unit() { return monomial(Rational(1), 1); }

  /// cosh(m * beta / 2) and sinh(m * beta / 2); m = 2 gives cosh/sinh of beta.
  static BoostScalar cosh_half_multiple(int m);
  static BoostScalar sinh_half_multiple(int m);
  static BoostScalar cosh_beta() { return cosh_half_multiple(2); }
  static BoostScalar sinh_beta() { return sinh_half_multiple(2); }

  const Terms& terms() const { return terms_; }
  Rational coefficient(int power) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// Throws NonRationalCoefficient unless is_rational().
  Rational as_rational() const;
  bool is_unit() const { return terms_.size() == 1; }
  int min_power() const;
  int max_power() const;

  /// Throws NotAUnit for zero or multi-term values.
  BoostScalar inverse() const;
  BoostScalar pow(int exponent) const;

  /// Square root of a unit c*s^k with k even and c a positive rational square.
  bool exact_sqrt(BoostScalar& root) const;

  /// Substitutes s = e^{beta/2}; throws EvaluationOverflow on non-finite result.
  double eval_numeric(double beta) const;

  /// Sign of the value for all real beta, read from the extreme powers.
  /// Returns 0 for zero and throws Internal when the sign is not constant
  /// according to the extreme-power rule or the spot checks disagree.
  int dominant_sign() const;

  std::string to_string() const;

  BoostScalar operator-() const;
  BoostScalar& operator+=(const BoostScalar& rhs);
  BoostScalar& operator-=(const BoostScalar& rhs);
  BoostScalar& operator*=(const BoostScalar& rhs);

  friend BoostScalar operator+(BoostScalar a, const BoostScalar& b) { return a += b; }
  friend BoostScalar operator-(BoostScalar a, const BoostScalar& b) { return a -= b; }
  friend BoostScalar operator*(const BoostScalar& a, const BoostScalar& b);

  friend bool operator==(const BoostScalar& a, const BoostScalar& b) { return a.terms_ == b.terms_; }
  /// Total order for canonical sorting only; not numeric comparison.
  friend std::strong_ordering operator<=>(const BoostScalar& a, const BoostScalar& b);

 private:
  void add_term(int power, const Rational& c);
  Terms terms_;
};

inline bool is_zero(const BoostScalar& b) { return b.is_zero(); }

std::ostream& operator<<(std::ostream& os, const BoostScalar& b);

}  // namespace lorentzinv
