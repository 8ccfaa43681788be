#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorentzinv/boost_scalar.hpp"
#include "lorentzinv/error.hpp"
#include "lorentzinv/gaussian.hpp"
#include "lorentzinv/matrix.hpp"
#include "lorentzinv/rational.hpp"

namespace lorentzinv {

inline bool is_zero(double x) { return x == 0.0; }

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded reverse lexicographic order with x_0 > x_1 > ... ; the comparator
/// answers "a comes before b", i.e. a is grevlex-greater.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

std::string coefficient_string(const Rational& c);
std::string coefficient_string(const BoostScalar& c);
std::string coefficient_string(double c);
std::string coefficient_string(const Gaussian<BoostScalar>& c);
std::string coefficient_string(const Gaussian<Rational>& c);

/// Display names: x,y,z,w for up to four variables; x1..xn,y with a
/// Minkowski signature; x1..xn otherwise.
std::vector<std::string> variable_names(std::size_t nvars, bool minkowski = false);

/// Sparse multivariate polynomial. Terms are kept in grevlex-descending order
/// and never store a zero coefficient.
template <class C>
class Polynomial {
 public:
  using Terms = std::map<Exponents, C, GrevlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const C& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error(ErrorCode::ShapeError, "variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    Polynomial p(nvars);
    p.add_term(std::move(e), C(1));
    return p;
  }

  static Polynomial monomial(Exponents e, const C& c) {
    Polynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }
  int min_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = (d < 0) ? total_degree(e) : std::min(d, total_degree(e));
    return d;
  }
  bool is_constant() const { return degree() <= 0; }
  bool is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  const std::pair<const Exponents, C>& leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::ShapeError, "leading term of zero polynomial");
    return *terms_.begin();
  }

  void add_term(Exponents e, const C& c) {
    if (e.size() != nvars_) throw Error(ErrorCode::ShapeError, "exponent vector length mismatch");
    for (int x : e) {
      if (x < 0) throw Error(ErrorCode::ShapeError, "negative exponent");
    }
    if (lorentzinv::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (lorentzinv::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial homogeneous_component(int d) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  Polynomial operator-() const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    check_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    check_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator*(const C& s, const Polynomial& p) {
    Polynomial out(p.nvars_);
    if (lorentzinv::is_zero(s)) return out;
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(nvars_, C(1));
    Polynomial base = *this;
    while (k != 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Partial derivative with respect to variable `var`.
  Polynomial derivative(std::size_t var) const {
    if (var >= nvars_) throw Error(ErrorCode::ShapeError, "derivative variable out of range");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      out.add_term(std::move(d), C(e[var]) * c);
    }
    return out;
  }

  /// p(x + shift * e_var), expanded binomially.
  Polynomial translate(std::size_t var, const C& shift) const {
    if (var >= nvars_) throw Error(ErrorCode::ShapeError, "translation variable out of range");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      const int k = e[var];
      std::vector<C> powers(static_cast<std::size_t>(k) + 1, C(1));
      for (int j = 1; j <= k; ++j) powers[static_cast<std::size_t>(j)] = powers[static_cast<std::size_t>(j) - 1] * shift;
      // sum_j binom(k, j) shift^(k-j) x^j
      long binom = 1;
      for (int j = k; j >= 0; --j) {
        Exponents d = e;
        d[var] = j;
        out.add_term(std::move(d), C(binom) * powers[static_cast<std::size_t>(k - j)] * c);
        binom = binom * j / (k - j + 1);
      }
    }
    return out;
  }

  /// Re-indexes variables into a space with `new_nvars` variables;
  /// variable i moves to index_map[i].
  Polynomial embed(std::size_t new_nvars, const std::vector<std::size_t>& index_map) const {
    if (index_map.size() != nvars_) throw Error(ErrorCode::ShapeError, "embedding map length mismatch");
    Polynomial out(new_nvars);
    for (const auto& [e, c] : terms_) {
      Exponents d(new_nvars, 0);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (index_map[i] >= new_nvars) throw Error(ErrorCode::ShapeError, "embedding index out of range");
        d[index_map[i]] += e[i];
      }
      out.add_term(std::move(d), c);
    }
    return out;
  }

  template <class D, class F>
  Polynomial<D> map_coefficients(F&& f) const {
    Polynomial<D> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Evaluates at a point whose scalar type T is built from C by `convert`.
  template <class T, class F>
  T evaluate(std::span<const T> point, F&& convert) const {
    if (point.size() != nvars_) throw Error(ErrorCode::ShapeError, "evaluation point dimension mismatch");
    T sum(0);
    for (const auto& [e, c] : terms_) {
      T term = convert(c);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) term = term * point[i];
      sum = sum + term;
    }
    return sum;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (names.size() < nvars_) throw Error(ErrorCode::ShapeError, "not enough variable names");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string coeff = coefficient_string(c);
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += coeff;
      } else if (coeff == "1") {
        out += mono;
      } else {
        out += coeff + "*" + mono;
      }
    }
    return out;
  }

  std::string to_string() const { return to_string(variable_names(nvars_)); }

 private:
  void check_vars(const Polynomial& other) const {
    if (other.nvars_ != nvars_) throw Error(ErrorCode::ShapeError, "polynomial variable count mismatch");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using Poly = Polynomial<BoostScalar>;
using RationalPoly = Polynomial<Rational>;

/// Ordered list of polynomials sharing one variable count.
template <class C>
class PolynomialMap {
 public:
  PolynomialMap() = default;
  explicit PolynomialMap(std::vector<Polynomial<C>> components) : components_(std::move(components)) {
    if (components_.empty()) throw Error(ErrorCode::ShapeError, "polynomial map needs at least one component");
    for (const auto& p : components_) {
      if (p.nvars() != components_.front().nvars())
        throw Error(ErrorCode::ShapeError, "polynomial map components disagree on variable count");
    }
  }

  static PolynomialMap identity(std::size_t n) {
    std::vector<Polynomial<C>> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial<C>::variable(n, i));
    return PolynomialMap(std::move(comps));
  }

  std::size_t size() const { return components_.size(); }
  std::size_t nvars() const { return components_.empty() ? 0 : components_.front().nvars(); }
  const Polynomial<C>& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial<C>>& components() const { return components_; }

  friend bool operator==(const PolynomialMap& a, const PolynomialMap& b) { return a.components_ == b.components_; }

 private:
  std::vector<Polynomial<C>> components_;
};

using PolyMap = PolynomialMap<BoostScalar>;

/// Replaces variable i by images[i] and expands.
template <class C>
Polynomial<C> substitute(const Polynomial<C>& p, const std::vector<Polynomial<C>>& images) {
  if (images.size() != p.nvars()) throw Error(ErrorCode::ShapeError, "substitution needs one image per variable");
  const std::size_t target_vars = images.empty() ? 0 : images.front().nvars();
  for (const auto& q : images) {
    if (q.nvars() != target_vars) throw Error(ErrorCode::ShapeError, "substitution images disagree on variable count");
  }
  // cache[i][k] = images[i]^k
  std::vector<std::vector<Polynomial<C>>> cache(images.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial<C>& {
    auto& row = cache[i];
    if (row.empty()) row.push_back(Polynomial<C>::constant(target_vars, C(1)));
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * images[i]);
    return row[static_cast<std::size_t>(k)];
  };
  Polynomial<C> out(target_vars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial<C> term = Polynomial<C>::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= power(i, e[i]);
    }
    out += term;
  }
  return out;
}

/// p o A, i.e. x -> p(A x): variable i becomes sum_j A(i, j) x_j.
template <class C>
Polynomial<C> substitute_linear(const Polynomial<C>& p, const Matrix<C>& a) {
  if (!a.is_square() || a.rows() != p.nvars())
    throw Error(ErrorCode::ShapeError, "linear substitution needs a square matrix of size nvars");
  const std::size_t n = p.nvars();
  std::vector<Polynomial<C>> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial<C> f(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (lorentzinv::is_zero(a(i, j))) continue;
      Exponents e(n, 0);
      e[j] = 1;
      f.add_term(std::move(e), a(i, j));
    }
    forms.push_back(std::move(f));
  }
  return substitute(p, forms);
}

template <class C>
PolynomialMap<C> gradient(const Polynomial<C>& p) {
  std::vector<Polynomial<C>> comps;
  for (std::size_t i = 0; i < p.nvars(); ++i) comps.push_back(p.derivative(i));
  if (comps.empty()) throw Error(ErrorCode::ShapeError, "gradient of a polynomial in zero variables");
  return PolynomialMap<C>(std::move(comps));
}

/// Rational view of a Poly; throws NonRationalCoefficient on boost-dependent terms.
RationalPoly to_rational(const Poly& p);
Poly from_rational(const RationalPoly& p);

/// All exponent vectors in `nvars` variables of total degree exactly d,
/// in grevlex-descending order.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d);

}  // namespace lorentzinv
