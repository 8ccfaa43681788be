#pragma once

// Test-side helpers and independent oracles. Nothing here calls the
// invariant-theory code under test; numeric checks use plain doubles.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lorentzinv/boost_scalar.hpp"
#include "lorentzinv/polynomial.hpp"
#include "lorentzinv/rational.hpp"

namespace lorentzinv::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long bound = 9) {
  long den = 0;
  while (den == 0) den = uniform_int(rng, 1, bound);
  return Rational(uniform_int(rng, -bound, bound), den);
}

inline BoostScalar random_scalar(Rng& rng, int max_power = 2, int terms = 2) {
  BoostScalar b;
  for (int t = 0; t < terms; ++t) b += BoostScalar::monomial(random_rational(rng), static_cast<int>(uniform_int(rng, -max_power, max_power)));
  return b;
}

inline Exponents random_exponents(Rng& rng, std::size_t nvars, int max_degree) {
  Exponents e(nvars, 0);
  int budget = static_cast<int>(uniform_int(rng, 0, max_degree));
  for (std::size_t i = 0; i < nvars && budget > 0; ++i) {
    const int take = static_cast<int>(uniform_int(rng, 0, budget));
    e[i] = take;
    budget -= take;
  }
  std::shuffle(e.begin(), e.end(), rng);
  return e;
}

inline RationalPoly random_rational_poly(Rng& rng, std::size_t nvars, int max_degree, int terms) {
  RationalPoly p(nvars);
  for (int t = 0; t < terms; ++t) p.add_term(random_exponents(rng, nvars, max_degree), random_rational(rng));
  return p;
}

inline Poly random_poly(Rng& rng, std::size_t nvars, int max_degree, int terms, bool boost_coefficients = false) {
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    p.add_term(random_exponents(rng, nvars, max_degree),
               boost_coefficients ? random_scalar(rng) : BoostScalar(random_rational(rng)));
  }
  return p;
}

/// Coefficient value at s = e^{beta/2}, computed directly from the terms.
inline double scalar_value(const BoostScalar& c, double beta) {
  double sum = 0.0;
  for (const auto& [k, q] : c.terms()) sum += q.to_double() * std::exp(0.5 * beta * k);
  return sum;
}

inline double poly_value(const Poly& p, const std::vector<double>& x, double beta = 0.0) {
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double term = scalar_value(c, beta);
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(x[i], e[i]);
    sum += term;
  }
  return sum;
}

inline double poly_value(const RationalPoly& p, const std::vector<double>& x) {
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double term = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(x[i], e[i]);
    sum += term;
  }
  return sum;
}

inline Rational poly_value_exact(const RationalPoly& p, const std::vector<Rational>& x) {
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= x[i].pow(e[i]);
    sum += term;
  }
  return sum;
}

/// Counts exponent vectors e with sum(e) = d and sum(w_i e_i) = 0 mod k for
/// every character (w, k): the invariant monomials of a diagonal abelian
/// action z_i -> zeta_k^{w_i} z_i.
struct Character {
  std::vector<long> weights;
  long order = 1;
};

inline long count_invariant_monomials(std::size_t nvars, int d, const std::vector<Character>& characters) {
  long count = 0;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      for (const auto& ch : characters) {
        long s = 0;
        for (std::size_t j = 0; j < nvars; ++j) s += ch.weights[j] * e[j];
        if (((s % ch.order) + ch.order) % ch.order != 0) return;
      }
      ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) return d == 0 ? 1 : 0;
  rec(rec, 0, d);
  return count;
}

/// Dimension of the fixed space of a finite matrix group acting on degree-d
/// forms in two variables: the numeric rank of the averaged action matrix.
inline long numeric_invariant_dimension(const std::vector<std::array<double, 4>>& elements, int d) {
  const std::size_t m = static_cast<std::size_t>(d) + 1;
  // basis x^(d-j) y^j; g acts by p(x, y) -> p(a x + b y, c x + e y)
  std::vector<std::vector<double>> avg(m, std::vector<double>(m, 0.0));
  for (const auto& g : elements) {
    for (std::size_t j = 0; j < m; ++j) {
      // expand (a x + b y)^(d-j) (c x + e y)^j
      std::vector<double> poly{1.0};
      auto mul = [&](double u, double v) {
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t t = 0; t < poly.size(); ++t) {
          next[t] += poly[t] * u;
          next[t + 1] += poly[t] * v;
        }
        poly = std::move(next);
      };
      for (std::size_t t = 0; t < m - 1 - j; ++t) mul(g[0], g[1]);
      for (std::size_t t = 0; t < j; ++t) mul(g[2], g[3]);
      for (std::size_t t = 0; t < m; ++t) avg[t][j] += poly[t] / static_cast<double>(elements.size());
    }
  }
  long rank = 0;
  std::vector<bool> used(m, false);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t best = m;
    double best_val = 1e-9;
    for (std::size_t r = 0; r < m; ++r) {
      if (!used[r] && std::abs(avg[r][col]) > best_val) {
        best = r;
        best_val = std::abs(avg[r][col]);
      }
    }
    if (best == m) continue;
    used[best] = true;
    ++rank;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == best) continue;
      const double f = avg[r][col] / avg[best][col];
      for (std::size_t c = col; c < m; ++c) avg[r][c] -= f * avg[best][c];
    }
  }
  return rank;
}

/// True when p = lambda q for a nonzero rational lambda.
inline bool proportional(const Poly& p, const Poly& q) {
  if (p.nvars() != q.nvars() || p.size() != q.size() || p.is_zero()) return false;
  const auto& [ep, cp] = p.leading_term();
  const auto& [eq, cq] = q.leading_term();
  if (ep != eq || !cp.is_rational() || !cq.is_rational()) return false;
  const BoostScalar lambda(cp.as_rational() / cq.as_rational());
  return p == Poly(lambda * q);
}

}  // namespace lorentzinv::testing
