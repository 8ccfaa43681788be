#include "lorentzinv/polynomial.hpp"

#include <cstdio>

namespace lorentzinv {

namespace {

std::string wrap_if_compound(const std::string& s) {
  // Leading minus is fine; any interior sign needs parentheses.
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || (s[i] == '-' && s[i - 1] == ' ')) return "(" + s + ")";
  }
  return s;
}

}  // namespace

std::string coefficient_string(const Rational& c) { return c.to_string(); }

std::string coefficient_string(const BoostScalar& c) { return wrap_if_compound(c.to_string()); }

std::string coefficient_string(double c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

std::string coefficient_string(const Gaussian<BoostScalar>& c) {
  if (c.im.is_zero()) return coefficient_string(c.re);
  return "(" + c.re.to_string() + " + (" + c.im.to_string() + ")*i)";
}

std::string coefficient_string(const Gaussian<Rational>& c) {
  if (c.im.is_zero()) return c.re.to_string();
  return "(" + c.re.to_string() + " + (" + c.im.to_string() + ")*i)";
}

std::vector<std::string> variable_names(std::size_t nvars, bool minkowski) {
  std::vector<std::string> names;
  if (minkowski && nvars >= 2) {
    if (nvars == 2) return {"x", "y"};
    for (std::size_t i = 0; i + 1 < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    names.emplace_back("y");
    return names;
  }
  static const char* small[] = {"x", "y", "z", "w"};
  if (nvars <= 4) {
    for (std::size_t i = 0; i < nvars; ++i) names.emplace_back(small[i]);
    return names;
  }
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

RationalPoly to_rational(const Poly& p) {
  return p.map_coefficients<Rational>([](const BoostScalar& c) { return c.as_rational(); });
}

Poly from_rational(const RationalPoly& p) {
  return p.map_coefficients<BoostScalar>([](const Rational& c) { return BoostScalar(c); });
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  // Enumerate compositions recursively, then sort into grevlex order.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == nvars) {
      e[i] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, remaining - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

}  // namespace lorentzinv
