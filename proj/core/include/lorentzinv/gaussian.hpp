#pragma once

#include <string>

namespace lorentzinv {

/// a + i*b over a commutative coefficient ring. Used for complex-pair
/// coordinates on rotation planes; never exposed as a public scalar.
template <class C>
struct Gaussian {
  C re{};
  C im{};

  Gaussian() = default;
  Gaussian(int v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(const C& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(const C& r, const C& i) : re(r), im(i) {}

  static Gaussian i_unit() { return Gaussian(C(0), C(1)); }

  Gaussian conj() const { return Gaussian(re, -im); }

  Gaussian operator-() const { return Gaussian(-re, -im); }
  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

template <class C>
bool is_zero(const Gaussian<C>& g) {
  return is_zero(g.re) && is_zero(g.im);
}

/// i^k for an integer k.
template <class C>
Gaussian<C> i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Gaussian<C>(C(1), C(0));
    case 1: return Gaussian<C>(C(0), C(1));
    case 2: return Gaussian<C>(C(-1), C(0));
    default: return Gaussian<C>(C(0), C(-1));
  }
}

}  // namespace lorentzinv
