#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tamed {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Decimal points are rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Exact element of Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return Rational(re * re + im * im); }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Gaussian operator-() const { return {-re, -im}; }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

std::string to_string(const Gaussian& g);
std::ostream& operator<<(std::ostream& os, const Gaussian& g);

/// Uniform access to the two scalar fields used throughout the library.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static bool is_zero(const Rational& r) { return sgn(r) == 0; }
  static Rational conj(const Rational& r) { return r; }
  static Rational from_rational(const Rational& r) { return r; }
  static std::complex<double> to_complex(const Rational& r) { return {r.get_d(), 0.0}; }
  static constexpr bool is_complex = false;
};

template <>
struct ScalarOps<Gaussian> {
  static bool is_zero(const Gaussian& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }
  static Gaussian conj(const Gaussian& g) { return g.conj(); }
  static Gaussian from_rational(const Rational& r) { return Gaussian(r); }
  static std::complex<double> to_complex(const Gaussian& g) { return g.to_complex(); }
  static constexpr bool is_complex = true;
};

template <class S>
bool is_zero(const S& s) {
  return ScalarOps<S>::is_zero(s);
}

/// Best rational approximation of x with denominator at most max_den (continued fractions).
Rational approximate_rational(double x, long max_den);

}  // namespace tamed
