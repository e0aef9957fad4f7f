#pragma once

#include <stdexcept>
#include <string>

#include "plab/rational.hpp"

namespace plab {

// Gaussian rational: the exact scalar field Q(i) used for matrix entries,
// quadric coordinates and normal-form coefficients.
struct ExactScalar {
  Rat re, im;

  ExactScalar() : re(0), im(0) {}
  ExactScalar(Rat r) : re(std::move(r)), im(0) {}
  ExactScalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  ExactScalar(long r, long i = 0) : re(r), im(i) {}

  static ExactScalar I() { return ExactScalar(Rat(0), Rat(1)); }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.re, -a.im}; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactScalar operator*(const Rat& a, const ExactScalar& b) {
    return {a * b.re, a * b.im};
  }

  ExactScalar conj() const { return {re, -im}; }
  // |x|^2 = x * conj(x); always a rational.
  Rat norm2() const { return re * re + im * im; }

  bool zero() const { return is_zero(re) && is_zero(im); }

  ExactScalar inv() const {
    Rat n = norm2();
    if (is_zero(n)) throw std::domain_error("ExactScalar: division by zero");
    return {re / n, -im / n};
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inv();
  }

  ExactScalar& operator+=(const ExactScalar& o) { re += o.re; im += o.im; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { re -= o.re; im -= o.im; return *this; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  // "p/q+r/si" rendering used in reports; pure-real prints as "p/q".
  std::string str() const {
    if (is_zero(im)) return rat_str(re);
    std::string s = rat_str(re);
    if (sgn(im) >= 0) s += "+";
    return s + rat_str(im) + "i";
  }
};

inline ExactScalar two_i() { return ExactScalar(Rat(0), Rat(2)); }

}  // namespace plab
