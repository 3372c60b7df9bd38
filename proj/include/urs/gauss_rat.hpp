#ifndef URS_GAUSS_RAT_HPP
#define URS_GAUSS_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace urs {

/// Exact complex scalar a+bi with arbitrary-precision rational parts.
/// mpq_class keeps both parts in lowest terms with positive denominator,
/// so equality is structural and arithmetic never rounds.
struct GaussRat {
  mpq_class re;
  mpq_class im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long r) : re(r), im(0) {}
  GaussRat(const mpq_class& r) : re(r), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRat(q);
  }
  static GaussRat imaginary_unit() { return GaussRat(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return GaussRat(re, -im); }

  /// |z|^2 as an exact rational.
  mpq_class norm() const { return re * re + im * im; }

  GaussRat operator-() const { return GaussRat(-re, -im); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero GaussRat");
    mpq_class n = o.norm();
    mpq_class r = (re * o.re + im * o.im) / n;
    mpq_class i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat inverse() const {
    GaussRat one(1);
    GaussRat r(*this);
    GaussRat out = one;
    out /= r;
    return out;
  }

  GaussRat pow(unsigned long e) const {
    GaussRat acc(1);
    GaussRat base(*this);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const;
};

std::string rational_str(const mpq_class& q);

}  // namespace urs

#endif
