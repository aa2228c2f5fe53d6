#pragma once

// Exact scalars.
//
// GaussScalar is an element of Q(i) with arbitrary precision rational parts.
// QuadScalar adjoins one real square root sqrt(m) to Q(i); it only shows up
// when normalizing principal SL(2)-triples, where the coefficients are square
// roots of the coefficients of 2*rho-check.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace dsdict {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Exact rational square root, if one exists.
bool rational_sqrt(const Rational& q, Rational& root);

class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussScalar conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussScalar inverse() const;

  GaussScalar& operator+=(const GaussScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussScalar& operator-=(const GaussScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussScalar& operator*=(const GaussScalar& o);
  GaussScalar& operator/=(const GaussScalar& o) { return *this *= o.inverse(); }

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
  GaussScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Sign of a real scalar; throws DomainError if the imaginary part is nonzero.
  int real_sign() const;

  /// Canonical text form, e.g. "1/2", "-3/4 i", "1/2+i", "2-1/3 i".
  std::string str() const;
  static GaussScalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& s);

/// A square root in Q(i), if one exists.
bool gauss_sqrt(const GaussScalar& z, GaussScalar& root);

/// a + b*sqrt(m) with a, b in Q(i) and m a positive squarefree integer.
/// m == 1 means "no surd adjoined"; then b is always zero.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long v) : a_(v) {}                     // NOLINT(google-explicit-constructor)
  QuadScalar(GaussScalar a) : a_(std::move(a)) {}   // NOLINT(google-explicit-constructor)
  QuadScalar(GaussScalar a, GaussScalar b, long m);

  /// sqrt(q) for a positive rational q, written as r*sqrt(m) with m squarefree.
  static QuadScalar sqrt_of(const Rational& q);

  const GaussScalar& a() const { return a_; }
  const GaussScalar& b() const { return b_; }
  long surd() const { return m_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_real() const { return a_.is_real() && b_.is_real(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool in_base_field() const { return b_.is_zero(); }

  /// Complex conjugation; sqrt(m) is real so it is fixed.
  QuadScalar conj() const { return {a_.conj(), b_.conj(), m_}; }
  QuadScalar inverse() const;

  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o) { return *this *= o.inverse(); }

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
  QuadScalar operator-() const { return {-a_, -b_, m_}; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y);

  /// Exact sign of a real element.
  int real_sign() const;

  /// Returns the base-field value; throws if a surd is present.
  GaussScalar to_gauss() const;

  std::string str() const;

 private:
  void unify(const QuadScalar& o);
  void normalize();

  GaussScalar a_;
  GaussScalar b_;
  long m_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& s);

// Uniform free-function interface used by the templated matrix code.
inline GaussScalar conj(const GaussScalar& s) { return s.conj(); }
inline QuadScalar conj(const QuadScalar& s) { return s.conj(); }
inline bool is_zero(const GaussScalar& s) { return s.is_zero(); }
inline bool is_zero(const QuadScalar& s) { return s.is_zero(); }

}  // namespace dsdict
