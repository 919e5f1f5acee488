#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hermcheck {

using Rational = mpq_class;

/// Raised for malformed or inconsistent inputs (dimension mismatch, bad
/// manifests, unvalidated structures). Reports, not exceptions, carry the
/// outcome of a mathematical check.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact element of Q(i, sqrt3), stored as (re + im i) + (re3 + im3 i) sqrt3.
///
/// Almost every model lives in the Gaussian rationals; the sqrt3 part is only
/// populated by models whose invariant coframe is orthonormal for the A2
/// Killing form (the SU(3) group model). Arithmetic takes a Gaussian fast
/// path whenever both operands have a vanishing sqrt3 part.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT: integer literals are scalars
  Scalar(Rational re, Rational im = 0, Rational re3 = 0, Rational im3 = 0);

  static Scalar i() { return Scalar(0, 1); }
  static Scalar sqrt3() { return Scalar(0, 0, 1, 0); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  const Rational& re_sqrt3() const { return re3_; }
  const Rational& im_sqrt3() const { return im3_; }

  bool is_zero() const {
    return sgn(re_) == 0 && sgn(im_) == 0 && !has_sqrt3();
  }
  bool is_real() const { return sgn(im_) == 0 && sgn(im3_) == 0; }
  bool has_sqrt3() const { return sgn(re3_) != 0 || sgn(im3_) != 0; }
  bool is_rational() const { return is_real() && !has_sqrt3(); }

  /// Sign of a real scalar (exact, including the sqrt3 part).
  int sign() const;

  Scalar conj() const { return Scalar(re_, -im_, re3_, -im3_); }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_, -re3_, -im3_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.re3_ == b.re3_ &&
           a.im3_ == b.im3_;
  }

  /// Human-readable rendering, e.g. "3/2", "1 - 2i", "1/2*sqrt3".
  std::string to_string() const;

 private:
  Rational re_{0}, im_{0}, re3_{0}, im3_{0};
};

/// i^k for any integer k.
Scalar i_power(int k);

/// Parses "p/q", "p" or "-p/q"; throws InputError on bad syntax or a zero
/// denominator.
Rational parse_rational(const std::string& text);

}  // namespace hermcheck
