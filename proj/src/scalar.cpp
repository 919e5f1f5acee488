#include "hermcheck/scalar.hpp"

#include <cctype>
#include <sstream>

namespace hermcheck {

namespace {

// (a + bi)(c + di) into (out_re, out_im); inputs may alias outputs.
void gaussian_mul(const Rational& a, const Rational& b, const Rational& c,
                  const Rational& d, Rational& out_re, Rational& out_im) {
  if (sgn(b) == 0 && sgn(d) == 0) {
    out_re = a * c;
    out_im = 0;
    return;
  }
  Rational re = a * c - b * d;
  Rational im = a * d + b * c;
  out_re = std::move(re);
  out_im = std::move(im);
}

void gaussian_inverse(const Rational& a, const Rational& b, Rational& out_re,
                      Rational& out_im) {
  Rational norm = a * a + b * b;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero scalar");
  Rational re = a / norm;
  Rational im = -b / norm;
  out_re = std::move(re);
  out_im = std::move(im);
}

}  // namespace

Scalar::Scalar(Rational re, Rational im, Rational re3, Rational im3)
    : re_(std::move(re)), im_(std::move(im)), re3_(std::move(re3)),
      im3_(std::move(im3)) {
  re_.canonicalize();
  im_.canonicalize();
  re3_.canonicalize();
  im3_.canonicalize();
}

int Scalar::sign() const {
  if (!is_real()) throw std::domain_error("sign of a non-real scalar");
  int s = sgn(re_);
  int t = sgn(re3_);
  if (t == 0) return s;
  if (s == 0 || s == t) return t;
  // x + y sqrt3 with opposite signs: compare x^2 against 3 y^2.
  Rational lhs = re_ * re_;
  Rational rhs = 3 * re3_ * re3_;
  return lhs > rhs ? s : t;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar out;
  if (!has_sqrt3()) {
    gaussian_inverse(re_, im_, out.re_, out.im_);
    return out;
  }
  // 1 / (A + B sqrt3) = (A - B sqrt3) / (A^2 - 3 B^2), A, B Gaussian.
  Rational a2_re, a2_im, b2_re, b2_im;
  gaussian_mul(re_, im_, re_, im_, a2_re, a2_im);
  gaussian_mul(re3_, im3_, re3_, im3_, b2_re, b2_im);
  Rational n_re = a2_re - 3 * b2_re;
  Rational n_im = a2_im - 3 * b2_im;
  Rational inv_re, inv_im;
  gaussian_inverse(n_re, n_im, inv_re, inv_im);
  gaussian_mul(re_, im_, inv_re, inv_im, out.re_, out.im_);
  Rational neg_re = -re3_, neg_im = -im3_;
  gaussian_mul(neg_re, neg_im, inv_re, inv_im, out.re3_, out.im3_);
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  if (sgn(o.re3_) != 0) re3_ += o.re3_;
  if (sgn(o.im3_) != 0) im3_ += o.im3_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  if (sgn(o.re3_) != 0) re3_ -= o.re3_;
  if (sgn(o.im3_) != 0) im3_ -= o.im3_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!has_sqrt3() && !o.has_sqrt3()) {
    gaussian_mul(re_, im_, o.re_, o.im_, re_, im_);
    return *this;
  }
  // (A + B sqrt3)(C + D sqrt3) = (AC + 3BD) + (AD + BC) sqrt3
  Rational ac_re, ac_im, bd_re, bd_im, ad_re, ad_im, bc_re, bc_im;
  gaussian_mul(re_, im_, o.re_, o.im_, ac_re, ac_im);
  gaussian_mul(re3_, im3_, o.re3_, o.im3_, bd_re, bd_im);
  gaussian_mul(re_, im_, o.re3_, o.im3_, ad_re, ad_im);
  gaussian_mul(re3_, im3_, o.re_, o.im_, bc_re, bc_im);
  re_ = ac_re + 3 * bd_re;
  im_ = ac_im + 3 * bd_im;
  re3_ = ad_re + bc_re;
  im3_ = ad_im + bc_im;
  return *this;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& c, const char* unit) {
    if (sgn(c) == 0) return;
    Rational mag = abs(c);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    bool unit_only = *unit != '\0' && mag == 1;
    if (!unit_only) out << mag.get_str();
    if (*unit != '\0') out << (unit_only ? "" : "*") << unit;
    first = false;
  };
  emit(re_, "");
  emit(im_, "i");
  emit(re3_, "sqrt3");
  emit(im3_, "i*sqrt3");
  return out.str();
}

Scalar i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
      ++pos;
    std::size_t first_digit = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == first_digit)
      throw InputError("bad scalar syntax: \"" + text + "\"");
    return text.substr(start, pos - start);
  };
  std::string num = digits(true);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits(false);
  }
  if (pos != text.size()) throw InputError("bad scalar syntax: \"" + text + "\"");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("zero denominator in \"" + text + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace hermcheck
