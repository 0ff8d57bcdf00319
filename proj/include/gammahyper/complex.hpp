#pragma once

#include "gammahyper/real.hpp"

#include <algorithm>
#include <string>

namespace gammahyper {

/// Complex number over two MPFR reals. All branch cuts are principal.
struct Complex {
  Real re;
  Real im;

  explicit Complex(Bits prec = kBoundBits) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(r.precision()) {}
  Complex(double r, double i, Bits prec) : re(r, prec), im(i, prec) {}
  Complex(const Complex& z, Bits prec) : re(z.re, prec), im(z.im, prec) {}

  /// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" with decimal components.
  static Complex parse(const std::string& text, Bits prec);

  Bits precision() const { return std::max(re.precision(), im.precision()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
  Complex operator-() const { return Complex(-re, -im); }

  std::string to_string(int digits) const;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator/(const Real& a, const Complex& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);

Real abs(const Complex& z);
Real norm(const Complex& z);  ///< |z|^2
Real arg(const Complex& z);   ///< principal, in (-pi, pi]
Complex conj(const Complex& z);
Complex times_i(const Complex& z);
Complex exp(const Complex& z);
Complex expi(const Real& theta);  ///< e^{i theta}
Complex polar(const Real& r, const Real& theta);
Complex log(const Complex& z);  ///< principal
/// log z on the sheet whose argument lies nearest theta.
Complex log_with_arg(const Complex& z, const Real& theta);
Complex sqrt(const Complex& z);  ///< principal
Complex pow(const Complex& z, const Complex& w);  ///< exp(w Log z)
Complex pow(const Complex& z, long k);
Complex sin(const Complex& z);
Complex cos(const Complex& z);

}  // namespace gammahyper
