#include "gammahyper/complex.hpp"

#include <stdexcept>

namespace gammahyper {

Complex Complex::parse(const std::string& text, Bits prec) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return Complex(Real::parse(s, prec), Real(prec));
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (im_part[0] == '+') im_part.erase(0, 1);
  Real re = re_part.empty() ? Real(prec) : Real::parse(re_part, prec);
  return Complex(std::move(re), Real::parse(im_part, prec));
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}
Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}
Complex& Complex::operator/=(const Real& o) {
  re /= o;
  im /= o;
  return *this;
}

std::string Complex::to_string(int digits) const {
  std::string r = re.to_sci(digits);
  std::string i = im.to_sci(digits);
  if (i[0] != '-') i = "+" + i;
  return r + i + "i";
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
Complex operator/(const Complex& a, const Complex& b) {
  // scale to avoid overflow in |b|^2 on wide exponent ranges
  if (abs(b.re) >= abs(b.im)) {
    if (b.re.is_zero()) throw std::domain_error("complex division by zero");
    Real r = b.im / b.re;
    Real d = b.re + r * b.im;
    return Complex((a.re + a.im * r) / d, (a.im - a.re * r) / d);
  }
  Real r = b.re / b.im;
  Real d = b.im + r * b.re;
  return Complex((a.re * r + a.im) / d, (a.im * r - a.re) / d);
}
Complex operator+(const Complex& a, const Real& b) { return Complex(a.re + b, a.im); }
Complex operator-(const Complex& a, const Real& b) { return Complex(a.re - b, a.im); }
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }
Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
Complex operator+(const Complex& a, long b) { return Complex(a.re + b, a.im); }
Complex operator-(const Complex& a, long b) { return Complex(a.re - b, a.im); }
Complex operator*(const Complex& a, long b) { return Complex(a.re * b, a.im * b); }
Complex operator/(const Complex& a, long b) { return Complex(a.re / b, a.im / b); }

Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return atan2(z.im, z.re); }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Complex times_i(const Complex& z) { return Complex(-z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  Real s(z.im.precision()), c(z.im.precision());
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  return Complex(m * c, m * s);
}

Complex expi(const Real& theta) {
  Real s(theta.precision()), c(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return Complex(std::move(c), std::move(s));
}

Complex polar(const Real& r, const Real& theta) { return expi(theta) * r; }

Complex log(const Complex& z) {
  if (z.is_zero()) throw std::domain_error("log of zero");
  return Complex(log(abs(z)), arg(z));
}

Complex log_with_arg(const Complex& z, const Real& theta) {
  if (z.is_zero()) throw std::domain_error("log of zero");
  // theta only picks the sheet; the argument itself comes from z at full precision
  const Bits wp = z.precision();
  Real a = z.im.is_zero() && z.re.sign() < 0 ? const_pi(wp) : arg(z);
  Real two_pi = const_pi(wp) * 2;
  Real k = round((Real(theta, wp) - a) / two_pi);
  return Complex(log(abs(z)), a + k * two_pi);
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex(z.precision());
  Real m = abs(z);
  Real t = sqrt((m + abs(z.re)) / 2);
  if (z.re.sign() >= 0) return Complex(t, z.im / (t * 2));
  Real im = t;
  if (z.im.sign() < 0) im = -im;
  return Complex(abs(z.im) / (t * 2), im);
}

Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

Complex pow(const Complex& z, long k) {
  Complex result(Real(1L, z.precision()), Real(z.precision()));
  Complex base = k < 0 ? Complex(Real(1L, z.precision())) / z : z;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Complex sin(const Complex& z) {
  return Complex(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}
Complex cos(const Complex& z) {
  return Complex(cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im)));
}

}  // namespace gammahyper
