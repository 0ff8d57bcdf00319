#pragma once

#include <concepts>
#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gammahyper {

using Bits = mpfr_prec_t;

/// Precision used for error-bound bookkeeping. Bounds are magnitudes, not
/// values, so 64 bits of mantissa is plenty; the MPFR exponent range keeps
/// bounds like 1e-400 representable where a double would underflow.
inline constexpr Bits kBoundBits = 64;

/// RAII owner of an mpfr_t with an explicit, per-value precision.
///
/// Binary operations produce a result at the larger of the two operand
/// precisions, rounded to nearest. There is no ambient default precision:
/// every value is created with the precision it needs.
class Real {
 public:
  explicit Real(Bits prec = kBoundBits);
  Real(double v, Bits prec);
  Real(long v, Bits prec);
  Real(int v, Bits prec) : Real(static_cast<long>(v), prec) {}
  Real(unsigned long v, Bits prec);
  Real(const mpz_class& v, Bits prec);
  Real(const mpq_class& v, Bits prec);
  Real(const Real& v, Bits prec);  // re-rounded copy

  /// Parses a decimal string such as "-1.25e-3". Throws std::invalid_argument.
  static Real parse(std::string_view text, Bits prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// floor(log2 |x|) + 1 for nonzero x; a very negative sentinel for zero.
  long exponent() const;
  /// Approximate log2 |x| as a double (finite even when |x| underflows a double).
  double log2_abs() const;

  /// Scientific rendering with `digits` significant digits, e.g. "-7.18e+76".
  std::string to_sci(int digits) const;
  /// Normalized rendering 0.d1d2...dn x 10^e; returns mantissa digits with sign
  /// and the exponent separately, rounding to nearest.
  std::pair<std::string, long> to_normalized(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  Real& operator/=(long k);
  template <std::floating_point D> Real& operator*=(D) = delete;
  template <std::floating_point D> Real& operator/=(D) = delete;

  Real operator-() const;

 private:
  void ensure_init(Bits prec);
  mpfr_t v_;
  bool live_ = false;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator/(long a, const Real& b);
// no silent double -> long narrowing
template <std::floating_point D> Real operator+(const Real&, D) = delete;
template <std::floating_point D> Real operator-(const Real&, D) = delete;
template <std::floating_point D> Real operator*(const Real&, D) = delete;
template <std::floating_point D> Real operator*(D, const Real&) = delete;
template <std::floating_point D> Real operator/(const Real&, D) = delete;
template <std::floating_point D> Real operator/(D, const Real&) = delete;

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, double b);
bool operator>(const Real& a, double b);
bool operator<=(const Real& a, double b);
bool operator>=(const Real& a, double b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real gamma(const Real& x);
Real lgamma_abs(const Real& x);  ///< log |Γ(x)|
Real floor(const Real& x);
Real ceil(const Real& x);
Real round(const Real& x);  ///< nearest integer, halves away from zero
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// 2^e at the given precision.
Real exp2i(long e, Bits prec);

Real const_pi(Bits prec);
Real const_euler(Bits prec);

/// Rounds a non-negative bound upward to bound precision and inflates it by a
/// couple of ulps, so later arithmetic on it stays conservative.
Real bound_up(const Real& b);

/// Exact conversion of an integral Real to mpz (truncates any fraction).
mpz_class to_mpz(const Real& x);

}  // namespace gammahyper
