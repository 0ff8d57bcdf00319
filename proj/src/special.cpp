#include "gammahyper/special.hpp"

#include "gammahyper/exact.hpp"

#include <cmath>
#include <functional>

namespace gammahyper {

namespace {

Real rnd_err(const Real& magnitude, Bits wp, long count = 1) {
  return bound_up(magnitude * exp2i(2 - static_cast<long>(wp), kBoundBits) * (count + 1));
}

Bits cap_bits(const Precision& prec) { return 16 * prec.working() + 8192; }

/// principal argument with -pi excluded
Real principal_arg(const Complex& w) {
  if (w.im.is_zero()) return w.re.sign() < 0 ? const_pi(w.precision()) : Real(w.precision());
  return arg(w);
}

struct Partial {
  Complex value;
  Real err;
};

/// Reruns `kernel` at rising working precision until the error estimate is
/// below 2^-bits relative to the value (or absolute if the value is zero).
BigComplex adaptive(const std::function<Partial(Bits)>& kernel, const Precision& prec, Bits start) {
  Bits wp = std::max(start, prec.working());
  const Real target = prec.target();
  for (;;) {
    Partial r = kernel(wp);
    Real scale = mag(r.value);
    if (scale.is_zero()) scale = exp2i(-static_cast<long>(prec.bits) * 4, kBoundBits);
    if (r.err <= target * scale) {
      Complex out(r.value, prec.working());
      Real ro = rnd_err(abs(out), prec.working());
      return {out, bound_up(r.err + ro)};
    }
    double short_bits = r.err.log2_abs() - (target * scale).log2_abs();
    wp += static_cast<Bits>(std::ceil(short_bits)) + 32;
    if (wp > cap_bits(prec)) throw PrecisionError("incomplete gamma: precision cap reached");
  }
}

}  // namespace

BigReal zeta_int(long m, const Precision& prec) {
  if (m <= 1) throw DomainError("zeta_int requires m >= 2, got " + std::to_string(m));
  const Bits wp = prec.working() + 16;
  const double want = static_cast<double>(prec.bits) + 8;
  const Real one(1L, wp);
  const Real mr(m, wp);

  // Direct summation when few terms suffice: tail <= L^-m + L^{1-m}/(m-1).
  double logL = (want - std::log2(static_cast<double>(m - 1))) / static_cast<double>(m - 1);
  if (logL < 6) {
    long L = std::max(2L, static_cast<long>(std::ceil(std::exp2(std::max(logL, 0.0)))) + 1);
    Real s(wp);
    for (long n = L - 1; n >= 1; --n) s += pow(Real(n, wp), -m);
    Real Lr(L, wp);
    Real tail = pow(Lr, -m) + pow(Lr, 1 - m) / (m - 1);
    BigReal out{Real(s, prec.working()), bound_up(tail + rnd_err(s, wp, L + 2))};
    return out;
  }

  if (m % 2 == 0) {
    auto B = shared_bernoulli(static_cast<std::size_t>(m));
    // zeta(m) = (-1)^{m/2+1} B_m (2 pi)^m / (2 m!)
    Real v = Real((*B)[static_cast<std::size_t>(m)], wp);
    v = abs(v) * pow(const_pi(wp) * 2, m);
    Real fact(wp);
    mpfr_fac_ui(fact.get(), static_cast<unsigned long>(m), MPFR_RNDN);
    v /= fact * 2;
    return {Real(v, prec.working()), rnd_err(v, wp, 8)};
  }

  // Euler-Maclaurin at cut L with K correction terms.
  const long L = static_cast<long>(prec.bits / 4 + 10);
  Real s(wp);
  for (long n = L - 1; n >= 1; --n) s += pow(Real(n, wp), -m);
  Real Lr(L, wp);
  Real Lm = pow(Lr, -m);
  s += Lm * Lr / (m - 1);
  s += Lm / 2;
  auto B = shared_bernoulli(2 * static_cast<std::size_t>(L) + 8);
  // term_j = B_{2j}/(2j)! (m)_{2j-1} L^{-m-2j+1}
  Real poch = mr;  // (m)_{2j-1}
  Real fact2j(2L, wp);
  Real Lpow = Lm / Lr;  // L^{-m-1}
  Real remainder(kBoundBits);
  const Real tgt = exp2i(-static_cast<long>(want), wp);
  long j = 1;
  for (;; ++j) {
    if (2 * static_cast<std::size_t>(j) + 2 >= B->size()) B = shared_bernoulli(4 * j + 8);
    Real term = Real((*B)[2 * j], wp) / fact2j * poch * Lpow;
    s += term;
    // next: (m)_{2j+1}, (2j+2)!, L^{-m-2j-1}
    Real poch_next = poch * (m + 2 * j - 1) * (m + 2 * j);
    Real fact_next = fact2j * (2 * j + 1) * (2 * j + 2);
    Real Lpow_next = Lpow / (Lr * Lr);
    Real rem = abs(Real((*B)[2 * j + 2], wp) / fact_next * poch_next * Lpow_next);
    if (rem < tgt) {
      remainder = bound_up(rem);
      break;
    }
    poch = std::move(poch_next);
    fact2j = std::move(fact_next);
    Lpow = std::move(Lpow_next);
    if (j > 100000) throw PrecisionError("zeta_int: Euler-Maclaurin did not converge");
  }
  return {Real(s, prec.working()), bound_up(remainder + rnd_err(s, wp, L + 3 * j + 4))};
}

namespace {

Partial erf_taylor(const Complex& w0, Bits wp) {
  Complex w(w0, wp);
  Complex mw2 = -(w * w);
  Complex t = w;  // (-1)^n w^{2n+1}/n!
  Complex s = w;
  Real absz2 = norm(w);
  Real max_term = abs(w);
  const Real eps = exp2i(-static_cast<long>(wp), wp);
  long n = 1;
  for (;; ++n) {
    t = t * mw2 / n;
    Complex tn = t / (2 * n + 1);
    s += tn;
    Real at = abs(tn);
    if (at > max_term) max_term = at;
    if (Real(n + 1, wp) > absz2 * 2 && at <= eps * max(abs(s), Real(1L, wp))) {
      Real tail = at * 2;
      Real scale = const_pi(wp);
      scale = 2 / sqrt(scale);
      Complex val = s * scale;
      Real err = bound_up((tail + rnd_err(max_term, wp, 4 * n)) * scale);
      return {val, err};
    }
  }
}

/// erfc(z) for Re z > 0 and |z| large, from the Laplace continued fraction.
Complex erfc_cf(const Complex& z, long depth, Bits wp) {
  Complex zz(z, wp);
  Complex f = zz;
  for (long k = depth; k >= 1; --k) f = zz + Real(k, wp) / 2 / f;
  Complex e = exp(-(zz * zz));
  return e / f / sqrt(const_pi(wp));
}

}  // namespace

BigComplex erf_cx(const Complex& w, const Precision& prec) {
  if (w.is_zero()) return {Complex(prec.working()), Real(kBoundBits)};
  Real aw = abs(w);
  const Bits base = prec.working() + 16;
  if (aw > 40.0) {
    Real a = arg(w);
    double ad = a.to_double();
    const double q = M_PI / 4;
    bool right = std::fabs(ad) <= q;
    bool left = std::fabs(ad) >= M_PI - q;
    if (right || left) {
      Complex z = right ? w : -w;
      const Real target = prec.target();
      long depth = 32;
      Complex prev = erfc_cf(z, depth, base);
      for (;;) {
        depth *= 2;
        Complex cur = erfc_cf(z, depth, base);
        Real diff = abs(cur - prev);
        if (diff <= target * exp2i(-8, kBoundBits) || depth > (1L << 20)) {
          Complex one(Real(1L, base), Real(base));
          Complex v = one - cur;
          if (left) v = -v;
          return {Complex(v, prec.working()), bound_up(diff + rnd_err(abs(v), base, 8))};
        }
        prev = std::move(cur);
      }
    }
  }
  double boost = 1.4427 * aw.to_double() * aw.to_double();
  Bits start = base + static_cast<Bits>(boost) + 16;
  return adaptive([&](Bits wp) { return erf_taylor(w, wp); }, prec, start);
}

namespace {

/// (n-1)! e^{-w} sum_{k<n} w^k/k!
Partial gamma_posint(long n, const Complex& w0, Bits wp) {
  Complex w(w0, wp);
  Complex t(Real(1L, wp), Real(wp));
  Complex s = t;
  Real sabs(1L, wp);
  for (long k = 1; k < n; ++k) {
    t = t * w / k;
    s += t;
    sabs += abs(t);
  }
  Real fact(wp);
  mpfr_fac_ui(fact.get(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
  Complex e = exp(-w);
  Complex v = s * e * fact;
  Real err = rnd_err(sabs * abs(e) * fact, wp, 2 * n + 8);
  return {v, err};
}

/// E_1(w) = -gamma - log w - sum_{k>=1} (-w)^k/(k k!)
Partial e1_series(const Complex& w0, const Real& theta, Bits wp) {
  Complex w(w0, wp);
  Complex mw = -w;
  Complex t = mw;  // (-w)^k/k!
  Complex s = t;
  Real sabs = abs(t);
  Real aw = abs(w);
  const Real eps = exp2i(-static_cast<long>(wp), wp);
  long k = 2;
  Real tail(wp);
  for (;; ++k) {
    t = t * mw / k;
    Complex tk = t / k;
    s += tk;
    Real at = abs(tk);
    sabs += at;
    if (Real(k + 1, wp) > aw * 2 && at <= eps * sabs) {
      tail = at * 2;
      break;
    }
  }
  Complex lw = log_with_arg(w, Real(theta, wp));
  Complex v = -(s + lw);
  v.re -= const_euler(wp);
  Real err = bound_up(tail + rnd_err(sabs + abs(lw) + 1, wp, 2 * k + 8));
  return {v, err};
}

/// Gamma(-n, w) by upward recurrence from E_1 with propagated error.
Partial gamma_negint(long n, const Complex& w0, const Real& theta, Bits wp) {
  Partial g = e1_series(w0, theta, wp);
  if (n == 0) return g;
  Complex w(w0, wp);
  Complex ew = exp(-w);
  Complex winv = Complex(Real(1L, wp)) / w;
  Complex wpow = ew;  // w^{-k} e^{-w}
  for (long k = 1; k <= n; ++k) {
    wpow *= winv;
    g.value = (wpow - g.value) / k;
    g.err = bound_up((g.err + rnd_err(abs(wpow) + abs(g.value) * k, wp, 6 + k)) / k);
  }
  return g;
}

/// Gamma(a) - w^a sum_k (-w)^k/(k!(a+k)) for non-integer a.
Partial gamma_series(const Real& a0, const Complex& w0, const Real& theta, Bits wp) {
  Real a(a0, wp);
  Complex w(w0, wp);
  Complex mw = -w;
  Complex t(Real(1L, wp), Real(wp));
  Complex s = Complex(Real(1L, wp) / a, Real(wp));
  Real sabs = abs(s.re);
  Real aw = abs(w);
  const Real eps = exp2i(-static_cast<long>(wp), wp);
  long k = 1;
  Real tail(wp);
  for (;; ++k) {
    t = t * mw / k;
    Complex tk = t / (a + k);
    s += tk;
    Real at = abs(tk);
    sabs += at;
    if (Real(k, wp) > aw * 2 && (a + k) > 1.0 && at <= eps * sabs) {
      tail = at * 2;
      break;
    }
  }
  Complex wa = exp(log_with_arg(w, Real(theta, wp)) * a);
  Real ga = gamma(a);
  Complex v = Complex(ga) - wa * s;
  Real err = bound_up(abs(wa) * tail + rnd_err(abs(ga) + abs(wa) * sabs, wp, 2 * k + 16));
  return {v, err};
}

}  // namespace

BigComplex upper_gamma_cx(const Real& a, const Complex& w, const Real& theta,
                          const Precision& prec) {
  if (w.is_zero()) {
    if (a.sign() <= 0) throw DomainError("upper_gamma_cx: Gamma(a, 0) diverges for a <= 0");
    Real g = gamma(Real(a, prec.working() + 16));
    return {Complex(Real(g, prec.working())), rnd_err(g, prec.working(), 4)};
  }
  const double aw = abs(w).to_double();
  const double ad = std::fabs(a.to_double());
  // Cancellation depth: the series terms reach e^{|w|} while the result can be as small as e^{-|w|}.
  Bits start = prec.working() + static_cast<Bits>(2.9 * aw + 2 * std::log2(ad + 2) + 32);
  if (a.is_integer()) {
    long n = a.to_long();
    if (n >= 1) return adaptive([&](Bits wp) { return gamma_posint(n, w, wp); }, prec, start);
    return adaptive([&](Bits wp) { return gamma_negint(-n, w, theta, wp); }, prec, start);
  }
  return adaptive([&](Bits wp) { return gamma_series(a, w, theta, wp); }, prec, start);
}

BigComplex upper_gamma_cx(const Real& a, const Complex& w, const Precision& prec) {
  return upper_gamma_cx(a, w, principal_arg(w), prec);
}

BigComplex expint_e1(const Complex& w, const Precision& prec) {
  return upper_gamma_cx(Real(0L, prec.working()), w, prec);
}

}  // namespace gammahyper
