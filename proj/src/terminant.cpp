#include "gammahyper/terminant.hpp"

#include "gammahyper/special.hpp"

#include <cmath>

namespace gammahyper {

namespace {

Real eps_at(Bits wp) { return exp2i(1 - static_cast<long>(wp), kBoundBits); }

void check_p(const Real& p, const char* who) {
  if (!(p > 0.0)) throw DomainError(std::string(who) + ": p must be > 0");
}

/// e^{pi i p} w^{1-p} e^{-w} / (2 pi i) on the sheet of w.theta
Complex integral_prefactor(const Real& p, const SectorPoint& w, Bits wp) {
  Real pr(p, wp);
  Complex lw = log_with_arg(Complex(w.z, wp), Real(w.theta, wp));
  Complex e = lw * (Real(1L, wp) - pr) - Complex(w.z, wp);
  e.im += const_pi(wp) * pr;
  Complex v = exp(e);
  // divide by 2 pi i
  Real tp = const_pi(wp) * 2;
  return Complex(v.im / tp, -v.re / tp);
}

}  // namespace

std::string_view branch_name(BranchNote b) {
  return b == BranchNote::principal ? "principal" : "residue_continued";
}

BigComplex terminant_gamma_route(const Real& p, const SectorPoint& w, const Precision& prec) {
  check_p(p, "terminant");
  const Bits wp = prec.working() + 16;
  Real pr(p, wp);
  Precision inner = prec.raised(16);
  BigComplex G = upper_gamma_cx(Real(1L, wp) - pr, w.z, w.theta, inner);
  Real gp = gamma(pr);
  Complex ph = expi(const_pi(wp) * pr);
  Complex t = ph * Complex(G.value, wp) * gp;
  Real tp = const_pi(wp) * 2;
  Complex v(t.im / tp, -t.re / tp);
  Real scale = abs(gp) / tp;
  Complex out(v, prec.working());
  return {out, bound_up(G.error_bound * scale * (eps_at(wp) * 8 + 1L) + abs(out) * eps_at(prec.working()) * 4)};
}

TerminantValue terminant(const Real& p, const SectorPoint& w, const Precision& prec, bool cross_check) {
  check_p(p, "terminant");
  const Bits wp = prec.working() + 16;
  const Real pi = const_pi(wp);
  Real at = abs(w.theta);
  if (at >= pi + Real(kContinuationStrip, wp))
    throw DomainError("terminant: |arg w| must be < pi + 0.7, got " + w.theta.to_sci(6));
  if (w.z.is_zero()) throw DomainError("terminant: w must be nonzero");

  TerminantValue out;
  if (at < pi) {
    out.value = terminant_gamma_route(p, w, prec);
    out.branch_note = BranchNote::principal;
  } else {
    const int s = w.theta.sign();
    SectorPoint base = w;
    base.theta = Real(w.theta, wp) - pi * (2 * s);
    BigComplex b = terminant_gamma_route(p, base, prec.raised(8));
    Complex ph = expi(pi * Real(p, wp) * (-2 * s));
    Complex one(Real(1L, wp), Real(wp));
    Complex v = s > 0 ? ph * Complex(b.value, wp) + one : ph * (Complex(b.value, wp) - one);
    Complex r(v, prec.working());
    out.value = {r, bound_up(b.error_bound * (eps_at(wp) * 8 + 1L) + (abs(r) + 1L) * eps_at(prec.working()) * 4)};
    out.branch_note = BranchNote::residue_continued;
  }
  out.est_error = out.value.error_bound;
  if (cross_check) {
    QuadResult<Complex> q = terminant_quadrature(p, w, prec);
    Real diff = bound_up(abs(q.value - out.value.value));
    out.est_error = max(out.est_error, diff);
  }
  return out;
}

QuadResult<Complex> terminant_quadrature(const Real& p, const SectorPoint& w, const Precision& prec,
                                         std::optional<Real> alpha) {
  check_p(p, "terminant_quadrature");
  const Bits wp = prec.working() + 16;
  const Real pi = const_pi(wp);
  Real th(w.theta, wp);
  Real al(wp);
  if (alpha) {
    al = Real(*alpha, wp);
  } else if (th.sign() >= 0) {
    al = max(Real(wp), th - pi + Real(0.5, wp));
  } else {
    al = min(Real(wp), th + pi - Real(0.5, wp));
  }
  if (!(abs(al) < pi / 2)) throw DomainError("terminant_quadrature: ray angle must satisfy |alpha| < pi/2");
  if (!(th < al + pi && th > al - pi))
    throw DomainError("terminant_quadrature: the pole t = -w lies on the wrong side of the ray");

  Real pr(p, wp);
  Real pm1 = pr - 1L;
  Complex dir = expi(al);
  Complex wz(w.z, wp);
  // t = u e^{i alpha}; the e^{i alpha p} factor is applied once outside
  auto f = [&](const Real& u) {
    Complex tu = dir * u;
    Complex num = exp(Complex(log(u) * pm1, Real(wp)) - tu);
    return Complex(num / (wz + tu));
  };
  Real rel_tol = exp2i(-static_cast<long>(prec.bits) / 2 - 8, kBoundBits);
  Real split(w.modulus, wp);
  auto a = tanh_sinh<Complex>(f, Real(wp), split, wp, rel_tol, 12);
  auto b = exp_sinh<Complex>(f, split, wp, rel_tol, 12);
  Complex scale = integral_prefactor(p, w, wp) * expi(al * pr);
  QuadResult<Complex> r;
  r.value = Complex(scale * (a.value + b.value), prec.working());
  r.error_estimate = bound_up(abs(scale) * (a.error_estimate + b.error_estimate));
  r.levels = std::max(a.levels, b.levels);
  r.evaluations = a.evaluations + b.evaluations;
  return r;
}

Complex c_of_phi_seed(const Real& phi, Bits wp) {
  Real d = Real(phi, wp) - const_pi(wp);
  Real d2 = d * d;
  Real d3 = d2 * d;
  Real d4 = d2 * d2;
  return Complex(d - d3 / 36, d2 / 6 - d4 / 270);
}

BigComplex c_of_phi(const Real& phi, const Precision& prec) {
  Bits wp = prec.working() + 16;
  Real d = Real(phi, wp) - const_pi(wp);
  if (!(abs(d) < const_pi(wp))) throw DomainError("c_of_phi: requires |phi - pi| < pi");
  if (d.is_zero()) return {Complex(prec.working()), Real(kBoundBits)};
  // 1 - cos d and d - sin d cancel for small d
  wp += static_cast<Bits>(std::max(0.0, -3 * d.log2_abs())) + 8;
  d = Real(phi, wp) - const_pi(wp);
  Real s2 = sin(d / 2);
  Complex g(s2 * s2 * 2, d - sin(d));
  Complex seed = c_of_phi_seed(phi, wp);
  Complex c = seed;
  const Real tol = exp2i(4 - static_cast<long>(wp), kBoundBits);
  bool done = false;
  for (int it = 0; it < 200; ++it) {
    Complex step = (c * c / 2L - g) / c;
    c -= step;
    if (abs(step) <= tol * abs(c)) {
      done = true;
      break;
    }
  }
  if (!done) throw PrecisionError("c_of_phi: Newton iteration did not converge");
  // the other root is -c; accept only the one continuing the series branch
  Complex cs = c * conj(seed);
  if (!(cs.re.sign() > 0))
    throw PrecisionError("c_of_phi: refinement left the branch through c(pi) = 0 at phi = " + phi.to_sci(10));
  Real resid = abs(c * c / 2L - g);
  Complex out(c, prec.working());
  return {out, bound_up(resid / abs(c) * 2 + abs(out) * eps_at(prec.working()) * 2)};
}

BigComplex terminant_erf_model(const Real& p, const SectorPoint& w, ErfSide side, const Precision& prec) {
  check_p(p, "terminant_erf_model");
  const Bits wp = prec.working() + 16;
  const Real pi = const_pi(wp);
  Real th(w.theta, wp);
  Precision inner = prec.raised(16);
  BigComplex c;
  if (side == ErfSide::upper) {
    if (!(th > 0.0 && th < pi * 2)) throw DomainError("terminant_erf_model: upper form needs 0 < arg w < 2 pi");
    c = c_of_phi(th, inner);
  } else {
    if (!(th < 0.0 && th > -(pi * 2)))
      throw DomainError("terminant_erf_model: lower form needs -2 pi < arg w < 0");
    c = c_of_phi(-th, inner);
    c.value = -conj(c.value);
  }
  Real k = sqrt(Real(w.modulus, wp) / 2);
  Complex x = Complex(c.value, wp) * k;
  BigComplex e = erf_cx(x, inner);
  Complex half(Real(1L, wp) / 2, Real(wp));
  Complex v = Complex(e.value, wp) / 2L;
  v = side == ErfSide::upper ? v + half : v - half;
  // |erf'(x)| = 2/sqrt(pi) |e^{-x^2}|
  Real dmax = exp(-(x * x).re) * 2 / sqrt(pi);
  Real cerr = c.error_bound * k * (Real(1L, kBoundBits) + eps_at(wp));
  Complex out(v, prec.working());
  return {out, bound_up((e.error_bound + dmax * cerr * 2) / 2 + eps_at(prec.working()) * 2)};
}

}  // namespace gammahyper
