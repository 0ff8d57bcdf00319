#include "gammahyper/hyperasym.hpp"

#include "gammahyper/special.hpp"
#include "gammahyper/sweep.hpp"

#include <cmath>

namespace gammahyper {

namespace {

Real eps_at(Bits wp) { return exp2i(1 - static_cast<long>(wp), kBoundBits); }

/// e^{+-2 pi i z}
Complex exp_2piiz(const Complex& z, int sign, Bits wp) {
  Complex a = times_i(Complex(z, wp)) * (const_pi(wp) * (2 * sign));
  return exp(a);
}

void check_strip(const SectorPoint& z, const char* who) {
  Bits wp = z.theta.precision();
  if (abs(z.theta) > const_pi(wp) / 2 + Real(kHyperStrip, wp))
    throw DomainError(std::string(who) + ": requires |arg z| <= pi/2 + 0.6");
}

}  // namespace

SectorPoint stokes_variable(const SectorPoint& z, int sign) {
  Bits wp = std::max(z.z.precision(), z.theta.precision());
  SectorPoint w;
  w.z = times_i(Complex(z.z, wp)) * (const_pi(wp) * (2 * sign));
  w.modulus = Real(z.modulus, wp) * const_pi(wp) * 2;
  w.theta = Real(z.theta, wp) + const_pi(wp) / 2 * sign;
  return w;
}

Precision hyper_precision(const SectorPoint& z, long M, const Precision& prec) {
  double r = z.modulus.to_double();
  double extra = 1.4427 * 2 * M_PI * r + static_cast<double>(M) * std::log2(std::max(r, 1.0)) + 64;
  return Precision(prec.bits + static_cast<Bits>(std::ceil(extra)), prec.guard);
}

HyperExpansion improved_expansion(const SectorPoint& z, long N, long M, SeriesKind kind, const Precision& prec) {
  if (M < 0 || M >= N) throw DomainError("improved_expansion: requires 0 <= M < N");
  check_strip(z, "improved_expansion");
  const Precision hp = hyper_precision(z, M, prec);
  const Bits wp = hp.working() + 16;

  HyperExpansion h;
  h.z = z;
  h.N = N;
  h.M = M;
  h.kind = kind;
  h.R_N = true_remainder(z, N, kind, hp);

  auto table = stirling_exact(static_cast<std::size_t>(M) + 1);
  const SectorPoint wu = stokes_variable(z.at(wp), 1);
  const SectorPoint wd = stokes_variable(z.at(wp), -1);
  Complex zinv = Complex(Real(1L, wp), Real(wp)) / Complex(z.z, wp);
  Complex zpow(Real(1L, wp), Real(wp));
  Complex su(wp), sd(wp);
  Real eu(kBoundBits), ed(kBoundBits);
  for (long m = 0; m < M; ++m) {
    Real g((*table)[static_cast<std::size_t>(m)], wp);
    if (kind == SeriesKind::gamma && (m % 2)) g = -g;
    Complex coef = zpow * g;
    Real p(N - m, wp);
    TerminantValue tu = terminant(p, wu, hp);
    TerminantValue td = terminant(p, wd, hp);
    su += coef * tu.value.value;
    sd += coef * td.value.value;
    Real ca = bound_up(abs(coef));
    eu += ca * tu.value.error_bound + ca * abs(tu.value.value) * eps_at(wp) * 4;
    ed += ca * td.value.error_bound + ca * abs(td.value.value) * eps_at(wp) * 4;
    zpow *= zinv;
  }
  Complex fu = exp_2piiz(z.z, 1, wp);
  Complex fd = exp_2piiz(z.z, -1, wp);
  Complex up = fu * su;
  Complex down = fd * sd;
  h.terminant_sum_up = {Complex(up, hp.working()), bound_up(abs(fu) * (eu + abs(su) * eps_at(wp) * 8))};
  h.terminant_sum_down = {Complex(down, hp.working()), bound_up(abs(fd) * (ed + abs(sd) * eps_at(wp) * 8))};
  Complex R(h.R_N.value, wp);
  Complex rnm = kind == SeriesKind::gamma ? R - up + down : R + up - down;
  h.R_NM = {Complex(rnm, hp.working()),
            bound_up(h.R_N.error_bound + h.terminant_sum_up.error_bound + h.terminant_sum_down.error_bound +
                     abs(rnm) * eps_at(hp.working()) * 2)};
  return h;
}

Real bound_theorem5(const SectorPoint& z, long N, long M, const Precision& prec) {
  if (M < 2 || M >= N) throw DomainError("bound_theorem5: requires 2 <= M < N");
  {
    Bits tp = z.theta.precision();
    if (abs(z.theta) > const_pi(tp) / 2) throw DomainError("bound_theorem5: requires |arg z| <= pi/2");
  }
  const Bits wp = prec.working() + 16;
  Precision inner = prec.raised(16);
  const Real pi = const_pi(wp);
  Real r(z.modulus, wp);
  Real zeta = zeta_int(M, inner).value;
  Real gM = gamma(Real(M, wp));
  Real first = zeta * gM * gamma(Real(N - M, wp)) * (6 * M + 2) / (pow(pi * 2, N + 2) * pow(r, N));
  Real pre = zeta * gM * (sqrt(Real(M, wp)) * 2 + 1L) / (pow(pi * 2, M + 1) * pow(r, M));
  Real p(N - M, wp);
  TerminantValue tu = terminant(p, stokes_variable(z.at(wp), 1), inner);
  TerminantValue td = terminant(p, stokes_variable(z.at(wp), -1), inner);
  Real t = abs(exp_2piiz(z.z, 1, wp) * tu.value.value) + abs(exp_2piiz(z.z, -1, wp) * td.value.value);
  return Real(first + pre * t, prec.working());
}

std::optional<StokesKind> parse_stokes_kind(std::string_view s) {
  if (s == "log") return StokesKind::log;
  if (s == "gamma") return StokesKind::gamma;
  if (s == "reciprocal") return StokesKind::reciprocal;
  return std::nullopt;
}

ExactRational stokes_multiplier(StokesKind kind, long k, const Real& theta) {
  if (k < 1) throw DomainError("stokes_multiplier: k must be >= 1");
  const Bits tp = theta.precision();
  const Real at = abs(theta);
  const Real pi = const_pi(tp);
  if (!(at < pi)) throw DomainError("stokes_multiplier: requires |theta| < pi");
  const Real hp = pi / 2;
  enum { inside, on_line, beyond } where = at < hp ? inside : (at == hp ? on_line : beyond);
  // (x)_k / k!
  auto poch = [k](const ExactRational& x) {
    ExactRational v = 1;
    for (long j = 0; j < k; ++j) v *= (x + j) / ExactRational(j + 1);
    v.canonicalize();
    return v;
  };
  switch (kind) {
    case StokesKind::log:
      if (where == inside) return 0;
      return where == on_line ? ExactRational(1, 2 * k) : ExactRational(1, k);
    case StokesKind::gamma:
      if (where == inside) return 0;
      return where == on_line ? poch(ExactRational(1, 2)) : ExactRational(1);
    case StokesKind::reciprocal:
      if (where == inside) return 0;
      if (k == 1) return where == on_line ? ExactRational(-1, 2) : ExactRational(-1);
      return where == on_line ? poch(ExactRational(-1, 2)) : ExactRational(0);
  }
  return 0;
}

StokesProfileRow stokes_profile_row(SeriesKind kind, const Real& modulus, const Real& theta, long M,
                                    const Precision& prec) {
  if (M < 1) throw DomainError("stokes_profile: M must be >= 1");
  const Bits tp = std::max<Bits>(theta.precision(), prec.working());
  const Real pi = const_pi(tp);
  Real off = abs(Real(theta, tp)) - pi / 2;
  Real tol = exp2i(8 - static_cast<long>(theta.precision()), kBoundBits);
  if (abs(off) > Real(kHyperStrip, tp) + tol)
    throw DomainError("stokes_profile: theta outside the strip pi/2 +- 0.6 (or its mirror)");
  const long N = std::lround(2 * M_PI * modulus.to_double());
  if (M >= N) throw DomainError("stokes_profile: M must be below N");
  SectorPoint z = SectorPoint::polar(Real(modulus, tp), Real(theta, tp));
  HyperExpansion h = improved_expansion(z, N, M, kind, prec);
  const Bits wp = h.R_N.value.precision();
  const int sk = kind == SeriesKind::gamma ? 1 : -1;
  const int side = theta.sign() >= 0 ? 1 : -1;

  auto table = stirling_exact(static_cast<std::size_t>(M) + 1);
  Complex zinv = Complex(Real(1L, wp), Real(wp)) / Complex(z.z, wp);
  Complex zpow(Real(1L, wp), Real(wp));
  Complex P(wp);
  for (long m = 0; m < M; ++m) {
    Real g((*table)[static_cast<std::size_t>(m)], wp);
    if (kind == SeriesKind::gamma && (m % 2)) g = -g;
    P += zpow * g;
    zpow *= zinv;
  }
  Complex R(h.R_N.value, wp);
  Complex numer = side > 0 ? R + Complex(h.terminant_sum_down.value, wp) * static_cast<long>(sk)
                           : R - Complex(h.terminant_sum_up.value, wp) * static_cast<long>(sk);
  Complex eff = numer / (exp_2piiz(z.z, side, wp) * P);

  const Bits ow = prec.working();
  StokesProfileRow row;
  row.theta = Real(theta, ow);
  row.effective_multiplier = Complex(eff, ow);
  Real x = Real(off, ow) * sqrt(const_pi(ow) * Real(modulus, ow));
  Real e(ow);
  mpfr_erf(e.get(), x.get(), MPFR_RNDN);
  row.erf_prediction = (e + 1L) / 2 * static_cast<long>(sk);
  row.residual = abs(row.effective_multiplier - Complex(row.erf_prediction));
  return row;
}

std::vector<StokesProfileRow> stokes_profile(SeriesKind kind, const Real& modulus,
                                             const std::vector<Real>& theta_grid, long M,
                                             const Precision& prec, Exec exec) {
  return sweep_map(theta_grid.size(),
                   [&](std::size_t i) { return stokes_profile_row(kind, modulus, theta_grid[i], M, prec); },
                   exec);
}

std::vector<Real> stokes_grid(int sign, std::size_t points, Bits prec) {
  if (points < 2) throw DomainError("stokes_grid: need at least two points");
  std::vector<Real> g;
  g.reserve(points);
  const Real lo = const_pi(prec) / 2 - Real(kHyperStrip, prec);
  for (std::size_t j = 0; j < points; ++j) {
    Real t = lo + Real(2 * kHyperStrip, prec) * static_cast<long>(j) / static_cast<long>(points - 1);
    g.push_back(sign >= 0 ? t : -t);
  }
  return g;
}

}  // namespace gammahyper
