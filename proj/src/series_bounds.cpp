#include "gammahyper/series_bounds.hpp"

#include "gammahyper/special.hpp"

#include <cmath>

namespace gammahyper {

namespace {

Real eps_bits(Bits wp) { return exp2i(-static_cast<long>(wp), kBoundBits); }

Real half_pi(const Real& like) { return const_pi(like.precision()) / 2; }

void require_right_half(const SectorPoint& z, bool closed, const char* who) {
  Real at = abs(z.theta);
  Real hp = half_pi(z.theta);
  if (closed ? at > hp : at >= hp)
    throw DomainError(std::string(who) + (closed ? ": requires |arg z| <= pi/2" : ": requires |arg z| < pi/2"));
}

/// (1 + zeta(N)) Gamma(N) / ((2 pi)^{N+1} |z|^N)
Real uniform_prefactor(const Real& modulus, long N, Bits wp) {
  Precision p(wp);
  Real zeta = N == 1 ? Real(3L, wp) : zeta_int(N, p).value;
  Real v = (zeta + 1L) * gamma(Real(N, wp));
  v /= pow(const_pi(wp) * 2, N + 1);
  v /= pow(Real(modulus, wp), N);
  return v;
}

}  // namespace

std::string_view kind_name(SeriesKind k) { return k == SeriesKind::gamma ? "gamma" : "reciprocal"; }

std::optional<SeriesKind> parse_kind(std::string_view s) {
  if (s == "gamma") return SeriesKind::gamma;
  if (s == "reciprocal") return SeriesKind::reciprocal;
  return std::nullopt;
}

BigComplex partial_sum(const SectorPoint& zp, long N, SeriesKind kind, const StirlingTable& table,
                       const Precision& prec) {
  if (N < 1) throw DomainError("partial_sum: N must be >= 1");
  if (table.size() < static_cast<std::size_t>(N))
    throw DomainError("partial_sum: coefficient table too short (have " + std::to_string(table.size()) +
                      ", need " + std::to_string(N) + ")");
  const Bits wp = prec.working() + 16;
  Complex z(zp.z, wp);
  Complex u = Complex(Real(1L, wp), Real(wp)) / z;
  if (kind == SeriesKind::gamma) u = -u;
  Complex S(Real(table[static_cast<std::size_t>(N - 1)], wp), Real(wp));
  Real au = abs(u);
  Real sabs = abs(S.re);
  for (long n = N - 2; n >= 0; --n) {
    S = S * u + Real(table[static_cast<std::size_t>(n)], wp);
    sabs = sabs * au + abs(Real(table[static_cast<std::size_t>(n)], wp));
  }
  Complex out(S, prec.working());
  return {out, bound_up(sabs * eps_bits(wp) * (4 * N + 8) + abs(out) * eps_bits(prec.working()))};
}

BigComplex true_remainder(const SectorPoint& z, long N, SeriesKind kind, const Precision& prec) {
  if (N < 1) throw DomainError("true_remainder: N must be >= 1");
  auto table = stirling_exact(static_cast<std::size_t>(N) + 2);
  // expected size |gamma_N| / |z|^N guides the starting precision
  Real est = abs(Real((*table)[static_cast<std::size_t>(N)], kBoundBits)) /
             pow(Real(z.modulus, kBoundBits), N);
  if (est.is_zero()) est = exp2i(-static_cast<long>(prec.bits), kBoundBits);
  double need = -est.log2_abs() + 48;
  Bits bits = std::max<Bits>(prec.bits, static_cast<Bits>(std::ceil(std::max(need, 64.0))));
  const Bits cap = 8192;
  for (;;) {
    Precision p(std::min(bits, cap), prec.guard);
    BigComplex v = gamma_star(z, p);
    if (kind == SeriesKind::reciprocal) {
      Complex one(Real(1L, p.working()), Real(p.working()));
      Complex r = one / v.value;
      Real rel = v.error_bound / (Real(abs(v.value), kBoundBits) - v.error_bound);
      v = {r, bound_up(abs(r) * (rel + eps_bits(p.working()) * 4))};
    }
    BigComplex ps = partial_sum(z, N, kind, *table, p);
    Complex R = v.value - ps.value;
    Real slack = bound_up(v.error_bound + ps.error_bound + abs(R) * eps_bits(p.working()));
    if (slack < abs(R) * Real(1e-6, kBoundBits)) return {R, slack};
    if (bits >= cap)
      throw PrecisionError("true_remainder: precision cap of 8192 bits reached at N=" + std::to_string(N));
    double short_bits = slack.log2_abs() - (Real(abs(R), kBoundBits) * Real(1e-6, kBoundBits)).log2_abs();
    bits = std::max<Bits>(bits * 2, bits + static_cast<Bits>(std::ceil(short_bits)) + 32);
  }
}

Enclosure bound_theorem1(const Real& z, long n, SeriesKind kind, const StirlingTable& table,
                         const Precision& prec) {
  if (!(z > 0.0)) throw DomainError("bound_theorem1: z must be a positive real");
  if (n < 1) throw DomainError("bound_theorem1: N must be >= 1");
  const long Nt = (n + 1) / 2;
  if (table.size() < static_cast<std::size_t>(2 * Nt + 2))
    throw DomainError("bound_theorem1: coefficient table too short");
  const Bits wp = prec.working() + 16;
  Real x(z, wp);
  auto term = [&](long k) { return Real(table[static_cast<std::size_t>(k)], wp) / pow(x, k); };
  const int sN = (Nt % 2 == 0) ? 1 : -1;  // (-1)^Nt
  Real A1 = term(2 * Nt - 1) * sN;        // (-1)^N gamma_{2N-1} / z^{2N-1}
  Real A2 = term(2 * Nt) * (-sN);         // (-1)^{N+1} gamma_{2N} / z^{2N}
  Real Bt = term(2 * Nt + 1) * (-sN);     // (-1)^{N+1} gamma_{2N+1} / z^{2N+1}
  Real lo(wp), hi(wp);
  int s;  // the enclosure is stated for s * R
  if (kind == SeriesKind::gamma) {
    s = -sN;
    if (n % 2) {
      lo = Real(wp);
      hi = A1 + A2;
    } else {
      lo = -Bt;
      hi = A2;
    }
  } else {
    if (n % 2) {
      s = sN;
      lo = -A2;
      hi = A1;
    } else {
      s = -sN;
      lo = Real(wp);
      hi = A2 + Bt;
    }
  }
  Enclosure e;
  if (s > 0) {
    e.low = lo;
    e.high = hi;
  } else {
    e.low = -hi;
    e.high = -lo;
  }
  e.abs_bound = max(abs(e.low), abs(e.high));
  return e;
}

Real bound_theorem2(const SectorPoint& z, long N, const Precision& prec) {
  if (N < 1) throw DomainError("bound_theorem2: N must be >= 1");
  require_right_half(z, false, "bound_theorem2");
  auto table = stirling_exact(static_cast<std::size_t>(N) + 1);
  const Bits wp = prec.working();
  Real r(z.modulus, wp);
  Real v = abs(Real((*table)[static_cast<std::size_t>(N)], wp)) / pow(r, N) +
           abs(Real((*table)[static_cast<std::size_t>(N + 1)], wp)) / pow(r, N + 1);
  return v * sector_factor(z.theta);
}

Real bound_theorem3(const SectorPoint& z, long N, const Precision& prec) {
  if (N < 2) throw DomainError("bound_theorem3: N must be >= 2 (the N = 1 case is not covered)");
  require_right_half(z, true, "bound_theorem3");
  const Bits wp = prec.working();
  Real f = (sqrt(Real(N, wp)) * 2 + 1L) / 2;
  return uniform_prefactor(z.modulus, N, wp) * f;
}

Real bound_boyd(const SectorPoint& z, long N, const Precision& prec) {
  if (N < 1) throw DomainError("bound_boyd: N must be >= 1");
  require_right_half(z, true, "bound_boyd");
  const Bits wp = prec.working();
  Real two_sqrt = sqrt(Real(N, wp)) * 2;
  Real c = cos(Real(z.theta, wp));
  Real sec = c > 0.0 ? Real(1L, wp) / c : two_sqrt;
  Real f = (min(sec, two_sqrt) + 1L) / 2;
  return uniform_prefactor(z.modulus, N, wp) * f;
}

RemainderReport remainder_report(const SectorPoint& z, long N, SeriesKind kind, const Precision& prec) {
  RemainderReport rep;
  rep.z = z;
  rep.N = N;
  rep.kind = kind;
  auto table = stirling_exact(static_cast<std::size_t>(N) + 2);
  rep.partial = partial_sum(z, N, kind, *table, prec).value;
  rep.true_remainder = true_remainder(z, N, kind, prec);
  const Bits wp = prec.working();
  Real at = abs(z.theta);
  Real hp = half_pi(z.theta);
  rep.theta_factors.theorem2 = Real(wp);
  rep.theta_factors.theorem3 = (sqrt(Real(N, wp)) * 2 + 1L) / 2;
  rep.theta_factors.boyd = Real(wp);
  if (at < hp) {
    rep.bounds["theorem2"] = bound_theorem2(z, N, prec);
    rep.theta_factors.theorem2 = sector_factor(z.theta);
  }
  if (at <= hp) {
    if (N >= 2) rep.bounds["theorem3"] = bound_theorem3(z, N, prec);
    rep.bounds["boyd"] = bound_boyd(z, N, prec);
    Real two_sqrt = sqrt(Real(N, wp)) * 2;
    Real c = cos(Real(z.theta, wp));
    Real sec = c > 0.0 ? Real(1L, wp) / c : two_sqrt;
    rep.theta_factors.boyd = (min(sec, two_sqrt) + 1L) / 2;
  }
  if (z.is_positive_real()) {
    rep.enclosure = bound_theorem1(z.z.re, N, kind, *table, prec);
    rep.bounds["theorem1"] = rep.enclosure->abs_bound;
  }
  return rep;
}

}  // namespace gammahyper
