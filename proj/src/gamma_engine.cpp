#include "gammahyper/gamma_engine.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace gammahyper {

namespace {

std::mutex table_mu;
std::shared_ptr<const StirlingTable> exact_table;
std::map<Bits, std::shared_ptr<const std::vector<Real>>> real_tables;

Real eps_bits(Bits wp) { return exp2i(-static_cast<long>(wp), kBoundBits); }

/// log(1 + e) accurate for small e
Complex log1p_cx(const Complex& e) {
  Real t = e.re * 2 + norm(e);
  return Complex(log1p(t) / 2, atan2(e.im, e.re + 1L));
}

bool near_nonpositive_axis(const Complex& z) { return z.im.is_zero() && z.re.sign() <= 0; }

}  // namespace

SectorPoint SectorPoint::from_z(const Complex& z) {
  SectorPoint p;
  p.z = z;
  p.modulus = abs(z);
  if (z.im.is_zero() && z.re.sign() < 0) p.theta = const_pi(z.precision());
  else p.theta = arg(z);
  return p;
}

SectorPoint SectorPoint::polar(const Real& modulus, const Real& theta) {
  Bits prec = std::max(modulus.precision(), theta.precision());
  SectorPoint p;
  p.modulus = Real(modulus, prec);
  p.theta = Real(theta, prec);
  p.z = gammahyper::polar(p.modulus, p.theta);
  return p;
}

SectorPoint SectorPoint::at(Bits prec) const {
  SectorPoint p;
  p.z = Complex(z, prec);
  p.modulus = Real(modulus, prec);
  p.theta = Real(theta, prec);
  return p;
}

std::shared_ptr<const StirlingTable> stirling_exact(std::size_t nmax) {
  std::lock_guard lock(table_mu);
  if (!exact_table || exact_table->nmax() < nmax) {
    std::size_t want = std::max<std::size_t>(nmax, exact_table ? exact_table->nmax() * 3 / 2 : 330);
    exact_table = std::make_shared<const StirlingTable>(stirling_wrench(want));
    real_tables.clear();
  }
  return exact_table;
}

void install_stirling_table(StirlingTable table) {
  std::lock_guard lock(table_mu);
  exact_table = std::make_shared<const StirlingTable>(std::move(table));
  real_tables.clear();
}

std::shared_ptr<const std::vector<Real>> stirling_reals(std::size_t count, Bits prec) {
  auto exact = stirling_exact(count == 0 ? 0 : count - 1);
  std::lock_guard lock(table_mu);
  auto& slot = real_tables[prec];
  if (!slot || slot->size() < count) {
    auto v = std::make_shared<std::vector<Real>>();
    v->reserve(exact->size());
    for (const auto& q : exact->entries) v->emplace_back(q, prec);
    slot = v;
  }
  return slot;
}

namespace {

/// Rigorous upper bound for 1 + zeta(N), N >= 2.
double one_plus_zeta_upper(long N) {
  double n = static_cast<double>(N);
  return 2.0 + std::exp2(-n) + std::exp2(1.0 - n) / (n - 1.0);
}

double log2_uniform_bound_coeff(long N) {
  // log2 of (1+zeta(N)) Gamma(N) (2 sqrt N + 1) / (2 (2 pi)^{N+1})
  double n = static_cast<double>(N);
  return std::log2(one_plus_zeta_upper(N)) + std::lgamma(n) / std::log(2.0) +
         std::log2((2 * std::sqrt(n) + 1) / 2) - (n + 1) * std::log2(2 * M_PI);
}

long shift_needed(double x, double y, double r) {
  // smallest m >= 0 with x + m >= 0 and (x+m)^2 + y^2 >= r^2
  double need = std::max(0.0, r * r - y * y);
  double m = std::max(-x, std::sqrt(need) - x);
  if (m <= 0) return 0;
  long mi = static_cast<long>(std::ceil(m - 1e-12));
  while ((x + mi) * (x + mi) + y * y < r * r || x + mi < 0) ++mi;
  return mi;
}

struct Plan {
  long N;
  long m;
};

Plan choose_plan(const Complex& z, double target_bits) {
  const double x = z.re.to_double(), y = z.im.to_double();
  const long nmax = std::min<long>(700, std::max<long>(160, static_cast<long>(target_bits / 2)));
  Plan best{0, 0};
  double best_cost = 1e300;
  for (long N = 2; N <= nmax; ++N) {
    double l2r = (log2_uniform_bound_coeff(N) + target_bits + 1) / static_cast<double>(N);
    if (l2r > 60) continue;
    double r = std::max({10.0, static_cast<double>(N) / (2 * M_PI), std::exp2(l2r)});
    long m = shift_needed(x, y, r);
    double cost = static_cast<double>(N) + 2.0 * static_cast<double>(m);
    // ties go to the larger shift
    if (cost < best_cost || (cost == best_cost && m > best.m)) {
      best_cost = cost;
      best = {N, m};
    }
  }
  if (best.N == 0) throw PrecisionError("gamma_star: no admissible truncation for the requested precision");
  return best;
}

}  // namespace

BigComplex gamma_star_shifted(const SectorPoint& sp, const Precision& prec) {
  if (sp.modulus.is_zero() || near_nonpositive_axis(sp.z))
    throw DomainError("gamma_star: z on the non-positive real axis");
  if (abs(sp.theta) > const_pi(sp.theta.precision()))
    throw DomainError("gamma_star: |arg z| > pi needs a continuation rule");
  const double target_bits = static_cast<double>(prec.bits) + 8;
  Plan plan = choose_plan(sp.z, target_bits);
  const long N = plan.N, m = plan.m;

  Real az = abs(sp.z);
  double ylog = std::log2(az.to_double() + static_cast<double>(m) + 2);
  const Bits wp = prec.working() + 24 + static_cast<Bits>(2 * ylog);
  Complex z(sp.z, wp);
  Complex y = z + m;

  auto coeffs = stirling_reals(static_cast<std::size_t>(N), wp);
  const auto& g = *coeffs;
  Complex u = Complex(Real(-1L, wp), Real(wp)) / y;
  Complex S(Real(g[N - 1], wp), Real(wp));
  for (long n = N - 2; n >= 0; --n) S = S * u + g[n];

  Real ay = abs(y);
  // uniform truncation bound at y
  Real trunc(one_plus_zeta_upper(N), kBoundBits);
  Real lg = lgamma_abs(Real(N, kBoundBits));
  trunc *= exp(lg);
  trunc *= (sqrt(Real(N, kBoundBits)) * 2 + 1L) / 2;
  trunc /= pow(const_pi(kBoundBits) * 2, N + 1);
  trunc /= pow(Real(ay, kBoundBits), N);
  trunc = bound_up(trunc);
  Real horner = bound_up(eps_bits(wp) * (8 * N + 16));

  Complex F(Real(1L, wp), Real(wp));
  Real fexp_err(kBoundBits);
  if (m > 0) {
    Complex half(Real(1L, wp) / 2, Real(wp));
    Complex ly = log(y), lz = log(z);
    Complex E = (y - half) * ly - (z - half) * lz;
    E.re -= Real(m, wp);
    Complex P = z;
    for (long k = 1; k < m; ++k) P *= z + k;
    F = exp(E) / P;
    Real mags = abs(y - half) * abs(ly) + abs(z - half) * abs(lz) + Real(m, wp);
    fexp_err = bound_up(eps_bits(wp) * (mags * 4 + 6 * m + 16));
  }
  Complex val = S * F;
  Real absS = abs(S);
  Real rel = (trunc + horner) / (Real(absS, kBoundBits) - trunc - horner) + fexp_err + eps_bits(wp) * 8;
  Complex out(val, prec.working());
  Real err = bound_up(abs(out) * rel + abs(out) * eps_bits(prec.working()) * 2);
  return {out, err};
}

BigComplex gamma_star(const SectorPoint& z, const Precision& prec) {
  Real margin = const_pi(z.theta.precision()) - abs(z.theta);
  if (margin < 0.1)
    throw DomainError("gamma_star: |arg z| must stay at least 0.1 away from pi (use continuation)");
  return gamma_star_shifted(z, prec);
}

namespace {
BigComplex invert(const BigComplex& v, const Precision& prec) {
  Bits wp = prec.working();
  Complex one(Real(1L, wp), Real(wp));
  Complex r = one / v.value;
  Real av = abs(v.value);
  Real rel = v.error_bound / (Real(av, kBoundBits) - v.error_bound);
  return {r, bound_up(abs(r) * (rel + eps_bits(wp) * 4))};
}
}  // namespace

BigComplex recip_gamma_star(const SectorPoint& z, const Precision& prec) {
  return invert(gamma_star(z, prec), prec);
}

Real stieltjes_q(const Real& t) {
  Real u = t - floor(t);
  return (u - u * u) / 2;
}

BigComplex gamma_star_stieltjes(const SectorPoint& sp, const Precision& prec) {
  if (sp.modulus.is_zero() || near_nonpositive_axis(sp.z))
    throw DomainError("gamma_star_stieltjes: z on the non-positive real axis");
  if (abs(sp.theta) >= const_pi(sp.theta.precision()))
    throw DomainError("gamma_star_stieltjes: requires |arg z| < pi");
  const double T = static_cast<double>(prec.bits) + 8;
  const double az = sp.modulus.to_double();
  const bool left = sp.z.re.sign() < 0;
  long K = std::max(8L, static_cast<long>(std::ceil(T / 6 + 8 - az)));
  if (left) K = std::max(K, static_cast<long>(std::ceil(2 * az)) + 8);
  const double dist = left ? static_cast<double>(K) - az : az + static_cast<double>(K);

  const Bits wp = prec.working() + 32 + static_cast<Bits>(2 * std::log2(az + K + 2));
  Complex z(sp.z, wp);
  Complex one(Real(1L, wp), Real(wp));

  auto L_of = [&](const Complex& a) { return log1p_cx(one / a); };

  // direct intervals n < K
  Complex J(wp);
  for (long n = K - 1; n >= 0; --n) {
    Complex a = z + n;
    Complex In = ((a * 2 + 1L) * L_of(a) - 2L) / 2L;
    J += In;
  }

  // tail: integral + f(K)/2 - sum_j B_{2j}/(2j) c_{2j-1}
  Complex a0 = z + K;
  Complex L0 = L_of(a0);
  Complex integral = a0 / 2L - (a0 * a0 + a0) * L0 / 2L;
  integral.re += Real(1L, wp) / 4;
  Complex fK = ((a0 * 2 + 1L) * L0 - 2L) / 2L;
  J += integral + fK / 2L;

  Complex inv0 = one / a0, inv1 = one / (a0 + 1L);
  Complex p0 = inv0, p1 = inv1;  // a0^{-j}, (a0+1)^{-j}
  Complex ell_prev = L0;
  Complex twoa1 = a0 * 2 + 1L;
  auto B = shared_bernoulli(64);
  Real remainder(kBoundBits);
  const Real target = exp2i(-static_cast<long>(T), kBoundBits);
  Real da(dist, kBoundBits);
  long j = 1;  // index into ell_j / c_j
  long p = 1;
  for (;; ++p) {
    // ell_{2p-1} and c_{2p-1}
    while (j <= 2 * p - 1) {
      Complex ell = (p1 - p0) / j;
      if (j % 2 == 0) ell = -ell;
      Complex c = (twoa1 * ell + ell_prev * 2L) / 2L;
      if (j == 2 * p - 1) {
        if (B->size() <= static_cast<std::size_t>(2 * p + 2)) B = shared_bernoulli(4 * p + 8);
        J -= c * (Real((*B)[2 * p], wp) / (2 * p));
      }
      ell_prev = ell;
      p0 *= inv0;
      p1 *= inv1;
      ++j;
    }
    // |R_{p+1}| <= |B_{2p+2}| 2^{p+2} / (12 dist^{2p+3}) for Re z >= 0;
    // |B_{2p+2}| / (12 dist^{2p+3}) when Re z < 0.
    if (B->size() <= static_cast<std::size_t>(2 * p + 4)) B = shared_bernoulli(4 * p + 8);
    Real rb = abs(Real((*B)[2 * p + 2], kBoundBits)) / 12 / pow(da, 2 * p + 3);
    if (!left) rb *= exp2i(p + 2, kBoundBits);
    if (rb < target) {
      remainder = bound_up(rb);
      break;
    }
    if (p > 4 * K + 400) throw PrecisionError("gamma_star_stieltjes: tail did not converge");
  }
  Real scale = Real(1L, kBoundBits) + Real(az + static_cast<double>(K), kBoundBits);
  Real rnd = bound_up(eps_bits(wp) * (Real(8 * K + 16 * p + 64, kBoundBits) * scale * scale));
  Complex val = exp(J);
  Complex out(val, prec.working());
  Real err_J = remainder + rnd;
  // |e^{J+d} - e^J| <= |e^J| (e^{|d|} - 1)
  Real rel = expm1(err_J) + eps_bits(wp) * 4;
  return {out, bound_up(abs(out) * rel + abs(out) * eps_bits(prec.working()) * 2)};
}

namespace {

SectorPoint rotated(const SectorPoint& z, int half_turns) {
  SectorPoint s;
  s.modulus = z.modulus;
  s.theta = z.theta + const_pi(z.theta.precision()) * half_turns;
  s.z = (half_turns % 2 != 0) ? -z.z : z.z;
  return s;
}

BigComplex mul_exact_factor(const Complex& f, const Real& f_rel, const BigComplex& v, Bits wp) {
  Complex r = f * v.value;
  Real av = abs(v.value);
  Real rel = f_rel + v.error_bound / Real(av, kBoundBits) + eps_bits(wp) * 4;
  return {r, bound_up(abs(r) * rel)};
}

}  // namespace

BigComplex continue_gamma_star(const SectorPoint& zp, ContinuationRule rule, const Precision& prec) {
  int turns = 0;
  int sign = 1;  // +1 upper sign in the exponentials
  switch (rule) {
    case ContinuationRule::reflect_up: turns = -1; sign = 1; break;
    case ContinuationRule::reflect_down: turns = 1; sign = -1; break;
    case ContinuationRule::wrap_up: turns = 2; sign = 1; break;
    case ContinuationRule::wrap_down: turns = -2; sign = -1; break;
  }
  SectorPoint src = rotated(zp, turns);
  if (abs(src.theta) >= const_pi(src.theta.precision()) * 3)
    throw DomainError("continue_gamma_star: rule does not apply in this sector (source arg out of range)");

  const Bits wp = prec.working() + 16 + static_cast<Bits>(std::log2(zp.modulus.to_double() + 2));
  Complex z(zp.z, wp);
  // e^{+-2 pi i z}
  Complex w = times_i(z) * (const_pi(wp) * 2 * sign);
  Complex e = exp(w);
  Real e_rel = bound_up(eps_bits(wp) * (abs(w) * 4 + 8));

  BigComplex sv = gamma_star_any(src, prec.raised(16));
  if (rule == ContinuationRule::wrap_up || rule == ContinuationRule::wrap_down) {
    BigComplex r = mul_exact_factor(-e, e_rel, sv, wp);
    return {Complex(r.value, prec.working()), bound_up(r.error_bound + abs(r.value) * eps_bits(prec.working()))};
  }
  Complex one(Real(1L, wp), Real(wp));
  Complex d = one - e;
  Real ad = abs(d);
  if (ad.is_zero()) throw DomainError("continue_gamma_star: reflection at an integer point");
  Real d_rel = e_rel * abs(e) / Real(ad, kBoundBits);
  Complex prod = d * sv.value;
  Real prel = d_rel + sv.error_bound / Real(abs(sv.value), kBoundBits);
  Complex r = one / prod;
  Real rel = prel / (Real(1L, kBoundBits) - prel) + eps_bits(wp) * 8;
  Complex out(r, prec.working());
  return {out, bound_up(abs(out) * (rel + eps_bits(prec.working()) * 2))};
}

BigComplex gamma_star_any(const SectorPoint& z, const Precision& prec) {
  const Real pi = const_pi(z.theta.precision());
  const Real& t = z.theta;
  if (abs(t) < pi || (t == pi && !near_nonpositive_axis(z.z))) return gamma_star_shifted(z, prec);
  if (t >= pi && t < pi * 2) return continue_gamma_star(z, ContinuationRule::reflect_up, prec);
  if (t >= pi * 2 && t < pi * 3) return continue_gamma_star(z, ContinuationRule::wrap_down, prec);
  if (t <= -pi && t > -(pi * 2)) return continue_gamma_star(z, ContinuationRule::reflect_down, prec);
  if (t <= -(pi * 2) && t > -(pi * 3)) return continue_gamma_star(z, ContinuationRule::wrap_up, prec);
  throw DomainError("gamma_star: |arg z| >= 3 pi is outside the supported sheets");
}

Real sector_factor(const Real& theta) {
  Real at = abs(theta);
  Real q = const_pi(theta.precision()) / 4;
  if (at <= q) return Real(1L, theta.precision());
  return abs(Real(1L, theta.precision()) / sin(theta * 2));
}

LogGammaTail log_gamma_tail(const SectorPoint& zp, long N, const Precision& prec) {
  if (N < 1) throw DomainError("log_gamma_tail: N must be >= 1");
  if (abs(zp.theta) >= const_pi(zp.theta.precision()) / 2)
    throw DomainError("log_gamma_tail: requires |arg z| < pi/2");
  auto B = shared_bernoulli(static_cast<std::size_t>(2 * N + 2));
  const Bits wp = prec.working() + 16;
  Complex z(zp.z, wp);
  Complex inv = Complex(Real(1L, wp), Real(wp)) / z;
  Complex inv2 = inv * inv;
  Complex zp_pow = inv;  // z^{-(2n-1)}
  Complex sum(wp);
  for (long n = 1; n < N; ++n) {
    Real c = Real((*B)[2 * n], wp) / (Real(2 * n, wp) * (2 * n - 1));
    sum += zp_pow * c;
    zp_pow *= inv2;
  }
  Real bound = abs(Real((*B)[2 * N], kBoundBits)) / (Real(2 * N, kBoundBits) * (2 * N - 1));
  bound /= pow(Real(zp.modulus, kBoundBits), 2 * N - 1);
  bound *= sector_factor(zp.theta);
  Complex out(sum, prec.working());
  return {{out, bound_up(eps_bits(wp) * (4 * N + 8) * (abs(out) + 1L))}, bound_up(bound)};
}

}  // namespace gammahyper
