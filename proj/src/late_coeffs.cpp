#include "gammahyper/late_coeffs.hpp"

#include "gammahyper/gamma_engine.hpp"
#include "gammahyper/quadrature.hpp"
#include "gammahyper/special.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace gammahyper {

namespace {

Real eps_at(Bits wp) { return exp2i(1 - static_cast<long>(wp), kBoundBits); }

struct TableSpec {
  long target;
  int value_digits;
  int err_dingle, err_boyd, err_xi;
};

TableSpec spec_of(TableId which) {
  if (which == TableId::table1) return {101, 39, 3, 9, 3};
  return {100, 36, 3, 6, 3};
}

constexpr LateMethod kTableMethods[] = {LateMethod::dingle, LateMethod::boyd_gamma, LateMethod::boyd_zeta,
                                        LateMethod::xi_new};

std::string normalized(const Real& x, int digits) {
  if (x.is_zero()) return "0";
  auto [mant, e] = x.to_normalized(digits);
  return mant + " x 10^" + std::to_string(e);
}

}  // namespace

std::vector<ExactRational> xi_coefficients(std::size_t count) {
  std::vector<ExactRational> c;
  c.reserve(count);
  ExactRational v = 1;
  for (std::size_t m = 0; m < count; ++m) {
    if (m > 0) {
      v *= ExactRational(2 * static_cast<long>(m) - 1, 2 * static_cast<long>(m));
      v.canonicalize();
    }
    c.push_back(v);
  }
  return c;
}

BigReal xi_integral(const Real& r, const Precision& prec) {
  if (!(r > 0.5)) throw DomainError("xi: requires r > 1/2");
  const Bits wp = prec.working() + 16;
  Real rr(r, wp);
  Real rm1 = rr - 1L;
  auto f = [&](const Real& u) {
    Real d = -expm1(-u);
    return Real(exp(log(u) * rm1 - u) / sqrt(d));
  };
  auto q = exp_sinh<Real>(f, Real(wp), wp, exp2i(-static_cast<long>(prec.bits), kBoundBits), 12);
  Real g = gamma(rr);
  Real v = q.value / g;
  return {Real(v, prec.working()), bound_up(q.error_estimate / abs(g) + abs(v) * eps_at(prec.working()) * 4)};
}

// sum_{m>=L} (1/2)_m/m! (m+1)^{-r}
Real xi_tail_bound(long L, const Real& r) {
  Real Lr(L, kBoundBits);
  Real rb(r, kBoundBits);
  Real pi = const_pi(kBoundBits);
  if (rb > 1.0) {
    Real L1 = Lr + 1L;
    Real t = pow(L1, -rb) + pow(L1, Real(1L, kBoundBits) - rb) / (rb - 1L);
    return bound_up(t / sqrt(pi * (Lr + Real(0.25, kBoundBits))));
  }
  Real h(0.5, kBoundBits);
  Real t = pow(Lr, -(rb + h)) + pow(Lr, h - rb) / (rb - h);
  return bound_up(t / sqrt(pi));
}

BigReal xi(const Real& r, const Precision& prec) {
  if (!(r > 0.5)) throw DomainError("xi: requires r > 1/2");
  const Real goal = exp2i(-static_cast<long>(prec.bits) - 4, kBoundBits);
  long L = 2;
  while (xi_tail_bound(L, r) > goal) {
    if (L > kXiMaxTerms) return xi_integral(r, prec);
    L *= 2;
  }
  for (long lo = L / 2, hi = L; hi - lo > 1;) {
    long mid = lo + (hi - lo) / 2;
    (xi_tail_bound(mid, r) > goal ? lo : hi) = mid;
    L = hi;
  }
  const Bits wp = prec.working() + 16 + static_cast<Bits>(std::log2(static_cast<double>(L)));
  Real rr(r, wp);
  const bool int_r = rr.is_integer() && rr < 1e9;
  const long ri = int_r ? rr.to_long() : 0;
  Real c(1L, wp);
  Real s(1L, wp);
  for (long m = 1; m < L; ++m) {
    c *= 2 * m - 1;
    c /= 2 * m;
    Real base(m + 1, wp);
    s += int_r ? c / pow(base, ri) : c * exp(-(log(base) * rr));
  }
  // the tail is positive: centre it
  Real half_tail = xi_tail_bound(L, r) / 2;
  s += Real(half_tail, wp);
  return {Real(s, prec.working()),
          bound_up(half_tail + abs(s) * eps_at(wp) * (4 * L + 8) + abs(s) * eps_at(prec.working()))};
}

std::string_view method_name(LateMethod m) {
  switch (m) {
    case LateMethod::dingle: return "dingle";
    case LateMethod::boyd_gamma: return "boyd_gamma";
    case LateMethod::boyd_zeta: return "boyd_zeta";
    case LateMethod::boyd_improved: return "boyd_improved";
    case LateMethod::xi_new: return "xi_new";
  }
  return "?";
}

std::optional<LateMethod> parse_late_method(std::string_view s) {
  for (LateMethod m : {LateMethod::dingle, LateMethod::boyd_gamma, LateMethod::boyd_zeta, LateMethod::boyd_improved,
                       LateMethod::xi_new})
    if (method_name(m) == s) return m;
  return std::nullopt;
}

std::string_view parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

long optimal_K(long n) {
  if (n < 1) throw DomainError("optimal_K: n must be >= 1");
  return (n + 1) / 2;
}

LateCoeffApproximation late_coeff_approx(long target_index, LateMethod method, long K, const StirlingTable& table,
                                         const Precision& prec) {
  if (target_index < 1) throw DomainError("late_coeff_approx: target index must be >= 1");
  LateCoeffApproximation out;
  out.target_index = target_index;
  out.parity = target_index % 2 ? Parity::odd : Parity::even;
  const long n = out.parity == Parity::odd ? (target_index + 1) / 2 : target_index / 2;
  out.n = n;
  out.method = method;
  out.K = K;
  if (K < 1 || K >= n) throw DomainError("late_coeff_approx: requires 1 <= K < n");
  const long shift = out.parity == Parity::odd ? 0 : 1;
  const long need = std::max(target_index, 2 * (K - 1) + shift);
  if (table.nmax() < static_cast<std::size_t>(need))
    throw DomainError("late_coeff_approx: coefficient table too short (need gamma_" + std::to_string(need) + ")");

  const Bits wp = prec.working() + 32;
  Precision inner(prec.bits + 32, prec.guard);
  const Real two_pi = const_pi(wp) * 2;
  const Real two_pi_sq = two_pi * two_pi;
  Real pw(1L, wp);  // (2 pi)^{2k}
  Real sum(wp);
  Real err(kBoundBits);
  for (long k = 0; k < K; ++k) {
    const long r = 2 * n - 2 * k - 1;
    Real w(1L, wp);
    Real werr(kBoundBits);
    switch (method) {
      case LateMethod::dingle: {
        BigReal z = zeta_int(r + 1, inner);
        w = Real(z.value, wp);
        werr = z.error_bound;
        break;
      }
      case LateMethod::boyd_gamma: break;
      case LateMethod::boyd_zeta: {
        BigReal z = zeta_int(r, inner);
        w = Real(z.value, wp);
        werr = z.error_bound;
        break;
      }
      case LateMethod::xi_new: {
        BigReal x = xi(Real(r, wp), inner);
        w = Real(x.value, wp);
        werr = x.error_bound;
        break;
      }
      case LateMethod::boyd_improved:
        if (k == 0) w += exp2i(-2 * n, wp);
        break;
    }
    Real term = Real(table[static_cast<std::size_t>(2 * k + shift)], wp) * pw * gamma(Real(r, wp));
    if (k % 2) term = -term;
    sum += term * w;
    err += abs(term) * (werr + abs(w) * eps_at(wp) * 8);
    pw *= two_pi_sq;
  }
  Real scale = Real(2L, wp) / pow(two_pi, 2 * n);
  if (n % 2) scale = -scale;
  Real v = sum * scale;
  out.value = {Real(v, prec.working()), bound_up(err * abs(scale) + abs(v) * eps_at(prec.working()) * 2)};
  out.exact = table[static_cast<std::size_t>(target_index)];
  out.error = Real(Real(out.exact, wp) - v, prec.working());
  return out;
}

BigReal resurgence_quadrature(long target_index, const Precision& prec) {
  if (target_index < 1) throw DomainError("resurgence_quadrature: target index must be >= 1");
  const bool odd = target_index % 2;
  const long N = odd ? (target_index + 1) / 2 : target_index / 2;
  const long power = odd ? 2 * N - 2 : 2 * N - 1;
  const Bits wp = prec.working() + 16;
  Precision inner = prec.raised(16);
  const Real two_pi = const_pi(wp) * 2;
  const Real half_pi = const_pi(wp) / 2;
  Real worst_rel(kBoundBits);
  auto f = [&](const Real& s) {
    SectorPoint z;
    z.z = Complex(Real(wp), Real(s, wp));
    z.modulus = Real(s, wp);
    z.theta = half_pi;
    BigComplex g = gamma_star_shifted(z, inner);
    Real part = odd ? g.value.re : g.value.im;
    Real rel = g.error_bound / abs(g.value);
    if (rel > worst_rel) worst_rel = rel;
    return Real(part * exp(log(Real(s, wp)) * power - two_pi * s));
  };
  auto q = exp_sinh<Real>(f, Real(wp), wp, exp2i(-static_cast<long>(prec.bits), kBoundBits), 12);
  Real v = q.value / const_pi(wp);
  if (N % 2) v = -v;
  Real e = bound_up(q.error_estimate / const_pi(wp) + abs(v) * worst_rel * 4);
  return {Real(v, prec.working()), e};
}

TableReproduction reproduce_table(TableId which, const Precision& prec, Exec exec) {
  const TableSpec sp = spec_of(which);
  auto table = stirling_exact(static_cast<std::size_t>(sp.target) + 2);
  TableReproduction t;
  t.which = which;
  t.target_index = sp.target;
  t.n = sp.target % 2 ? (sp.target + 1) / 2 : sp.target / 2;
  t.K = optimal_K(t.n);
  t.exact = (*table)[static_cast<std::size_t>(sp.target)];
  t.rows = sweep_map(
      std::size(kTableMethods),
      [&](std::size_t i) { return late_coeff_approx(sp.target, kTableMethods[i], t.K, *table, prec); }, exec);
  return t;
}

int table_value_digits(TableId which) { return spec_of(which).value_digits; }

int table_error_digits(TableId which, LateMethod m) {
  const TableSpec sp = spec_of(which);
  switch (m) {
    case LateMethod::dingle: return sp.err_dingle;
    case LateMethod::xi_new: return sp.err_xi;
    default: return sp.err_boyd;
  }
}

std::string render_table_text(const TableReproduction& t) {
  const int vd = table_value_digits(t.which);
  const std::string g = "gamma_" + std::to_string(t.target_index);
  const Bits bits = 4 * static_cast<Bits>(vd) + 64;
  std::vector<std::pair<std::string, std::string>> lines;
  lines.emplace_back("values of n and K", "n=" + std::to_string(t.n) + ", K=" + std::to_string(t.K));
  lines.emplace_back("exact numerical value of " + g, normalized(Real(t.exact, bits), vd));
  for (const auto& row : t.rows) {
    std::string label;
    switch (row.method) {
      case LateMethod::dingle: label = "Dingle's approximation to " + g; break;
      case LateMethod::boyd_gamma: label = "Boyd's approximation (gamma weight) to " + g; break;
      case LateMethod::boyd_zeta: label = "Boyd's approximation (zeta weight) to " + g; break;
      case LateMethod::boyd_improved: label = "Boyd's improved approximation to " + g; break;
      case LateMethod::xi_new: label = "xi-weighted approximation to " + g; break;
    }
    lines.emplace_back(label, normalized(row.value.value, vd));
    lines.emplace_back("error", normalized(row.error, table_error_digits(t.which, row.method)));
  }
  std::size_t width = 0;
  for (const auto& l : lines) width = std::max(width, l.first.size());
  std::ostringstream os;
  os << "Approximations for " << g << ", using optimal truncation\n";
  for (const auto& [label, value] : lines) os << std::left << std::setw(static_cast<int>(width) + 2) << label << value << '\n';
  return os.str();
}

std::string render_table_csv(const TableReproduction& t, int digits) {
  std::ostringstream os;
  os << "target_index,n,parity,method,K,value,exact,error\n";
  const Bits bits = 4 * static_cast<Bits>(digits) + 64;
  const std::string parity(parity_name(t.target_index % 2 ? Parity::odd : Parity::even));
  os << t.target_index << ',' << t.n << ',' << parity << ",exact," << t.K << ','
     << Real(t.exact, bits).to_sci(digits) << ',' << Real(t.exact, bits).to_sci(digits) << ",0\n";
  for (const auto& r : t.rows)
    os << r.target_index << ',' << r.n << ',' << parity_name(r.parity) << ',' << method_name(r.method) << ',' << r.K
       << ',' << r.value.value.to_sci(digits) << ',' << Real(r.exact, bits).to_sci(digits) << ','
       << r.error.to_sci(digits) << '\n';
  return os.str();
}

}  // namespace gammahyper
