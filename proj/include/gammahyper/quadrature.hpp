#pragma once

#include "gammahyper/complex.hpp"
#include "gammahyper/precision.hpp"

#include <cmath>
#include <vector>

namespace gammahyper {

template <class T>
struct QuadResult {
  T value;
  Real error_estimate{kBoundBits};
  int levels = 0;
  long evaluations = 0;
};

namespace quad_detail {

inline Real magnitude(const Real& x) { return abs(x); }
inline Real magnitude(const Complex& z) { return abs(z); }
inline Real zero_like(const Real&, Bits wp) { return Real(wp); }
inline Complex zero_like(const Complex&, Bits wp) { return Complex(wp); }

/// Node (abscissa, weight) generator shared by both rules. `map(t)` returns
/// {x, dx/dt}; the sum h * sum f(x) dx/dt is refined by halving h.
template <class T, class F, class Map>
QuadResult<T> de_rule(F&& f, Map&& map, Bits wp, const Real& rel_tol, int max_level) {
  const Real eps = exp2i(-static_cast<long>(wp) - 4, kBoundBits);
  QuadResult<T> r;
  auto term = [&](const Real& t) {
    auto [x, dx] = map(t);
    ++r.evaluations;
    if (dx.is_zero() || !dx.is_finite()) return T(zero_like(T(wp), wp));
    T v = f(x);
    return T(v * dx);
  };

  // Level 0: scan outward from t = 0 until contributions are negligible.
  T sum = term(Real(wp));
  Real h(1L, wp);
  long jlo = 0, jhi = 0;
  for (int side : {1, -1}) {
    int quiet = 0;
    for (long j = 1; j < 64; ++j) {
      T v = term(Real(side * j, wp));
      sum += v;
      Real scale = max(magnitude(sum), Real(1e-300, kBoundBits));
      if (magnitude(v) <= eps * scale) {
        if (++quiet >= 2) {
          (side > 0 ? jhi : jlo) = j;
          break;
        }
      } else {
        quiet = 0;
      }
      (side > 0 ? jhi : jlo) = j;
    }
  }
  T prev = sum * h;
  Real prev_diff(kBoundBits);
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    const long m = 1L << level;
    for (long j = -jlo * m + 1; j < jhi * m; j += 2) sum += term(Real(j, wp) * h);
    T cur = sum * h;
    Real diff = magnitude(cur - prev);
    r.value = cur;
    r.levels = level;
    // quadratic convergence: the next difference is about diff^2 / prev_diff
    Real est = diff;
    if (level >= 2 && !prev_diff.is_zero() && diff < prev_diff) {
      Real q = diff * diff / prev_diff;
      est = max(q, eps * magnitude(cur)) * 4;
    }
    r.error_estimate = bound_up(est);
    Real scale = max(magnitude(cur), Real(1e-300, kBoundBits));
    if (level >= 3 && diff <= rel_tol * scale) return r;
    prev = cur;
    prev_diff = diff;
  }
  return r;
}

}  // namespace quad_detail

/// Tanh-sinh rule on [a, b]. `f` receives abscissae accurate near either end.
template <class T, class F>
QuadResult<T> tanh_sinh(F&& f, const Real& a, const Real& b, Bits wp, const Real& rel_tol,
                        int max_level = 10) {
  Real half(Real(b - a, wp) / 2);
  Real a_(a, wp), b_(b, wp);
  const Real halfpi = const_pi(wp) / 2;
  auto map = [&](const Real& t) {
    Real u = halfpi * sinh(t);
    Real au = abs(u);
    Real e2 = exp(-(au * 2));
    // distance to the nearer end: (b - a) e^{-2|u|} / (1 + e^{-2|u|})
    Real d = half * 2 * e2 / (e2 + 1L);
    Real x = u.sign() >= 0 ? b_ - d : a_ + d;
    // dx/dt = half * halfpi cosh t sech^2 u = half * halfpi cosh t 4 e2 / (1+e2)^2
    Real dx = half * halfpi * cosh(t) * e2 * 4 / ((e2 + 1L) * (e2 + 1L));
    return std::pair<Real, Real>(std::move(x), std::move(dx));
  };
  return quad_detail::de_rule<T>(f, map, wp, rel_tol, max_level);
}

/// Exp-sinh rule on [a, infinity).
template <class T, class F>
QuadResult<T> exp_sinh(F&& f, const Real& a, Bits wp, const Real& rel_tol, int max_level = 10) {
  Real a_(a, wp);
  const Real halfpi = const_pi(wp) / 2;
  auto map = [&](const Real& t) {
    Real u = halfpi * sinh(t);
    Real e = exp(u);
    Real x = a_ + e;
    Real dx = halfpi * cosh(t) * e;
    return std::pair<Real, Real>(std::move(x), std::move(dx));
  };
  return quad_detail::de_rule<T>(f, map, wp, rel_tol, max_level);
}

}  // namespace gammahyper
