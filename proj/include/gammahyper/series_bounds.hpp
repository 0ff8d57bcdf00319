#pragma once

#include "gammahyper/gamma_engine.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace gammahyper {

/// gamma: sum (-1)^n gamma_n / z^n for Gamma*; reciprocal: sum gamma_n / z^n for 1/Gamma*.
enum class SeriesKind { gamma, reciprocal };

std::string_view kind_name(SeriesKind k);
std::optional<SeriesKind> parse_kind(std::string_view s);

/// Open interval (low, high) containing the signed remainder.
struct Enclosure {
  Real low;
  Real high;
  /// Bound on |remainder| implied by the enclosure (the "max form").
  Real abs_bound;
  bool contains(const Real& x) const { return low < x && x < high; }
};

struct ThetaFactors {
  Real theorem2;  ///< 1 or |csc 2 theta|; zero when the sector excludes it
  Real theorem3;  ///< (2 sqrt N + 1)/2
  Real boyd;      ///< (min(sec theta, 2 sqrt N) + 1)/2
};

struct RemainderReport {
  SectorPoint z;
  long N = 0;
  SeriesKind kind = SeriesKind::gamma;
  Complex partial;
  BigComplex true_remainder;
  std::map<std::string, Real> bounds;
  std::optional<Enclosure> enclosure;
  ThetaFactors theta_factors;
};

/// sum_{n<N} (+-1)^n gamma_n / z^n. Throws DomainError if N < 1 or the table is too short.
BigComplex partial_sum(const SectorPoint& z, long N, SeriesKind kind, const StirlingTable& table,
                       const Precision& prec);

/// Gamma*(z) (or 1/Gamma*(z)) minus the partial sum, with working precision
/// doubled until the certification slack is below 1e-6 of the remainder.
/// Throws PrecisionError beyond 8192 bits.
BigComplex true_remainder(const SectorPoint& z, long N, SeriesKind kind, const Precision& prec);

/// Two-sided enclosure for z > 0.
Enclosure bound_theorem1(const Real& z, long N, SeriesKind kind, const StirlingTable& table,
                         const Precision& prec);

/// (|gamma_N|/|z|^N + |gamma_{N+1}|/|z|^{N+1}) times the sector factor, |theta| < pi/2.
Real bound_theorem2(const SectorPoint& z, long N, const Precision& prec);
/// (1 + zeta(N)) Gamma(N) / ((2 pi)^{N+1} |z|^N) (2 sqrt N + 1)/2, N >= 2, |theta| <= pi/2.
Real bound_theorem3(const SectorPoint& z, long N, const Precision& prec);
/// Same prefactor with (min(sec theta, 2 sqrt N) + 1)/2; zeta(1) read as 3.
Real bound_boyd(const SectorPoint& z, long N, const Precision& prec);

/// Partial sum, true remainder, and every bound that applies at (z, N).
RemainderReport remainder_report(const SectorPoint& z, long N, SeriesKind kind, const Precision& prec);

}  // namespace gammahyper
