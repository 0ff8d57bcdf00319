#pragma once

#include "gammahyper/series_bounds.hpp"
#include "gammahyper/sweep.hpp"
#include "gammahyper/terminant.hpp"

#include <vector>

namespace gammahyper {

/// Strip past |arg z| = pi/2 reachable with continued terminants.
inline constexpr double kHyperStrip = 0.6;

struct HyperExpansion {
  SectorPoint z;
  long N = 0;
  long M = 0;
  SeriesKind kind = SeriesKind::gamma;
  /// e^{2 pi i z} sum_{m<M} s_m gamma_m z^{-m} T_{N-m}(2 pi i z), s_m = (-1)^m or 1
  BigComplex terminant_sum_up;
  /// e^{-2 pi i z} sum_{m<M} s_m gamma_m z^{-m} T_{N-m}(-2 pi i z)
  BigComplex terminant_sum_down;
  BigComplex R_N;
  /// gamma:      R_N - up + down
  /// reciprocal: R_N + up - down
  BigComplex R_NM;
};

/// 2 pi i z and -2 pi i z with their arguments theta +- pi/2.
SectorPoint stokes_variable(const SectorPoint& z, int sign);

/// Precision that resolves terms of size e^{-2 pi |z|} |z|^{-M} at prec.bits.
Precision hyper_precision(const SectorPoint& z, long M, const Precision& prec);

HyperExpansion improved_expansion(const SectorPoint& z, long N, long M, SeriesKind kind, const Precision& prec);

/// (6M+2) zeta(M) Gamma(M) Gamma(N-M) / ((2 pi)^{N+2} |z|^N)
///   + (2 sqrt M + 1) zeta(M) Gamma(M) / ((2 pi)^{M+1} |z|^M)
///     * (|e^{2 pi i z} T_{N-M}(2 pi i z)| + |e^{-2 pi i z} T_{N-M}(-2 pi i z)|)
Real bound_theorem5(const SectorPoint& z, long N, long M, const Precision& prec);

enum class StokesKind { log, gamma, reciprocal };
std::optional<StokesKind> parse_stokes_kind(std::string_view s);

/// Multiplier of e^{+-2 pi i k z} for |theta| < pi.
ExactRational stokes_multiplier(StokesKind kind, long k, const Real& theta);

struct StokesProfileRow {
  Real theta;
  Complex effective_multiplier;
  Real erf_prediction;
  Real residual;
};

/// N = round(2 pi modulus). For theta in [pi/2 - 0.6, pi/2 + 0.6]
///   eff = (R_N + s down_M) / (e^{2 pi i z} sum_{m<M} s_m gamma_m z^{-m})
/// with s = 1 (gamma) or -1 (reciprocal); the mirrored strip around -pi/2
/// uses eff = (R_N - s up_M) / (e^{-2 pi i z} sum ...), so that rows at conj z
/// are the conjugates of rows at z.
/// erf_prediction is +-(1/2 + erf((|theta| - pi/2) sqrt(pi |z|))/2), negative
/// for the reciprocal kind. Rows are independent and computed in parallel.
std::vector<StokesProfileRow> stokes_profile(SeriesKind kind, const Real& modulus,
                                             const std::vector<Real>& theta_grid, long M,
                                             const Precision& prec, Exec exec = Exec::parallel);
StokesProfileRow stokes_profile_row(SeriesKind kind, const Real& modulus, const Real& theta, long M,
                                    const Precision& prec);
/// Evenly spaced grid over the strip around +pi/2 (sign > 0) or -pi/2.
std::vector<Real> stokes_grid(int sign, std::size_t points, Bits prec);

}  // namespace gammahyper
