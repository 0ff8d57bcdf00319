#pragma once

#include "gammahyper/certified.hpp"
#include "gammahyper/exact.hpp"
#include "gammahyper/precision.hpp"

#include <memory>
#include <vector>

namespace gammahyper {

/// A point z = modulus * e^{i theta}. Theta is normally the principal
/// argument; values with pi <= |theta| < 3 pi name points on neighbouring
/// sheets and are only accepted by the continuation routines.
struct SectorPoint {
  Complex z;
  Real modulus;
  Real theta;

  /// Principal argument of z, with arg pi for the negative real axis.
  static SectorPoint from_z(const Complex& z);
  static SectorPoint polar(const Real& modulus, const Real& theta);
  /// Rounds the point to a new working precision, keeping theta as given.
  SectorPoint at(Bits prec) const;
  bool is_positive_real() const { return z.im.is_zero() && z.re.sign() > 0; }
};

/// Exact Stirling coefficients shared by every numeric routine. Generated on
/// first use with the Bernoulli recurrence and grown on demand.
std::shared_ptr<const StirlingTable> stirling_exact(std::size_t nmax);
/// Replaces the shared table (for example with one loaded from a cache file).
void install_stirling_table(StirlingTable table);
/// gamma_0..gamma_{count-1} rounded to `prec` bits, cached per precision.
std::shared_ptr<const std::vector<Real>> stirling_reals(std::size_t count, Bits prec);

/// Gamma*(z) for pi - |arg z| >= 0.1. Evaluates the truncated expansion at a
/// shifted point z + m, certifies the truncation with the uniform bound valid
/// on the closed right half-plane, and divides the shift back out.
BigComplex gamma_star(const SectorPoint& z, const Precision& prec);
BigComplex recip_gamma_star(const SectorPoint& z, const Precision& prec);

/// Same algorithm without the safety margin near the negative axis; only the
/// non-positive real axis itself is refused.
BigComplex gamma_star_shifted(const SectorPoint& z, const Precision& prec);

/// Independent oracle: exp of the Stieltjes integral of Q(t)/(z+t)^2,
/// integrated per unit interval in closed form, with an Euler-Maclaurin tail.
BigComplex gamma_star_stieltjes(const SectorPoint& z, const Precision& prec);

/// Q(t) = (frac t - (frac t)^2)/2
Real stieltjes_q(const Real& t);

/// reflect_*: Gamma*(z) = 1/((1 - e^{+-2 pi i z}) Gamma*(z e^{-+pi i}))
/// wrap_*:    Gamma*(z) = -e^{+-2 pi i z} Gamma*(z e^{+-2 pi i})
/// The _up variants take the upper signs.
enum class ContinuationRule { reflect_up, reflect_down, wrap_up, wrap_down };

/// Applies one continuation step. The source point may itself lie off the
/// principal sheet (|theta| < 3 pi), in which case it is continued in turn.
BigComplex continue_gamma_star(const SectorPoint& z, ContinuationRule rule, const Precision& prec);
/// Gamma* anywhere with |theta| < 3 pi, choosing the best-conditioned rule.
BigComplex gamma_star_any(const SectorPoint& z, const Precision& prec);

struct LogGammaTail {
  BigComplex partial;
  Real lindelof_bound{kBoundBits};
};

/// sum_{n=1}^{N-1} B_{2n}/(2n(2n-1) z^{2n-1}) and the bound on the rest of
/// log Gamma*(z) for |arg z| < pi/2.
LogGammaTail log_gamma_tail(const SectorPoint& z, long N, const Precision& prec);

/// 1 for |theta| <= pi/4, |csc 2 theta| for pi/4 < |theta| < pi/2.
Real sector_factor(const Real& theta);

}  // namespace gammahyper
