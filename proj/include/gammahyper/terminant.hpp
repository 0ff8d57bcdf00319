#pragma once

#include "gammahyper/gamma_engine.hpp"
#include "gammahyper/quadrature.hpp"

#include <string_view>

namespace gammahyper {

enum class BranchNote { principal, residue_continued };
std::string_view branch_name(BranchNote b);

struct TerminantValue {
  BigComplex value;
  Real est_error{kBoundBits};
  BranchNote branch_note = BranchNote::principal;
};

/// Width of the strip past |arg w| = pi reached by continuation.
inline constexpr double kContinuationStrip = 0.7;

/// T_p(w) = e^{pi i p} Gamma(p) Gamma(1-p, w) / (2 pi i), scaled terminant.
/// `w.theta` selects the sheet. For pi <= |theta| < pi + 0.7 the value is
/// obtained from the principal one at w e^{-+2 pi i} plus the residue of the
/// pole at t = -w:
///   T_p(w e^{2 pi i}) = e^{-2 pi i p} T_p(w) + 1
///   T_p(w e^{-2 pi i}) = e^{2 pi i p} (T_p(w) - 1)
/// With `cross_check`, the defining integral is also evaluated by quadrature
/// and est_error widened to cover the discrepancy.
TerminantValue terminant(const Real& p, const SectorPoint& w, const Precision& prec,
                         bool cross_check = false);

/// Gamma(1-p, w) route on the sheet given by w.theta, no connection formula.
BigComplex terminant_gamma_route(const Real& p, const SectorPoint& w, const Precision& prec);

/// Quadrature of the defining integral along the ray arg t = alpha, split at
/// |t| = |w|. Valid while the pole t = -w stays off the ray, i.e.
/// alpha - pi < theta < alpha + pi. With alpha = nullopt a ray is chosen
/// that keeps the pole at least 0.5 rad away.
QuadResult<Complex> terminant_quadrature(const Real& p, const SectorPoint& w, const Precision& prec,
                                         std::optional<Real> alpha = std::nullopt);

/// Root of c^2/2 = 1 + i(phi - pi) - e^{i(phi - pi)} with
/// c = (phi - pi) + i(phi - pi)^2/6 - (phi - pi)^3/36 - i(phi - pi)^4/270 + ...
/// near phi = pi. |phi - pi| < pi. Throws PrecisionError if Newton lands on
/// the other root.
BigComplex c_of_phi(const Real& phi, const Precision& prec);
/// The quartic truncation used as the Newton seed.
Complex c_of_phi_seed(const Real& phi, Bits wp);

enum class ErfSide { upper, lower };

/// upper: 1/2 + erf(c(phi) sqrt(|w|/2))/2,     0 < phi < 2 pi
/// lower: -1/2 + erf(-conj c(-phi) sqrt(|w|/2))/2, -2 pi < phi < 0
/// where phi = w.theta. The lower form models e^{-2 pi i p} T_p(w); p only
/// enters through that factor and is not used here.
BigComplex terminant_erf_model(const Real& p, const SectorPoint& w, ErfSide side, const Precision& prec);

}  // namespace gammahyper
