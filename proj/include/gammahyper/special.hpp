#pragma once

#include "gammahyper/certified.hpp"
#include "gammahyper/precision.hpp"

namespace gammahyper {

/// Riemann zeta at an integer m >= 2. Throws DomainError for m <= 1.
BigReal zeta_int(long m, const Precision& prec);

/// erf of a complex argument. Taylor series with a precision boost for
/// |w| <= 40; Laplace continued fraction beyond that when |arg(+-w)| <= pi/4.
BigComplex erf_cx(const Complex& w, const Precision& prec);

/// Upper incomplete gamma Gamma(a, w) on the principal branch, |arg w| <= pi
/// (arg pi taken from above).
BigComplex upper_gamma_cx(const Real& a, const Complex& w, const Precision& prec);
/// Same, with log w = log|w| + i*theta on the sheet selected by theta.
BigComplex upper_gamma_cx(const Real& a, const Complex& w, const Real& theta,
                          const Precision& prec);

/// Exponential integral E_1(w) = Gamma(0, w), principal branch.
BigComplex expint_e1(const Complex& w, const Precision& prec);

}  // namespace gammahyper
