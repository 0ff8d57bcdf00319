#pragma once

#include "gammahyper/complex.hpp"
#include "gammahyper/real.hpp"

namespace gammahyper {

/// A value with an inclusive bound on |computed - true|.
struct BigReal {
  Real value;
  Real error_bound{kBoundBits};
};

struct BigComplex {
  Complex value;
  Real error_bound{kBoundBits};
};

/// Unit-roundoff for a mantissa of `bits` bits, at bound precision.
inline Real ulp_rel(Bits bits) { return exp2i(1 - static_cast<long>(bits), kBoundBits); }

/// Upward-rounded |x| at bound precision.
inline Real mag(const Real& x) { return bound_up(x); }
inline Real mag(const Complex& z) { return bound_up(abs(z)); }

}  // namespace gammahyper
