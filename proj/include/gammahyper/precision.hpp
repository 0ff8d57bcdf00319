#pragma once

#include "gammahyper/real.hpp"

#include <stdexcept>
#include <string>

namespace gammahyper {

/// Thrown when an argument violates a mathematical precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an adaptive routine cannot reach its target within its caps.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Precision {
  Bits bits = 256;
  Bits guard = 32;

  Precision() = default;
  Precision(Bits b, Bits g = 32) : bits(b), guard(g) {
    if (bits < 64) throw DomainError("precision bits must be >= 64, got " + std::to_string(bits));
    if (guard < 32) throw DomainError("guard bits must be >= 32, got " + std::to_string(guard));
  }

  /// Mantissa width for intermediate arithmetic.
  Bits working() const { return bits + guard; }
  /// Target absolute/relative accuracy 2^-bits, at bound precision.
  Real target() const { return exp2i(-static_cast<long>(bits), kBoundBits); }
  Precision raised(Bits extra) const { return Precision(bits + extra, guard); }
};

}  // namespace gammahyper
