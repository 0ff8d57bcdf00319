#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gammahyper {

/// Reduced fraction with positive denominator; 0 is 0/1.
using ExactRational = mpq_class;

/// Builds num/den in canonical form. Throws DomainError on a zero denominator.
ExactRational make_rational(const mpz_class& num, const mpz_class& den);
bool is_canonical(const ExactRational& q);

/// B_0..B_kmax with B_1 = -1/2.
struct BernoulliTable {
  std::vector<ExactRational> entries;

  std::size_t size() const { return entries.size(); }
  const ExactRational& operator[](std::size_t k) const { return entries.at(k); }
};

/// Tangent-number algorithm; integer arithmetic only.
BernoulliTable bernoulli_numbers(std::size_t kmax);
/// Direct use of sum_{k=0}^{n} C(n+1,k) B_k = 0. Quadratic in rationals; kept
/// as a check for the fast path.
BernoulliTable bernoulli_by_recurrence(std::size_t kmax);

/// Process-wide, lazily extended table of even Bernoulli numbers. Returns an
/// immutable snapshot holding at least B_0..B_kmax.
std::shared_ptr<const BernoulliTable> shared_bernoulli(std::size_t kmax);

enum class StirlingMethod { brassesco, wrench, logderiv, bessel_poly };

std::string_view method_name(StirlingMethod m);
std::optional<StirlingMethod> parse_method(std::string_view name);

struct StirlingTable {
  std::vector<ExactRational> entries;  // gamma_0..gamma_nmax
  StirlingMethod method = StirlingMethod::wrench;

  std::size_t size() const { return entries.size(); }
  /// Largest housed index.
  std::size_t nmax() const { return entries.empty() ? 0 : entries.size() - 1; }
  const ExactRational& operator[](std::size_t n) const { return entries.at(n); }
  bool operator==(const StirlingTable& o) const { return entries == o.entries; }
};

/// Dense polynomial, ascending powers. The zero polynomial has no coefficients.
class PolynomialRational {
 public:
  PolynomialRational() = default;
  explicit PolynomialRational(std::vector<ExactRational> coeffs);

  const std::vector<ExactRational>& coefficients() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  ExactRational operator()(const ExactRational& x) const;
  PolynomialRational derivative() const;
  /// Antiderivative vanishing at 0.
  PolynomialRational integral() const;

  friend PolynomialRational operator+(const PolynomialRational& a, const PolynomialRational& b);
  friend PolynomialRational operator*(const PolynomialRational& a, const PolynomialRational& b);
  friend PolynomialRational operator*(const ExactRational& s, const PolynomialRational& p);
  bool operator==(const PolynomialRational& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<ExactRational> c_;
};

/// b_1..b_{2 nmax + 1} of the Lagrange-inversion sequence, from the symmetric
/// (Copson) form of the recurrence. Index 0 and 2 hold zero and are never read.
std::vector<ExactRational> brassesco_b_sequence(std::size_t nmax);
/// The same sequence from the weighted form with (k+1)/(n+1) factors.
/// `b2` seeds the unused entry, so callers can confirm it never matters.
std::vector<ExactRational> brassesco_b_sequence_weighted(std::size_t nmax,
                                                         const ExactRational& b2 = 0);

StirlingTable stirling_brassesco(std::size_t nmax);
StirlingTable stirling_wrench(std::size_t nmax);
StirlingTable stirling_logderiv(std::size_t nmax);
StirlingTable stirling_bessel(std::size_t nmax);
StirlingTable stirling(std::size_t nmax, StirlingMethod method);

/// U_0..U_nmax.
std::vector<PolynomialRational> bessel_polynomials(std::size_t nmax);

/// sum_{k=0}^{n} (-1)^k gamma_k gamma_{n-k}. Throws std::out_of_range if n > nmax.
ExactRational convolution_residual(const StirlingTable& table, std::size_t n);

/// (-1)^N gamma_{2N-1} >= 0 and (-1)^{N+1} gamma_{2N} >= 0 for every housed index.
/// Returns the first index that breaks the pattern.
std::optional<std::size_t> sign_pattern_violation(const StirlingTable& table);

}  // namespace gammahyper
