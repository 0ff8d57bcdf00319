#pragma once

#include "gammahyper/certified.hpp"
#include "gammahyper/exact.hpp"
#include "gammahyper/precision.hpp"
#include "gammahyper/sweep.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gammahyper {

/// xi(r) = sum_{m>=0} (1/2)_m / (m! (m+1)^r), r > 1/2. Summed directly with
/// the tail bounded through (1/2)_m/m! < (pi (m + 1/4))^{-1/2}; when that
/// would take more than `kXiMaxTerms` terms the integral form is used.
BigReal xi(const Real& r, const Precision& prec);
/// (1/Gamma(r)) int_0^inf u^{r-1} e^{-u} (1 - e^{-u})^{-1/2} du by quadrature.
BigReal xi_integral(const Real& r, const Precision& prec);
inline constexpr long kXiMaxTerms = 1L << 23;

/// (1/2)_m / m! for m = 0..count-1.
std::vector<ExactRational> xi_coefficients(std::size_t count);

enum class LateMethod { dingle, boyd_gamma, boyd_zeta, boyd_improved, xi_new };
enum class Parity { odd, even };

std::string_view method_name(LateMethod m);
std::optional<LateMethod> parse_late_method(std::string_view s);
std::string_view parity_name(Parity p);

struct LateCoeffApproximation {
  long target_index = 0;
  long n = 0;
  Parity parity = Parity::odd;
  LateMethod method = LateMethod::dingle;
  long K = 0;
  BigReal value;
  ExactRational exact;
  /// exact - value, the sign convention of the printed tables
  Real error{kBoundBits};
};

/// (-1)^n 2/(2 pi)^{2n} sum_{k<K} (-1)^k g_k (2 pi)^{2k} Gamma(2n-2k-1) w_k
/// with g_k = gamma_{2k} for target 2n-1 and gamma_{2k+1} for target 2n, and
/// w_k = zeta(2n-2k) (dingle), 1 (boyd_gamma), zeta(2n-2k-1) (boyd_zeta),
/// xi(2n-2k-1) (xi_new), 1 + 2^{-2n} at k = 0 and 1 after (boyd_improved).
/// Requires 1 <= K < n.
LateCoeffApproximation late_coeff_approx(long target_index, LateMethod method, long K, const StirlingTable& table,
                                         const Precision& prec);

/// ceil(n/2)
long optimal_K(long n);

/// gamma_t from int_0^inf s^{2N-2} e^{-2 pi s} Re Gamma*(i s) ds / pi (t = 2N-1)
/// or the Im companion (t = 2N), with Gamma*(i s) from the shifted evaluator.
BigReal resurgence_quadrature(long target_index, const Precision& prec);

enum class TableId { table1, table2 };

struct TableReproduction {
  TableId which = TableId::table1;
  long target_index = 0;
  long n = 0;
  long K = 0;
  ExactRational exact;
  /// dingle, boyd_gamma, boyd_zeta, xi_new at K = optimal_K(n)
  std::vector<LateCoeffApproximation> rows;
};

TableReproduction reproduce_table(TableId which, const Precision& prec, Exec exec = Exec::parallel);

/// Aligned text with the published digit counts.
std::string render_table_text(const TableReproduction& t);
/// One row per method plus the exact row; values to `digits` significant digits.
std::string render_table_csv(const TableReproduction& t, int digits = 45);

/// Significant digits printed for values and for each method's error.
int table_value_digits(TableId which);
int table_error_digits(TableId which, LateMethod m);

}  // namespace gammahyper
