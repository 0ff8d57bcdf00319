#include "gammahyper/exact.hpp"

#include "gammahyper/precision.hpp"

#include <mutex>
#include <stdexcept>

namespace gammahyper {

ExactRational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

bool is_canonical(const ExactRational& q) {
  if (q.get_den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

BernoulliTable bernoulli_numbers(std::size_t kmax) {
  BernoulliTable t;
  t.entries.assign(kmax + 1, ExactRational(0));
  t.entries[0] = 1;
  if (kmax >= 1) t.entries[1] = ExactRational(-1, 2);
  std::size_t n = kmax / 2;
  if (n == 0) return t;
  // tangent numbers T_1..T_n
  std::vector<mpz_class> T(n + 1);
  T[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) T[k] = (k - 1) * T[k - 1];
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t j = k; j <= n; ++j) T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j];
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class p4 = mpz_class(1) << static_cast<mp_bitcnt_t>(2 * k);
    mpz_class num = 2 * mpz_class(static_cast<unsigned long>(k)) * T[k];
    if (k % 2 == 0) num = -num;
    t.entries[2 * k] = make_rational(num, p4 * (p4 - 1));
  }
  return t;
}

BernoulliTable bernoulli_by_recurrence(std::size_t kmax) {
  BernoulliTable t;
  t.entries.assign(kmax + 1, ExactRational(0));
  t.entries[0] = 1;
  for (std::size_t n = 1; n <= kmax; ++n) {
    ExactRational s = 0;
    mpz_class binom = 1;  // C(n+1, k)
    for (std::size_t k = 0; k < n; ++k) {
      s += binom * t.entries[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    t.entries[n] = -s / ExactRational(static_cast<unsigned long>(n + 1));
  }
  return t;
}

std::shared_ptr<const BernoulliTable> shared_bernoulli(std::size_t kmax) {
  static std::mutex mu;
  static std::shared_ptr<const BernoulliTable> table;
  std::lock_guard lock(mu);
  if (!table || table->size() <= kmax) {
    std::size_t want = std::max<std::size_t>(kmax, table ? 2 * table->size() : 256);
    table = std::make_shared<const BernoulliTable>(bernoulli_numbers(want));
  }
  return table;
}

std::string_view method_name(StirlingMethod m) {
  switch (m) {
    case StirlingMethod::brassesco: return "brassesco";
    case StirlingMethod::wrench: return "wrench";
    case StirlingMethod::logderiv: return "logderiv";
    case StirlingMethod::bessel_poly: return "bessel_poly";
  }
  return "?";
}

std::optional<StirlingMethod> parse_method(std::string_view name) {
  for (auto m : {StirlingMethod::brassesco, StirlingMethod::wrench, StirlingMethod::logderiv,
                 StirlingMethod::bessel_poly})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

PolynomialRational::PolynomialRational(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void PolynomialRational::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExactRational PolynomialRational::operator()(const ExactRational& x) const {
  ExactRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolynomialRational PolynomialRational::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<ExactRational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return PolynomialRational(std::move(d));
}

PolynomialRational PolynomialRational::integral() const {
  if (c_.empty()) return {};
  std::vector<ExactRational> d(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / static_cast<unsigned long>(k + 1);
  return PolynomialRational(std::move(d));
}

PolynomialRational operator+(const PolynomialRational& a, const PolynomialRational& b) {
  std::vector<ExactRational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return PolynomialRational(std::move(c));
}

PolynomialRational operator*(const PolynomialRational& a, const PolynomialRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactRational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PolynomialRational(std::move(c));
}

PolynomialRational operator*(const ExactRational& s, const PolynomialRational& p) {
  std::vector<ExactRational> c = p.c_;
  for (auto& x : c) x *= s;
  return PolynomialRational(std::move(c));
}

namespace {

std::vector<ExactRational> b_seeds(std::size_t nmax, const ExactRational& b2) {
  std::vector<ExactRational> b(2 * nmax + 2, ExactRational(0));
  b[1] = 1;
  if (b.size() > 2) b[2] = b2;
  if (b.size() > 3) b[3] = ExactRational(1, 36);
  return b;
}

StirlingTable gammas_from_b(const std::vector<ExactRational>& b, std::size_t nmax) {
  StirlingTable t;
  t.method = StirlingMethod::brassesco;
  t.entries.resize(nmax + 1);
  // (2n+1)!/(2^n n!) = 1*3*5*...*(2n+1)
  mpz_class odd_fact = 1;
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (n > 0) odd_fact *= static_cast<unsigned long>(2 * n + 1);
    ExactRational g = ExactRational(odd_fact) * b[2 * n + 1];
    t.entries[n] = (n % 2) ? ExactRational(-g) : g;
  }
  return t;
}

}  // namespace

std::vector<ExactRational> brassesco_b_sequence(std::size_t nmax) {
  std::vector<ExactRational> b = b_seeds(nmax, 0);
  const std::size_t top = 2 * nmax + 1;
  for (std::size_t n = 4; n <= top; ++n) {
    // sum_{k=2}^{n-3} b_{k+1} b_{n-k} is symmetric under k -> n-1-k
    ExactRational s = 0;
    std::size_t lo = 2, hi = n - 3;
    while (lo < hi) {
      s += b[lo + 1] * b[n - lo];
      ++lo;
      --hi;
    }
    s *= 2;
    if (lo == hi) s += b[lo + 1] * b[n - lo];
    ExactRational lead(2 - static_cast<long>(n), 3 * static_cast<long>(n) + 3);
    lead.canonicalize();
    b[n] = lead * b[n - 1] - s / 2;
  }
  return b;
}

std::vector<ExactRational> brassesco_b_sequence_weighted(std::size_t nmax,
                                                         const ExactRational& b2) {
  std::vector<ExactRational> b = b_seeds(nmax, b2);
  const std::size_t top = 2 * nmax + 1;
  for (std::size_t n = 4; n <= top; ++n) {
    ExactRational s = 0;
    for (std::size_t k = 2; k + 3 <= n; ++k) s += static_cast<unsigned long>(k + 1) * b[k + 1] * b[n - k];
    ExactRational lead(2 - static_cast<long>(n), 3 * static_cast<long>(n) + 3);
    lead.canonicalize();
    b[n] = lead * b[n - 1] - s / static_cast<unsigned long>(n + 1);
  }
  return b;
}

StirlingTable stirling_brassesco(std::size_t nmax) {
  return gammas_from_b(brassesco_b_sequence(nmax), nmax);
}

StirlingTable stirling_wrench(std::size_t nmax) {
  auto B = shared_bernoulli(nmax + 2);
  std::vector<ExactRational> w(nmax / 2 + 2);  // B_{2k}/(2k)
  for (std::size_t k = 1; k < w.size(); ++k) w[k] = (*B)[2 * k] / static_cast<unsigned long>(2 * k);
  StirlingTable t;
  t.method = StirlingMethod::wrench;
  t.entries.assign(nmax + 1, ExactRational(0));
  t.entries[0] = 1;
  for (std::size_t m = 1; m <= nmax; ++m) {
    std::size_t n = (m + 1) / 2;
    ExactRational s = 0;
    if (m % 2) {
      for (std::size_t k = 1; k <= n; ++k) s += w[k] * t.entries[2 * n - 2 * k];
    } else {
      for (std::size_t k = 1; k <= n; ++k) s += w[k] * t.entries[2 * n - 2 * k + 1];
    }
    t.entries[m] = -s / static_cast<unsigned long>(m);
  }
  return t;
}

StirlingTable stirling_logderiv(std::size_t nmax) {
  auto B = shared_bernoulli(nmax + 2);
  StirlingTable t;
  t.method = StirlingMethod::logderiv;
  t.entries.assign(nmax + 1, ExactRational(0));
  t.entries[0] = 1;
  const auto& g = t.entries;
  for (std::size_t m = 1; m <= nmax; ++m) {
    ExactRational s = 0;
    if (m % 2) {
      // gamma_{2n-1}, m = 2n-1
      for (std::size_t k = 1; k + 1 <= m; ++k) {
        ExactRational term = static_cast<unsigned long>(k) * g[k] * g[m - k];
        if (k % 2) s -= term;
        else s += term;
      }
      ExactRational lead = (*B)[m + 1] / (static_cast<unsigned long>(m + 1) * static_cast<unsigned long>(m));
      t.entries[m] = s / static_cast<unsigned long>(m) - lead;
    } else {
      for (std::size_t k = 1; k + 1 <= m; ++k) {
        ExactRational term = static_cast<unsigned long>(k) * g[k] * g[m - k];
        if (k % 2) s -= term;
        else s += term;
      }
      t.entries[m] = -s / static_cast<unsigned long>(m);
    }
  }
  return t;
}

std::vector<PolynomialRational> bessel_polynomials(std::size_t nmax) {
  std::vector<PolynomialRational> U;
  U.reserve(nmax + 1);
  U.emplace_back(std::vector<ExactRational>{1});
  const PolynomialRational half_x2_1mx2({0, 0, ExactRational(1, 2), 0, ExactRational(-1, 2)});
  const PolynomialRational eighth_1m5t2({ExactRational(1, 8), 0, ExactRational(-5, 8)});
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto& prev = U.back();
    U.push_back(half_x2_1mx2 * prev.derivative() + (eighth_1m5t2 * prev).integral());
  }
  return U;
}

StirlingTable stirling_bessel(std::size_t nmax) {
  StirlingTable t;
  t.method = StirlingMethod::bessel_poly;
  t.entries.reserve(nmax + 1);
  // Evaluate at 1 on the fly; only the current polynomial is kept.
  PolynomialRational u(std::vector<ExactRational>{1});
  const PolynomialRational half_x2_1mx2({0, 0, ExactRational(1, 2), 0, ExactRational(-1, 2)});
  const PolynomialRational eighth_1m5t2({ExactRational(1, 8), 0, ExactRational(-5, 8)});
  t.entries.push_back(1);
  for (std::size_t n = 1; n <= nmax; ++n) {
    u = half_x2_1mx2 * u.derivative() + (eighth_1m5t2 * u).integral();
    ExactRational s = 0;
    for (const auto& c : u.coefficients()) s += c;
    t.entries.push_back(s);
  }
  return t;
}

StirlingTable stirling(std::size_t nmax, StirlingMethod method) {
  switch (method) {
    case StirlingMethod::brassesco: return stirling_brassesco(nmax);
    case StirlingMethod::wrench: return stirling_wrench(nmax);
    case StirlingMethod::logderiv: return stirling_logderiv(nmax);
    case StirlingMethod::bessel_poly: return stirling_bessel(nmax);
  }
  throw DomainError("unknown method");
}

ExactRational convolution_residual(const StirlingTable& table, std::size_t n) {
  if (n >= table.size())
    throw std::out_of_range("convolution index " + std::to_string(n) + " exceeds table nmax " +
                            std::to_string(table.nmax()));
  ExactRational s = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    ExactRational term = table[k] * table[n - k];
    if (k % 2) s -= term;
    else s += term;
  }
  return s;
}

std::optional<std::size_t> sign_pattern_violation(const StirlingTable& table) {
  for (std::size_t m = 1; m < table.size(); ++m) {
    std::size_t N = (m + 1) / 2;
    int want;
    if (m % 2) want = (N % 2) ? -1 : 1;   // (-1)^N gamma_{2N-1} >= 0
    else want = (N % 2) ? 1 : -1;         // (-1)^{N+1} gamma_{2N} >= 0
    int s = sgn(table[m]);
    if (s != 0 && s != want) return m;
  }
  return std::nullopt;
}

}  // namespace gammahyper
