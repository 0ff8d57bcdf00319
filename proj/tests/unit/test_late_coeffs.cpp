#include "../oracles.hpp"

#include "gammahyper/gamma_engine.hpp"
#include "gammahyper/late_coeffs.hpp"

#include <doctest.h>

#include <cmath>

using namespace gammahyper;
using Q = ExactRational;

namespace {
const Precision P(256);
const Bits W = P.working();
}  // namespace

TEST_SUITE("late_coeffs") {
  TEST_CASE("xi coefficients") {
    auto c = xi_coefficients(5);
    REQUIRE(c.size() == 5);
    CHECK(c[0] == Q(1));
    CHECK(c[1] == Q(1, 2));
    CHECK(c[2] == Q(3, 8));
    CHECK(c[3] == Q(5, 16));
    CHECK(c[4] == Q(35, 128));
  }

  TEST_CASE("xi values") {
    BigReal x200 = xi(Real(200L, W), P);
    Real d = x200.value - 1L;
    CHECK(d > 0.0);
    CHECK(d < exp2i(-199, W));
    // xi(r) - 1 ~ 2^{-r-1} for large r
    CHECK(abs(d / exp2i(-201, W) - 1L) < 1e-3);
    Precision p100(100);
    BigReal a = xi(Real(3L, W), p100), b = xi_integral(Real(3L, W), p100);
    CHECK(abs(a.value - b.value) < 1e-28);
    CHECK(abs(a.value - b.value) <= a.error_bound + b.error_bound);
    // xi(1) = 2 via the integral
    BigReal one = xi_integral(Real(1L, W), p100);
    CHECK(abs(one.value - 2L) < 1e-28);
    CHECK_THROWS_AS(xi(Real(0.5, W), P), DomainError);
  }

  TEST_CASE("xi(5) series against the integral") {
    Precision p100(100);
    BigReal a = xi(Real(5L, W), p100), b = xi_integral(Real(5L, W), p100);
    CHECK(abs(a.value - b.value) < 1e-30);
  }

  TEST_CASE("optimal K") {
    CHECK(optimal_K(51) == 26);
    CHECK(optimal_K(50) == 25);
    CHECK(optimal_K(1) == 1);
    CHECK_THROWS_AS(optimal_K(0), DomainError);
  }

  TEST_CASE("one-term approximations") {
    // K = 1: gamma_{2n-1} ~ (-1)^n 2 Gamma(2n-1) w_0 / (2 pi)^{2n}
    auto t = stirling_exact(30);
    for (auto m : {LateMethod::dingle, LateMethod::boyd_gamma, LateMethod::boyd_zeta, LateMethod::xi_new,
                   LateMethod::boyd_improved}) {
      LateCoeffApproximation a = late_coeff_approx(21, m, 1, *t, P);
      CHECK(a.n == 11);
      CHECK(a.parity == Parity::odd);
      Real g = Real(2L, W) * gamma(Real(21L, W)) / pow(const_pi(W) * 2, 22L);
      g = -g;
      Real w(1L, W);
      if (m == LateMethod::dingle) w = oracle::zeta(22, W);
      if (m == LateMethod::boyd_zeta) w = oracle::zeta(21, W);
      if (m == LateMethod::xi_new) w = xi(Real(21L, W), P).value;
      if (m == LateMethod::boyd_improved) w += exp2i(-22, W);
      CHECK(abs(a.value.value - g * w) / abs(g) < 1e-60);
      CHECK(abs(a.error - (Real(a.exact, W) - a.value.value)) / abs(g) < 1e-60);
    }
  }

  TEST_CASE("tables") {
    const Precision tp(512);
    TableReproduction t1 = reproduce_table(TableId::table1, tp);
    CHECK(t1.target_index == 101);
    CHECK(t1.n == 51);
    CHECK(t1.K == 26);
    CHECK(t1.exact == oracle::stirling(101)[101]);
    REQUIRE(t1.rows.size() == 4);
    CHECK(oracle::normalized(Real(t1.exact, 600), 39) == "-0.718920823005286472090671337669485196245 x 10^77");
    CHECK(oracle::normalized(t1.rows[0].error, 3) == "0.127 x 10^41");
    CHECK(oracle::normalized(t1.rows[1].error, 9) == "-0.141776108 x 10^47");
    CHECK(oracle::normalized(t1.rows[2].error, 9) == "0.141776362 x 10^47");
    CHECK(oracle::normalized(t1.rows[3].error, 3) == "0.127 x 10^41");

    TableReproduction t2 = reproduce_table(TableId::table2, tp);
    CHECK(t2.n == 50);
    CHECK(t2.K == 25);
    CHECK(oracle::normalized(Real(t2.exact, 600), 36) == "-0.238939789661593595677447537129753012 x 10^74");
    CHECK(oracle::normalized(t2.rows[0].error, 3) == "0.163 x 10^41");
    CHECK(oracle::normalized(t2.rows[1].error, 6) == "-0.188403 x 10^44");
    CHECK(oracle::normalized(t2.rows[2].error, 6) == "0.188729 x 10^44");
    CHECK(oracle::normalized(t2.rows[3].error, 3) == "0.163 x 10^41");

    // the zeta-weighted and xi-weighted forms beat both Boyd variants
    for (const auto* t : {&t1, &t2}) {
      CHECK(abs(t->rows[0].error) < abs(t->rows[1].error));
      CHECK(abs(t->rows[3].error) < abs(t->rows[2].error));
    }
    std::string csv = render_table_csv(t1, 20);
    CHECK(csv.rfind("target_index,n,parity,method,K,value,exact,error\n", 0) == 0);
    CHECK(table_value_digits(TableId::table2) == 36);
    CHECK(table_error_digits(TableId::table1, LateMethod::boyd_zeta) == 9);
  }

  TEST_CASE("resurgence integral") {
    const Precision qp(160);
    auto t = oracle::stirling(12);
    for (long idx : {3, 4, 7, 12}) {
      BigReal q = resurgence_quadrature(idx, qp);
      Real want(t[static_cast<std::size_t>(idx)], qp.working());
      CHECK(abs(q.value - want) / abs(want) < 1e-35);
    }
    CHECK_THROWS_AS(resurgence_quadrature(0, qp), DomainError);
  }

  TEST_CASE("argument checks") {
    auto t = std::make_shared<StirlingTable>(stirling(20, StirlingMethod::wrench));
    CHECK_THROWS_AS(late_coeff_approx(0, LateMethod::dingle, 1, *t, P), DomainError);
    CHECK_THROWS_AS(late_coeff_approx(21, LateMethod::dingle, 11, *t, P), DomainError);
    CHECK_THROWS_AS(late_coeff_approx(41, LateMethod::dingle, 3, *t, P), DomainError);
    CHECK(parse_late_method("xi_new") == LateMethod::xi_new);
    CHECK_FALSE(parse_late_method("nope").has_value());
  }
}
