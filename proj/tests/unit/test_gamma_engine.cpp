#include "../oracles.hpp"

#include "gammahyper/gamma_engine.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gammahyper;

namespace {
const Precision P(256);
const Bits W = P.working();
Real tol(long e) { return exp2i(e, kBoundBits); }
SectorPoint real_pt(double x) { return SectorPoint::polar(Real(x, W), Real(W)); }
double unit(std::mt19937_64& r) { return static_cast<double>(r() >> 11) * 0x1.0p-53; }
}  // namespace

TEST_SUITE("gamma_engine") {
  TEST_CASE("gamma star closed forms") {
    BigComplex g = gamma_star(real_pt(1), P);
    Real want = exp(Real(1L, W)) / sqrt(const_pi(W) * 2);
    CHECK(abs(g.value.re - want) <= g.error_bound + tol(-280));
    CHECK(g.value.re.to_sci(17) == "1.0844375514192275e+00");
    BigComplex big = gamma_star(real_pt(1e6), P);
    CHECK(abs(big.value.re - 1L) < 1e-7);
    for (double x : {0.5, 2.0, 7.25, 33.0, 1e4}) {
      BigComplex v = gamma_star(real_pt(x), P);
      CHECK(abs(v.value.re - oracle::gamma_star_real(Real(x, W), W)) <= v.error_bound + tol(-270));
    }
  }

  TEST_CASE("stieltjes oracle agreement") {
    BigComplex a = gamma_star(real_pt(10), P);
    BigComplex b = gamma_star_stieltjes(real_pt(10), P);
    CHECK(abs(a.value - b.value) / abs(a.value) < 1e-40);
    BigComplex s1 = gamma_star_stieltjes(real_pt(1), P);
    CHECK(abs(s1.value.re - exp(Real(1L, W)) / sqrt(const_pi(W) * 2)) < 1e-30);
    CHECK(stieltjes_q(Real(0.5, W)).to_double() == 0.125);
    CHECK(stieltjes_q(Real(3L, W)).is_zero());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      double r = std::pow(100.0, unit(rng));
      double th = (2 * unit(rng) - 1) * (M_PI / 2 - 0.05);
      SectorPoint z = SectorPoint::polar(Real(r, W), Real(th, W));
      BigComplex x = gamma_star(z, P);
      BigComplex y = gamma_star_stieltjes(z, P);
      CHECK(abs(x.value - y.value) <= x.error_bound + y.error_bound);
    }
  }

  TEST_CASE("conjugation symmetry") {
    for (auto zz : {Complex(3.0, 4.0, W), Complex(0.4, 9.0, W), Complex(-6.0, 2.0, W)}) {
      BigComplex a = gamma_star(SectorPoint::from_z(zz), P);
      BigComplex b = gamma_star(SectorPoint::from_z(conj(zz)), P);
      CHECK(abs(a.value - conj(b.value)) <= a.error_bound + b.error_bound);
    }
  }

  TEST_CASE("lemma conditions on the imaginary axis") {
    const Real hp = const_pi(W) / 2;
    BigComplex g = gamma_star_stieltjes(SectorPoint::polar(Real(0.3, W), hp), P);
    CHECK(g.value.re >= 0.0);
    CHECK(-g.value.im >= 0.0);
    for (int i = 1; i <= 100; ++i) {
      BigComplex v = gamma_star(SectorPoint::polar(Real(20L, W) * i / 100, hp), P);
      CHECK(v.value.re >= -v.error_bound);
      CHECK(-v.value.im >= -v.error_bound);
    }
    for (long y : {1, 2, 5}) {
      BigComplex r = recip_gamma_star(SectorPoint::polar(Real(y, W), hp), P);
      Real want = sqrt(Real(1L, W) - exp(-(const_pi(W) * 2 * y)));
      CHECK(abs(abs(r.value) - want) < 1e-25);
    }
  }

  TEST_CASE("continuation rules") {
    // each rule rebuilds Gamma*(z) from a rotated copy of z; all must agree with the direct value
    for (auto zz : {Complex(3.0, 0.1, W), Complex(3.2, 1.3, W), Complex(0.8, -2.0, W)}) {
      SectorPoint z = SectorPoint::from_z(zz);
      BigComplex d = gamma_star(z, P);
      for (auto rule : {ContinuationRule::reflect_up, ContinuationRule::reflect_down, ContinuationRule::wrap_up,
                        ContinuationRule::wrap_down}) {
        BigComplex c = continue_gamma_star(z, rule, P);
        CHECK(abs(c.value - d.value) <= c.error_bound + d.error_bound);
        CHECK(abs(c.value - d.value) / abs(d.value) < 1e-30);
      }
    }
    // a point one sheet up, by both routes
    SectorPoint up = SectorPoint::polar(Real(4L, W), Real(0.3, W) + const_pi(W) * 2);
    BigComplex a = continue_gamma_star(up, ContinuationRule::wrap_down, P);
    BigComplex b = gamma_star_any(up, P);
    CHECK(abs(a.value - b.value) <= a.error_bound + b.error_bound);
    // refusal near the negative axis, acceptance through gamma_star_any
    SectorPoint near = SectorPoint::polar(Real(5L, W), const_pi(W) - Real(0.05, W));
    CHECK_THROWS_AS(gamma_star(near, P), DomainError);
    BigComplex any = gamma_star_any(near, P);
    BigComplex sh = gamma_star_shifted(near, P);
    CHECK(abs(any.value - sh.value) <= any.error_bound + sh.error_bound + tol(-200));
    CHECK_THROWS_AS(gamma_star(SectorPoint::from_z(Complex(-2.0, 0.0, W)), P), DomainError);
  }

  TEST_CASE("log gamma tail") {
    LogGammaTail t = log_gamma_tail(real_pt(5), 2, P);
    CHECK(abs(t.partial.value.re - Real(1L, W) / 60) < 1e-70);
    LogGammaTail t3 = log_gamma_tail(real_pt(5), 3, P);
    Real lg = log(gamma_star_stieltjes(real_pt(5), P).value.re);
    CHECK(abs(lg - t3.partial.value.re) <= t3.lindelof_bound);
    CHECK(sector_factor(Real(0.3, W)).to_double() == 1.0);
    CHECK(sector_factor(const_pi(W) / 4).to_double() == 1.0);
    CHECK(abs(sector_factor(const_pi(W) * 3 / 8) - sqrt(Real(2L, W))) < 1e-70);
    CHECK_THROWS_AS(log_gamma_tail(real_pt(5), 0, P), DomainError);
  }
}
