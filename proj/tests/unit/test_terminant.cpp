#include "../oracles.hpp"

#include "gammahyper/terminant.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gammahyper;

namespace {
const Precision P(256);
const Bits W = P.working();
double unit(std::mt19937_64& r) { return static_cast<double>(r() >> 11) * 0x1.0p-53; }
Complex cx(const SectorPoint& w) { return Complex(w.z, W); }
}  // namespace

TEST_SUITE("terminant") {
  TEST_CASE("T_1(1)") {
    TerminantValue t = terminant(Real(1L, W), SectorPoint::polar(Real(1L, W), Real(W)), P);
    CHECK(abs(t.value.value.re) < 1e-70);
    CHECK(abs(t.value.value.im - Real(0.0349160, W)) < 1e-7);
    CHECK(t.branch_note == BranchNote::principal);
  }

  TEST_CASE("integer orders against the E_1 closed form") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
      long p = 1 + static_cast<long>(unit(rng) * 12);
      Real r(0.5 + 15 * unit(rng), W);
      Real th((2 * unit(rng) - 1) * (M_PI + 0.6), W);
      SectorPoint w = SectorPoint::polar(r, th);
      TerminantValue t = terminant(Real(p, W), w, P);
      Complex want = oracle::terminant_int(p, cx(w), th, W);
      CHECK(abs(t.value.value - want) <= t.value.error_bound + abs(want) * Real(1e-60, kBoundBits));
    }
  }

  TEST_CASE("conjugation") {
    for (double p : {0.5, 3.3, 17.0})
      for (double th : {0.4, 2.0, 3.3}) {
        SectorPoint w = SectorPoint::polar(Real(9L, W), Real(th, W));
        SectorPoint wb = SectorPoint::polar(Real(9L, W), -Real(th, W));
        Real pr(p, W);
        Complex a = conj(terminant(pr, w, P).value.value);
        Complex b = -(expi(const_pi(W) * pr * -2) * terminant(pr, wb, P).value.value);
        CHECK(abs(a - b) / abs(a) < 1e-60);
      }
  }

  TEST_CASE("quadrature agrees with the gamma route") {
    for (double th : {-2.5, -0.7, 0.0, 1.1, 2.9}) {
      SectorPoint w = SectorPoint::polar(Real(14L, W), Real(th, W));
      Real p(6.5, W);
      BigComplex a = terminant_gamma_route(p, w, P);
      QuadResult<Complex> q = terminant_quadrature(p, w, P);
      CHECK(abs(a.value - q.value) / abs(a.value) < 1e-50);
    }
  }

  TEST_CASE("connection formula matches the rotated-ray integral") {
    for (int side : {1, -1}) {
      SectorPoint w = SectorPoint::polar(Real(10L, W), (const_pi(W) + Real(0.3, W)) * side);
      TerminantValue t = terminant(Real(7.25, W), w, P, true);
      CHECK(t.branch_note == BranchNote::residue_continued);
      QuadResult<Complex> q = terminant_quadrature(Real(7.25, W), w, P);
      CHECK(abs(t.value.value - q.value) / abs(q.value) < 1e-50);
      CHECK(t.est_error >= t.value.error_bound);
    }
  }

  TEST_CASE("c(phi)") {
    const Real pi = const_pi(W);
    CHECK(abs(c_of_phi(pi, P).value) < 1e-70);
    Real phi = pi + Real(0.1, W);
    BigComplex c = c_of_phi(phi, P);
    Complex s = c_of_phi_seed(phi, W);
    CHECK(abs(c.value - s) < 1e-6);
    CHECK(abs(c.value - s) > 0.0);
    for (int i = 1; i < 50; ++i) {
      Real ph = pi * i / 25;  // (0, 2 pi)
      BigComplex ci = c_of_phi(ph, P);
      Real d = ph - pi;
      Complex g = Complex(Real(1L, W), d) - expi(d);
      CHECK(abs(ci.value * ci.value / 2L - g) < 1e-70);
    }
  }

  TEST_CASE("erf model") {
    const Real pi = const_pi(W);
    // far from the Stokes line the model is 0 on one side and 1 on the other
    BigComplex lo = terminant_erf_model(Real(30L, W), SectorPoint::polar(Real(30L, W), pi / 3), ErfSide::upper, P);
    BigComplex hi = terminant_erf_model(Real(30L, W), SectorPoint::polar(Real(30L, W), pi * 5 / 3), ErfSide::upper, P);
    CHECK(abs(lo.value) < 1e-4);
    CHECK(abs(hi.value - 1L) < 1e-4);
    BigComplex mid = terminant_erf_model(Real(30L, W), SectorPoint::polar(Real(30L, W), pi), ErfSide::upper, P);
    CHECK(abs(mid.value.re - Real(0.5, W)) < 1e-70);
    BigComplex low = terminant_erf_model(Real(30L, W), SectorPoint::polar(Real(30L, W), -pi), ErfSide::lower, P);
    CHECK(abs(low.value.re + Real(0.5, W)) < 1e-70);
    CHECK_THROWS_AS(terminant_erf_model(Real(1L, W), SectorPoint::polar(Real(3L, W), -pi), ErfSide::upper, P),
                    DomainError);
  }

  TEST_CASE("model tracks the terminant when p = |w|") {
    const Real pi = const_pi(W);
    for (double off : {-0.4, -0.1, 0.0, 0.2, 0.5}) {
      Real r(60L, W);
      SectorPoint w = SectorPoint::polar(r, pi + Real(off, W));
      Complex t = terminant(r, w, P).value.value;
      Complex m = terminant_erf_model(r, w, ErfSide::upper, P).value;
      CHECK(abs(t - m) < 0.1);
    }
  }

  TEST_CASE("domain errors") {
    const Real pi = const_pi(W);
    CHECK_THROWS_AS(terminant(Real(0L, W), SectorPoint::polar(Real(1L, W), Real(W)), P), DomainError);
    CHECK_THROWS_AS(terminant(Real(1L, W), SectorPoint::polar(Real(1L, W), pi + Real(0.8, W)), P), DomainError);
    CHECK_THROWS_AS(c_of_phi(pi * 2, P), DomainError);
  }
}
