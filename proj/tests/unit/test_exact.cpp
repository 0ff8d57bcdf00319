#include "../oracles.hpp"

#include "gammahyper/coeff_cache.hpp"
#include "gammahyper/exact.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace gammahyper;
using Q = ExactRational;

TEST_SUITE("exact_core") {
  TEST_CASE("bernoulli numbers") {
    auto B = bernoulli_numbers(30);
    CHECK(B[0] == 1);
    CHECK(B[1] == Q(-1, 2));
    CHECK(B[2] == Q(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[4] == Q(-1, 30));
    auto ref = oracle::bernoulli(30);
    for (std::size_t k = 0; k <= 30; ++k) CHECK(B[k] == ref[k]);
    for (std::size_t k = 3; k <= 30; k += 2) CHECK(B[k] == 0);
    CHECK(bernoulli_by_recurrence(30).entries == B.entries);
    CHECK(bernoulli_numbers(0).entries == std::vector<Q>{1});
  }

  TEST_CASE("brassesco b sequence") {
    auto b = brassesco_b_sequence(30);
    CHECK(b[1] == 1);
    CHECK(b[3] == Q(1, 36));
    CHECK(b == brassesco_b_sequence_weighted(30));
    // the unused slot never feeds the odd entries
    auto seeded = brassesco_b_sequence_weighted(30, Q(7, 3));
    for (std::size_t n = 1; n < b.size(); n += 2) CHECK(seeded[n] == b[n]);
  }

  TEST_CASE("stirling generators") {
    auto t = stirling_brassesco(10);
    CHECK(t[0] == 1);
    CHECK(t[1] == Q(-1, 12));
    CHECK(t[2] == Q(1, 288));
    CHECK(t[3] == Q(139, 51840));
    CHECK(t[4] == Q(-571, 2488320));
    CHECK(stirling_wrench(50) == stirling_brassesco(50));
    CHECK(stirling_logderiv(100) == stirling_wrench(100));
    CHECK(stirling_bessel(60) == stirling_wrench(60));
    auto ref = oracle::stirling(120);
    CHECK(stirling_wrench(120).entries == ref);
    CHECK(stirling_brassesco(0).entries == std::vector<Q>{1});
    CHECK(stirling(12, StirlingMethod::logderiv).method == StirlingMethod::logderiv);
  }

  TEST_CASE("sign pattern and canonical form") {
    auto t = stirling_wrench(200);
    CHECK_FALSE(sign_pattern_violation(t).has_value());
    for (const auto& q : t.entries) CHECK(is_canonical(q));
    StirlingTable bad = stirling_wrench(6);
    bad.entries[3] = -bad.entries[3];
    CHECK(sign_pattern_violation(bad) == std::optional<std::size_t>(3));
  }

  TEST_CASE("convolution identity") {
    auto t = stirling_wrench(60);
    CHECK(convolution_residual(t, 0) == 1);
    for (std::size_t n = 1; n <= 60; ++n) CHECK(convolution_residual(t, n) == 0);
    CHECK_THROWS_AS(convolution_residual(t, 61), std::out_of_range);
  }

  TEST_CASE("bessel polynomials") {
    auto U = bessel_polynomials(6);
    CHECK(U[0] == PolynomialRational({Q(1)}));
    CHECK(U[1](Q(1)) == Q(-1, 12));
    CHECK(U[2](Q(1)) == Q(1, 288));
    auto t = stirling_wrench(6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(U[n](Q(1)) == t[n]);
  }

  TEST_CASE("rationals") {
    CHECK(make_rational(4, -6) == Q(-2, 3));
    CHECK(is_canonical(make_rational(4, -6)));
    CHECK(make_rational(0, 5).get_den() == 1);
    CHECK_THROWS(make_rational(1, 0));
  }

  TEST_CASE("cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "gh_cache_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "coeffs.txt";
    auto t = stirling_logderiv(99);
    cache_save(t, path);
    auto back = cache_load(path);
    CHECK(back == t);
    CHECK(back.method == StirlingMethod::logderiv);
    CHECK(back.size() == 100);
  }

  TEST_CASE("cache format and errors") {
    auto t = stirling_wrench(3);
    std::string text = cache_serialize(t);
    CHECK(text.rfind("gamma-coeffs v1 wrench\ncount 4\n0\t1/1\n1\t-1/12\n", 0) == 0);

    // non-reduced fraction: warning, value reduced; checksum recomputed for the edited body
    std::string body = text.substr(0, text.rfind("sha256 "));
    std::string edited = body;
    edited.replace(edited.find("-1/12"), 5, "-2/24");
    std::vector<std::string> warnings;
    auto reduced = cache_parse(edited + "sha256 " + sha256_hex(edited) + "\n", &warnings);
    CHECK(reduced[1] == Q(-1, 12));
    CHECK(warnings.size() == 1);

    // truncated file names the line
    std::string truncated = body.substr(0, body.find("2\t"));
    try {
      cache_parse(truncated);
      FAIL("truncated cache accepted");
    } catch (const CacheError& e) {
      CHECK(e.line() > 0);
    }
    // malformed fraction
    std::string broken = body;
    broken.replace(broken.find("-1/12"), 5, "-1/x2");
    try {
      cache_parse(broken + "sha256 " + sha256_hex(broken) + "\n");
      FAIL("malformed fraction accepted");
    } catch (const CacheError& e) {
      CHECK(e.line() == 4);
    }
    // checksum mismatch
    CHECK_THROWS_AS(cache_parse(edited + "sha256 " + sha256_hex(body) + "\n"), CacheError);
  }
}
