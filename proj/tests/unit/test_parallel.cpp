#include "gammahyper/hyperasym.hpp"
#include "gammahyper/late_coeffs.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace gammahyper;

TEST_SUITE("parallel") {
  TEST_CASE("sweep_map order and errors") {
    auto sq = [](std::size_t i) { return static_cast<long>(i * i); };
    CHECK(sweep_map(1000, sq, Exec::parallel) == sweep_map(1000, sq, Exec::serial));
    auto bad = [](std::size_t i) -> int {
      if (i == 17 || i == 400) throw std::runtime_error(std::to_string(i));
      return 0;
    };
    try {
      (void)sweep_map(500, bad, Exec::parallel);
      FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "17");
    }
  }

  TEST_CASE("stokes profile serial == parallel") {
    const Precision p(128);
    auto grid = stokes_grid(1, 9, p.working());
    auto a = stokes_profile(SeriesKind::gamma, Real(6L, p.working()), grid, 3, p, Exec::serial);
    auto b = stokes_profile(SeriesKind::gamma, Real(6L, p.working()), grid, 3, p, Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].effective_multiplier.re == b[i].effective_multiplier.re);
      CHECK(a[i].effective_multiplier.im == b[i].effective_multiplier.im);
      CHECK(a[i].residual == b[i].residual);
    }
  }

  TEST_CASE("table serial == parallel") {
    const Precision p(512);
    TableReproduction a = reproduce_table(TableId::table2, p, Exec::serial);
    TableReproduction b = reproduce_table(TableId::table2, p, Exec::parallel);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].value.value == b.rows[i].value.value);
      CHECK(a.rows[i].error == b.rows[i].error);
    }
    CHECK(render_table_text(a) == render_table_text(b));
  }
}
