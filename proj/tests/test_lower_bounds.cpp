#include <catch2/catch_amalgamated.hpp>

#include "exproj/lower_bounds.hpp"

using namespace exproj;

namespace {

const TypeBound& type_of(const std::vector<TypeBound>& list, int id) {
  for (const TypeBound& t : list)
    if (t.type_id == id) return t;
  throw std::logic_error("missing type");
}

}  // namespace

TEST_CASE("decompose with fractional part in (0,1]") {
  CHECK(decompose(Rational(3, 2)).whole == 1);
  CHECK(decompose(Rational(3, 2)).frac == Rational(1, 2));
  CHECK(decompose(Rational(2)).whole == 1);   // integers take frac = 1
  CHECK(decompose(Rational(2)).frac == Rational(1));
  CHECK(decompose(Rational(1, 4)).whole == 0);
  CHECK(decompose(Rational(1, 4)).frac == Rational(1, 4));
  CHECK_THROWS_AS(decompose(Rational(0)), std::domain_error);
}

TEST_CASE("construction type bounds") {
  {
    const auto list = type_bounds(Problem(3, 2), Rational(5, 2), Rational(8, 5));
    const TypeBound& t2 = type_of(list, 2);
    REQUIRE(t2.conditions_met);
    CHECK(t2.m == 2);
    CHECK(t2.l == 1);
    CHECK(t2.value == 1);
  }
  {
    const auto list = type_bounds(Problem(2, 1), Rational(1), Rational(3, 4));
    const TypeBound& t3 = type_of(list, 3);
    REQUIRE(t3.conditions_met);
    CHECK(t3.m == 0);
    CHECK(t3.l == 0);
    CHECK(t3.value == Rational(1, 2));  // matches the sharp planar value 2s-a
  }
  {
    const auto list = type_bounds(Problem(3, 1), Rational(1, 2), Rational(1, 4));
    const TypeBound& t2 = type_of(list, 2);
    CHECK_FALSE(t2.conditions_met);
    CHECK(t2.failed_condition == "gamma > beta");
  }
  CHECK_THROWS_AS(type_bounds(Problem(3, 1), Rational(1), Rational(2)), std::domain_error);
}

TEST_CASE("plateau bound") {
  {
    const TypeBound p = plateau_bound(Problem(3, 1), Rational(1, 2), Rational(1, 4));
    REQUIRE(p.conditions_met);
    CHECK(p.value == 1);
    CHECK(p.m == 1);  // w
    CHECK(p.l == 0);
  }
  {
    const TypeBound p = plateau_bound(Problem(3, 2), Rational(5, 2), Rational(8, 5));
    REQUIRE(p.conditions_met);
    CHECK(p.value == 1);
    CHECK(p.m == 2);
    CHECK(p.l == 1);
  }
  {
    const TypeBound p = plateau_bound(Problem(3, 2), Rational(3, 2), Rational(6, 5));
    REQUIRE(p.conditions_met);
    CHECK(p.value == 1);
    CHECK(p.m == 2);
    CHECK(p.l == 1);
  }
}

TEST_CASE("line table in R^3") {
  CHECK(r3_line_table(Rational(9, 5), Rational(7, 10)) == Rational(3, 5));
  CHECK(r3_line_table(Rational(9, 5), Rational(9, 10)) == Rational(1));
  CHECK(r3_line_table(Rational(9, 5), Rational(1, 5)) == Rational(0));
  CHECK(r3_line_table(Rational(1, 2), Rational(1, 4)) == Rational(1));
  CHECK(r3_line_table(Rational(5, 2), Rational(9, 10)) == Rational(1 + 2 * Rational(9, 10) - Rational(5, 2)));
  CHECK_THROWS_AS(r3_line_table(Rational(4), Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(r3_line_table(Rational(1), Rational(1)), std::domain_error);
}

TEST_CASE("plane table in R^3") {
  CHECK(r3_plane_table(Rational(3, 2), Rational(13, 10)) == Rational(11, 10));
  CHECK(r3_plane_table(Rational(5, 2), Rational(8, 5)) == Rational(1));
  CHECK(r3_plane_table(Rational(1, 2), Rational(2, 5)) == Rational(3, 10));
  CHECK(r3_plane_table(Rational(3, 2), Rational(3, 5)) == Rational(0));
  CHECK(r3_plane_table(Rational(3, 2), Rational(9, 10)) == Rational(3, 10));
  CHECK_THROWS_AS(r3_plane_table(Rational(1, 2), Rational(1, 2)), std::domain_error);
}

TEST_CASE("best lower bound") {
  CHECK(best_lower(Problem(2, 1), Rational(1), Rational(3, 4)).value == Rational(1, 2));
  CHECK(best_lower(Problem(3, 2), Rational(5, 2), Rational(8, 5)).value == 1);
  const BoundValue four = best_lower(Problem(4, 2), Rational(3, 2), Rational(3, 5));
  CHECK(four.value == 2);
}

TEST_CASE("first satisfied type dominates every later satisfied type") {
  // The testing order Type 1, 2, 3, 4 picks the best available bound.
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const Problem prob(n, k);
      for (int i = 1; i < 10 * n; ++i) {
        const Rational a(i, 10);
        if (!(a < n)) continue;
        for (int j = 1; j <= 10 * k; ++j) {
          const Rational s(j, 10);
          if (!(s <= std::min(Rational(k), a))) continue;
          const auto list = type_bounds(prob, a, s);
          int first = -1;
          for (int idx = 0; idx < 4; ++idx) {
            if (list[idx].conditions_met) {
              first = idx;
              break;
            }
          }
          if (first < 0) continue;
          for (int idx = first + 1; idx < 4; ++idx) {
            if (list[idx].conditions_met) REQUIRE(list[first].value >= list[idx].value);
          }
        }
      }
    }
}

TEST_CASE("plateau dominates the Type 2 value whenever Type 2 applies") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const Problem prob(n, k);
      for (int i = 1; i < 12 * n; ++i) {
        const Rational a(i, 12);
        if (!(a < n)) continue;
        for (int j = 1; j <= 12 * k; ++j) {
          const Rational s(j, 12);
          if (!(s <= std::min(Rational(k), a))) continue;
          const auto list = type_bounds(prob, a, s);
          const TypeBound& t2 = type_of(list, 2);
          if (!t2.conditions_met) continue;
          const TypeBound p = plateau_bound(prob, a, s);
          REQUIRE(p.conditions_met);
          REQUIRE(p.value >= t2.value);
        }
      }
    }
}

TEST_CASE("construction bounds dominate the printed R^3 tables") {
  // The tables are lower bounds, so the best construction may only
  // exceed them; equality holds on the 0 rows and the plane-table
  // constant rows (the line table's constant rows are beaten once the
  // two-factor constructions fire, i.e. for s > a/2).
  for (int k = 1; k <= 2; ++k) {
    const Problem prob(3, k);
    for (int i = 1; i < 60; ++i) {
      const Rational a(i, 20);
      for (int j = 1; j < 20 * k; ++j) {
        const Rational s(j, 20);
        if (!(s < std::min(Rational(k), a))) continue;
        const Rational table = (k == 1) ? r3_line_table(a, s) : r3_plane_table(a, s);
        Rational best(0);
        for (const TypeBound& t : type_bounds(prob, a, s))
          if (t.conditions_met) best = std::max(best, t.value);
        const TypeBound p = plateau_bound(prob, a, s);
        if (p.conditions_met) best = std::max(best, p.value);
        REQUIRE(best >= table);
        if (table == 0) REQUIRE(best == table);
        if (k == 2 && table == 1) REQUIRE(best == table);
        if (k == 1 && table == 1 && 2 * s <= a) REQUIRE(best == table);
      }
    }
  }
}

TEST_CASE("sharp planar lower bound") {
  const Problem prob(2, 1);
  for (int i = 1; i < 40; ++i) {
    const Rational a(i, 20);
    for (int j = 1; j < 20; ++j) {
      const Rational s(j, 20);
      if (!(s < std::min(Rational(1), a))) continue;
      REQUIRE(best_lower(prob, a, s).value == std::max(Rational(0), Rational(2 * s - a)));
    }
  }
}

TEST_CASE("exact regions on small grids") {
  const auto grid = [](int n, int denom) {
    std::vector<Rational> g;
    for (int i = 1; i < n * denom; ++i) g.emplace_back(i, denom);
    return g;
  };

  {
    const auto points = exact_regions(Problem(3, 1), grid(3, 10), grid(1, 10));
    bool found = false;
    for (const auto& p : points)
      if (p.a == Rational(13, 10) && p.s == Rational(2, 5)) {
        found = true;
        CHECK(p.value == 1);
      }
    CHECK(found);
  }
  {
    const auto points = exact_regions(Problem(3, 2), grid(3, 10), grid(2, 10));
    bool found = false;
    for (const auto& p : points)
      if (p.a == Rational(5, 2) && p.s == Rational(8, 5)) {
        found = true;
        CHECK(p.value == 1);
      }
    CHECK(found);
  }
  {
    // In the plane every grid point with s <= a/2 is exact with value 0.
    const auto points = exact_regions(Problem(2, 1), grid(2, 10), grid(1, 10));
    for (int i = 1; i < 20; ++i)
      for (int j = 1; j < 10; ++j) {
        const Rational a(i, 10), s(j, 10);
        if (!(s < std::min(Rational(1), a)) || !(2 * s <= a)) continue;
        bool found = false;
        for (const auto& p : points)
          if (p.a == a && p.s == s) {
            found = true;
            CHECK(p.value == 0);
          }
        REQUIRE(found);
      }
  }
}

TEST_CASE("sandwich on a small grid") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k) {
      const Problem prob(n, k);
      for (int i = 1; i < 10 * n; ++i) {
        const Rational a(i, 10);
        for (int j = 1; j < 10 * k; ++j) {
          const Rational s(j, 10);
          if (!(s < std::min(Rational(k), a))) continue;
          REQUIRE(best_lower(prob, a, s).value <= best_upper(prob, a, s).value);
        }
      }
    }
}
