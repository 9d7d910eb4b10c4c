#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "exproj/brascamp_lieb.hpp"
#include "helpers.hpp"

using namespace exproj;
using exproj::testing::sub;

namespace {

BLConfig axes_r2(const Rational& p) {
  BLConfig config;
  config.n = 2;
  config.subspaces = {sub(2, {{1, 0}}), sub(2, {{0, 1}})};
  config.p = p;
  return config;
}

BLConfig loomis_whitney_r3(const Rational& p) {
  BLConfig config;
  config.n = 3;
  config.subspaces = {sub(3, {{1, 0, 0}, {0, 1, 0}}), sub(3, {{1, 0, 0}, {0, 0, 1}}),
                      sub(3, {{0, 1, 0}, {0, 0, 1}})};
  config.p = p;
  return config;
}

bool family_contains(const CandidateFamily& family, const Subspace& s) {
  for (const Subspace& c : family.subspaces)
    if (c == s) return true;
  return false;
}

}  // namespace

TEST_CASE("lattice closure") {
  {
    const CandidateFamily f = lattice_closure(2, {sub(2, {{1, 0}}), sub(2, {{0, 1}})});
    CHECK(f.subspaces.size() == 4);
    CHECK_FALSE(f.truncated);
  }
  {
    const CandidateFamily f = lattice_closure(2, {});
    CHECK(f.subspaces.size() == 4);  // {0}, e1, e2, R^2
    CHECK(family_contains(f, Subspace::zero(2)));
    CHECK(family_contains(f, Subspace::full(2)));
  }
  {
    const CandidateFamily f = lattice_closure(2, {sub(2, {{1, 1}})});
    CHECK(f.subspaces.size() == 6);
    CHECK(family_contains(f, sub(2, {{1, 1}})));
    CHECK(family_contains(f, sub(2, {{1, -1}})));
  }
  {
    const CandidateFamily f = lattice_closure(3, {sub(3, {{1, 1, 0}})}, 5);
    CHECK(f.truncated);
    CHECK(f.subspaces.size() <= 5);
  }
}

TEST_CASE("bl constant on the axes configuration") {
  const CandidateFamily family = lattice_closure(2, {});
  CHECK(bl_constant(axes_r2(Rational(2)), family).value == 0);
  CHECK(bl_constant(axes_r2(Rational(1)), family).value == 1);
  CHECK(bl_constant(axes_r2(Rational(1)), family).certified_lower_bound);
}

TEST_CASE("bl constant on the Loomis-Whitney configuration") {
  const BLConfig config = loomis_whitney_r3(Rational(3, 2));
  const CandidateFamily family = lattice_closure(3, config.subspaces);
  CHECK(bl_constant(config, family).value == 0);
}

TEST_CASE("critical subspace and tie breaking") {
  const CandidateFamily family = lattice_closure(2, {});
  {
    const auto [l, value] = critical_subspace(axes_r2(Rational(1)), family);
    CHECK(value == 1);
    CHECK(l == Subspace::full(2));
  }
  {
    const auto [l, value] = critical_subspace(axes_r2(Rational(2)), family);
    CHECK(value == 0);
    CHECK(l == Subspace::zero(2));  // four-way tie at 0: smallest dim wins
  }
  {
    const BLConfig config = loomis_whitney_r3(Rational(2));
    const CandidateFamily f3 = lattice_closure(3, config.subspaces);
    const auto [l, value] = critical_subspace(config, f3);
    CHECK(value == 0);
    CHECK(l == Subspace::zero(3));
  }
}

TEST_CASE("bl constant convexity and floor") {
  const BLConfig base = loomis_whitney_r3(Rational(1));
  const CandidateFamily family = lattice_closure(3, base.subspaces);
  const auto value_at = [&](const Rational& p) {
    BLConfig c = base;
    c.p = p;
    return bl_constant(c, family).value;
  };
  const Rational ps[5] = {Rational(1), Rational(5, 4), Rational(3, 2), Rational(2), Rational(3)};
  // max of affine functions of p: midpoint convexity, exact
  for (int i = 0; i + 2 < 5; ++i) {
    const Rational mid = (ps[i] + ps[i + 2]) / 2;
    CHECK(value_at(mid) * 2 <= value_at(ps[i]) + value_at(ps[i + 2]));
  }
  // nonincreasing in p and floored by max{0, n - p k}
  Rational prev = value_at(ps[0]);
  for (int i = 1; i < 5; ++i) {
    const Rational v = value_at(ps[i]);
    CHECK(v <= prev);
    prev = v;
  }
  for (const Rational& p : ps) {
    const Rational floor_value = std::max(Rational(0), Rational(3) - p * 2);
    CHECK(value_at(p) >= floor_value);
  }
}

TEST_CASE("bl constant grows with the candidate family") {
  const BLConfig config = axes_r2(Rational(6, 5));
  CandidateFamily small;
  small.subspaces = {Subspace::zero(2), Subspace::full(2)};
  const CandidateFamily big = lattice_closure(2, {sub(2, {{1, 2}})});
  CHECK(bl_constant(config, small).value <= bl_constant(config, big).value);
}

TEST_CASE("transversal count") {
  const std::vector<Subspace> axes = {sub(2, {{1, 0}}), sub(2, {{0, 1}})};
  CHECK(transversal_count(axes, sub(2, {{1, 0}}), 1) == 1);
  CHECK(transversal_count(axes, sub(2, {{1, 0}}), 0) == 2);
  const std::vector<Subspace> r3_axes = {sub(3, {{1, 0, 0}}), sub(3, {{0, 1, 0}}),
                                         sub(3, {{0, 0, 1}})};
  CHECK(transversal_count(r3_axes, sub(3, {{1, 0, 0}, {0, 1, 0}}), 1) == 2);
}

TEST_CASE("lambda_p crosscheck finds no violations") {
  {
    const CrosscheckReport r = lambda_p_crosscheck(Problem(2, 1), 0, Rational(2), 100, 99);
    CHECK(r.violations == 0);
    CHECK(r.configurations_checked > 0);
  }
  {
    const CrosscheckReport r = lambda_p_crosscheck(Problem(3, 1), 1, Rational(3), 100, 101);
    CHECK(r.violations == 0);
  }
  {
    const CrosscheckReport r = lambda_p_crosscheck(Problem(3, 2), 2, Rational(3, 2), 0, 1);
    CHECK(r.trials == 0);
    CHECK(r.configurations_checked == 0);
  }
}

TEST_CASE("bl config files") {
  {
    std::ifstream is(EXPROJ_SAMPLES_DIR "/axes_r2_p1.bl");
    REQUIRE(is.good());
    const BLConfig config = read_bl_config(is);
    CHECK(config.n == 2);
    CHECK(config.subspaces.size() == 2);
    CHECK(config.p == 1);
    const CandidateFamily family = lattice_closure(config.n, config.subspaces);
    CHECK(bl_constant(config, family).value == 1);
  }
  {
    std::ifstream is(EXPROJ_SAMPLES_DIR "/loomis_whitney_r3.bl");
    REQUIRE(is.good());
    const BLConfig config = read_bl_config(is);
    const CandidateFamily family = lattice_closure(config.n, config.subspaces);
    CHECK(bl_constant(config, family).value == 0);
  }
  {
    // round trip
    BLConfig config = loomis_whitney_r3(Rational(5, 3));
    std::stringstream buffer;
    write_bl_config(buffer, config);
    const BLConfig back = read_bl_config(buffer);
    CHECK(back.n == config.n);
    CHECK(back.p == config.p);
    CHECK(back.subspaces.size() == config.subspaces.size());
  }
  {
    std::stringstream bad("2 2\n");
    CHECK_THROWS_AS(read_bl_config(bad), std::invalid_argument);
    std::stringstream mismatch("2 1 1\n3 1\n1 0 0\n");
    CHECK_THROWS_AS(read_bl_config(mismatch), std::invalid_argument);
  }
}
