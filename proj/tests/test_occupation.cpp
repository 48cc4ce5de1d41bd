#include "doctest.h"

#include <cmath>

#include "fvlt/errors.hpp"
#include "fvlt/fixtures.hpp"
#include "fvlt/occupation.hpp"
#include "fvlt/rng.hpp"
#include "test_helpers.hpp"

using fvlt::OccupationMass;

namespace {

// Test-local Riemann sum for the occupation masses with an indicator
// integrand; independent of the interval-slicing implementation.
OccupationMass indicator_partition_sum(const fvlt::FvPath& path, double t, double a, double b,
                                       std::size_t n) {
  OccupationMass mass{0.0, 0.0, a, b, t};
  const auto jumps = path.jumps_up_to(t);
  std::size_t jump_idx = 0;
  double jump_cum = 0.0;
  auto continuous_at = [&](double s) {
    while (jump_idx < jumps.size() && jumps[jump_idx].time <= s) {
      jump_cum += jumps[jump_idx].size;
      ++jump_idx;
    }
    return path.eval(s).value - jump_cum;
  };
  std::vector<double> points;
  for (std::size_t k = 0; k <= n; ++k) points.push_back(t * k / n);
  for (double bp : path.breakpoints()) {
    if (bp > 0.0 && bp < t) points.push_back(bp);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  double prev_value = path.eval(points[0]).value;
  double prev_cont = continuous_at(points[0]);
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double cont = continuous_at(points[k]);
    const double delta = cont - prev_cont;
    if (prev_value >= a && prev_value <= b) {
      mass.theta += delta;
      mass.vartheta += std::abs(delta);
    }
    prev_cont = cont;
    prev_value = path.eval(points[k]).value;
  }
  return mass;
}

}  // namespace

TEST_CASE("occupation masses of the documented windows") {
  const OccupationMass zig = fvlt::occupation_mass(fvlt::make_fixture("zigzag"), 3.0, 1.0, 2.0);
  CHECK(zig.theta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(zig.vartheta == doctest::Approx(3.0).epsilon(1e-14));

  const OccupationMass drift =
      fvlt::occupation_mass(fvlt::make_fixture("drift"), 2.0, 0.5, 1.5);
  CHECK(drift.theta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(drift.vartheta == doctest::Approx(1.0).epsilon(1e-14));

  const OccupationMass stair =
      fvlt::occupation_mass(fvlt::make_fixture("stair"), 3.0, 0.0, 3.0);
  CHECK(stair.theta == 0.0);
  CHECK(stair.vartheta == 0.0);

  CHECK_THROWS_AS(fvlt::occupation_mass(fvlt::make_fixture("drift"), 2.0, 1.0, 1.0),
                  fvlt::EmptyInterval);
  CHECK_THROWS_AS(fvlt::occupation_mass(fvlt::make_fixture("drift"), 2.5, 0.0, 1.0),
                  fvlt::OutOfDomain);
}

TEST_CASE("density residuals vanish on the documented examples") {
  const auto zig = fvlt::verify_density(fvlt::make_fixture("zigzag"), 3.0, 1.0, 2.0);
  CHECK(zig.signed_residual <= 1e-9);
  CHECK(zig.absolute_residual <= 1e-9);

  const auto jumpmid = fvlt::make_fixture("jumpmid");
  const auto jm = fvlt::verify_density(jumpmid, 2.0, 0.5, 1.5);
  CHECK(jm.signed_residual <= 1e-9);
  CHECK(jm.absolute_residual <= 1e-9);
  // both sides share the value (2, 2) on that window
  const OccupationMass mass = fvlt::occupation_mass(jumpmid, 2.0, jm.a_used, jm.b_used);
  CHECK(mass.theta == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(mass.vartheta == doctest::Approx(2.0).epsilon(1e-8));

  const auto cst = fvlt::verify_density(fvlt::make_fixture("const"), 1.0, 0.0, 2.0);
  CHECK(cst.signed_residual == 0.0);
  CHECK(cst.absolute_residual == 0.0);
}

TEST_CASE("endpoints on critical values are nudged and reported") {
  // 0.5 and 1.5 are jump endpoint / terminal values of jumpmid
  const auto res = fvlt::verify_density(fvlt::make_fixture("jumpmid"), 2.0, 0.5, 1.5);
  CHECK(res.nudged);
  CHECK(res.a_used > 0.5);
  CHECK(res.b_used < 1.5);
}

TEST_CASE("additivity over adjacent windows") {
  fvlt::SplitMix64 rng(808);
  for (const auto& [name, path] : testutil::small_corpus(15)) {
    CAPTURE(name);
    const double lo = path.min_value(), hi = path.max_value();
    if (!(hi > lo)) continue;
    const double t = path.horizon();
    for (int k = 0; k < 10; ++k) {
      double a = lo + rng.uniform() * (hi - lo);
      double b = lo + rng.uniform() * (hi - lo);
      double c = lo + rng.uniform() * (hi - lo);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      if (!(a < b && b < c)) continue;
      const OccupationMass whole = fvlt::occupation_mass(path, t, a, c);
      const OccupationMass left = fvlt::occupation_mass(path, t, a, b);
      const OccupationMass right = fvlt::occupation_mass(path, t, b, c);
      CHECK(testutil::close_rel(whole.theta, left.theta + right.theta, 1e-12));
      CHECK(testutil::close_rel(whole.vartheta, left.vartheta + right.vartheta, 1e-12));
    }
  }
}

TEST_CASE("interval slicing agrees with an indicator partition sum") {
  fvlt::SplitMix64 rng(4242);
  for (const auto& [name, path] : fvlt::default_fixture_corpus()) {
    CAPTURE(name);
    const double lo = path.min_value(), hi = path.max_value();
    if (!(hi > lo)) continue;
    const double t = path.horizon();
    for (int k = 0; k < 5; ++k) {
      double a = lo + rng.uniform() * (hi - lo);
      double b = lo + rng.uniform() * (hi - lo);
      if (a > b) std::swap(a, b);
      if (b - a < 0.05 * (hi - lo)) continue;
      const OccupationMass exact = fvlt::occupation_mass(path, t, a, b);
      const OccupationMass approx = indicator_partition_sum(path, t, a, b, 100000);
      const double scale = 1.0 + path.total_variation(t).total;
      CHECK(std::abs(exact.theta - approx.theta) <= 1e-2 * scale);
      CHECK(std::abs(exact.vartheta - approx.vartheta) <= 1e-2 * scale);
    }
  }
}
