#include "doctest.h"

#include <cmath>
#include <array>
#include <thread>

#include "fvlt/errors.hpp"
#include "fvlt/fixtures.hpp"
#include "fvlt/profile.hpp"
#include "fvlt/rng.hpp"
#include "test_helpers.hpp"

using fvlt::LevelCounts;
using fvlt::LocalTimeProfile;
using fvlt::Polynomial;

TEST_CASE("counts at single levels") {
  const LevelCounts zig = fvlt::local_times_at(fvlt::make_fixture("zigzag"), 1.5, 3.0);
  CHECK(zig.net_passages == 1);
  CHECK(zig.abs_passages == 3);
  CHECK(zig.crossings == 3);

  const LevelCounts jm = fvlt::local_times_at(fvlt::make_fixture("jumpmid"), 1.0, 2.0);
  CHECK(jm.net_passages == 2);
  CHECK(jm.abs_passages == 2);
  CHECK(jm.crossings == 3);

  const LevelCounts st = fvlt::local_times_at(fvlt::make_fixture("stair"), 0.5, 3.0);
  CHECK(st.net_passages == 0);
  CHECK(st.abs_passages == 0);
  CHECK(st.crossings == 1);

  CHECK_THROWS_AS(fvlt::local_times_at(fvlt::make_fixture("const"), 1.0, 1.0),
                  fvlt::ComplexLevel);
}

TEST_CASE("profiles of the documented fixtures") {
  const LocalTimeProfile zig = fvlt::build_profile(fvlt::make_fixture("zigzag"), 3.0);
  REQUIRE(zig.cell_boundaries == std::vector<double>{0.0, 1.0, 2.0, 3.0});
  REQUIRE(zig.cells.size() == 3);
  CHECK(zig.cells[0].net_passages == 1);
  CHECK(zig.cells[0].abs_passages == 1);
  CHECK(zig.cells[0].crossings == 1);
  CHECK(zig.cells[1].net_passages == 1);
  CHECK(zig.cells[1].abs_passages == 3);
  CHECK(zig.cells[1].crossings == 3);
  CHECK(zig.cells[2].net_passages == 1);
  CHECK(zig.cells[2].abs_passages == 1);
  CHECK(zig.cells[2].crossings == 1);

  const LocalTimeProfile drift = fvlt::build_profile(fvlt::make_fixture("drift"), 2.0);
  REQUIRE(drift.cells.size() == 1);
  CHECK(drift.cell_boundaries == std::vector<double>{0.0, 2.0});
  CHECK(drift.cells[0].net_passages == 1);
  CHECK(drift.cells[0].abs_passages == 1);
  CHECK(drift.cells[0].crossings == 1);

  const LocalTimeProfile stair = fvlt::build_profile(fvlt::make_fixture("stair"), 3.0);
  REQUIRE(stair.cells.size() == 3);
  for (const LevelCounts& cell : stair.cells) {
    CHECK(cell.net_passages == 0);
    CHECK(cell.abs_passages == 0);
    CHECK(cell.crossings == 1);
  }

  // a single-boundary profile has no cells
  const LocalTimeProfile cst = fvlt::build_profile(fvlt::make_fixture("const"), 1.0);
  CHECK(cst.cell_boundaries.size() == 1);
  CHECK(cst.cells.empty());
}

TEST_CASE("profile integration") {
  const LocalTimeProfile zig = fvlt::build_profile(fvlt::make_fixture("zigzag"), 3.0);
  const auto unit = fvlt::integrate_against_profile(zig, Polynomial::constant(1.0), 0.0, 3.0);
  CHECK(unit.net == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(unit.abs == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(unit.crossings == doctest::Approx(5.0).epsilon(1e-14));

  const auto weighted =
      fvlt::integrate_against_profile(zig, Polynomial({0.0, 2.0}), 0.0, 3.0);
  CHECK(weighted.net == doctest::Approx(9.0).epsilon(1e-14));  // 1 + 3 + 5

  const auto zero = fvlt::integrate_against_profile(zig, Polynomial(), -10.0, 10.0);
  CHECK(zero.net == 0.0);
  CHECK(zero.abs == 0.0);
  CHECK(zero.crossings == 0.0);

  CHECK_THROWS_AS(fvlt::integrate_against_profile(zig, Polynomial(), 1.0, 1.0),
                  fvlt::EmptyInterval);
}

TEST_CASE("mass identities: unit-weight integrals match the path data") {
  for (const auto& [name, path] : testutil::small_corpus()) {
    CAPTURE(name);
    const double t = path.horizon();
    const LocalTimeProfile profile = fvlt::build_profile(path, t);
    if (profile.cell_boundaries.size() < 2) continue;
    const auto mass = fvlt::integrate_against_profile(
        profile, Polynomial::constant(1.0), profile.cell_boundaries.front(),
        profile.cell_boundaries.back());

    double jump_total = 0.0;
    for (const auto& j : path.jumps_up_to(t)) jump_total += j.size;
    const double continuous_change = path.eval(t).value - jump_total - path.eval(0.0).value;
    const double w_c = path.total_variation(t).continuous;

    CHECK(testutil::close_rel(mass.net, continuous_change, 1e-9));
    CHECK(testutil::close_rel(mass.abs, w_c, 1e-9));
  }
}

TEST_CASE("cells agree with direct queries at random interior levels") {
  fvlt::SplitMix64 rng(5150);
  for (const auto& [name, path] : testutil::small_corpus()) {
    CAPTURE(name);
    const double t = path.horizon();
    const LocalTimeProfile profile = fvlt::build_profile(path, t);
    if (profile.cells.empty()) continue;
    const double lo = profile.cell_boundaries.front();
    const double hi = profile.cell_boundaries.back();
    const double clearance = 1e-6 * (1.0 + hi - lo);
    int tested = 0;
    for (int attempt = 0; attempt < 1000 && tested < 100; ++attempt) {
      const double x = lo + rng.uniform() * (hi - lo);
      const auto cell_it = std::upper_bound(profile.cell_boundaries.begin(),
                                            profile.cell_boundaries.end(), x);
      if (cell_it == profile.cell_boundaries.begin() ||
          cell_it == profile.cell_boundaries.end()) {
        continue;
      }
      const std::size_t j =
          static_cast<std::size_t>(cell_it - profile.cell_boundaries.begin()) - 1;
      if (x - profile.cell_boundaries[j] < clearance ||
          profile.cell_boundaries[j + 1] - x < clearance) {
        continue;
      }
      const LevelCounts direct = fvlt::local_times_at(path, x, t);
      CHECK(direct.net_passages == profile.cells[j].net_passages);
      CHECK(direct.abs_passages == profile.cells[j].abs_passages);
      CHECK(direct.crossings == profile.cells[j].crossings);
      ++tested;
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("parity and ordering invariants hold on the corpus") {
  for (const auto& [name, path] : testutil::small_corpus(50)) {
    CAPTURE(name);
    const LocalTimeProfile profile = fvlt::build_profile(path, path.horizon());
    for (std::size_t j = 0; j + 1 < profile.cell_boundaries.size(); ++j) {
      CHECK(profile.cell_boundaries[j] < profile.cell_boundaries[j + 1]);
    }
    for (const LevelCounts& cell : profile.cells) {
      const int plus = cell.abs_passages + cell.net_passages;
      const int minus = cell.abs_passages - cell.net_passages;
      CHECK(plus >= 0);
      CHECK(minus >= 0);
      CHECK(plus % 2 == 0);
      CHECK(minus % 2 == 0);
      CHECK(std::abs(cell.net_passages) <= cell.abs_passages);
      CHECK(cell.abs_passages <= cell.crossings);
    }
  }
}

TEST_CASE("counts are right-continuous in the horizon") {
  const auto zigzag = fvlt::make_fixture("zigzag");
  // crossing of level 1.5 at t = 0.75
  CHECK(fvlt::local_times_at(zigzag, 1.5, 0.75 - 1e-6).net_passages == 0);
  CHECK(fvlt::local_times_at(zigzag, 1.5, 0.75).net_passages == 1);
  CHECK(fvlt::local_times_at(zigzag, 1.5, 0.75 + 1e-6).net_passages == 1);
}

TEST_CASE("levels outside the path range have zero counts") {
  const auto zigzag = fvlt::make_fixture("zigzag");
  for (double x : {-5.0, 3.5, 100.0}) {
    const fvlt::LevelCounts counts = fvlt::local_times_at(zigzag, x, 3.0);
    CHECK(counts.net_passages == 0);
    CHECK(counts.abs_passages == 0);
    CHECK(counts.crossings == 0);
  }
}

TEST_CASE("concurrent readers see identical results") {
  fvlt::RandomPathParams params;
  params.seed = 1234;
  const fvlt::FvPath path = fvlt::random_path(params);
  const fvlt::LocalTimeProfile reference = fvlt::build_profile(path, path.horizon());
  std::vector<std::thread> workers;
  std::array<bool, 4> ok{};
  for (std::size_t w = 0; w < ok.size(); ++w) {
    workers.emplace_back([&, w] {
      bool good = true;
      for (int rep = 0; rep < 5; ++rep) {
        const fvlt::LocalTimeProfile mine = fvlt::build_profile(path, path.horizon());
        good = good && mine.cell_boundaries == reference.cell_boundaries;
        good = good && mine.cells.size() == reference.cells.size();
        for (std::size_t j = 0; j < mine.cells.size(); ++j) {
          good = good && mine.cells[j].net_passages == reference.cells[j].net_passages &&
                 mine.cells[j].abs_passages == reference.cells[j].abs_passages &&
                 mine.cells[j].crossings == reference.cells[j].crossings;
        }
      }
      ok[w] = good;
    });
  }
  for (std::thread& t : workers) t.join();
  for (bool good : ok) CHECK(good);
}
