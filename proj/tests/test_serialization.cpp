#include "doctest.h"

#include "fvlt/errors.hpp"
#include "fvlt/fixtures.hpp"
#include "fvlt/profile.hpp"
#include "fvlt/rng.hpp"
#include "fvlt/serialization.hpp"
#include "test_helpers.hpp"

TEST_CASE("documents round-trip bit-for-bit") {
  for (const auto& [name, path] : testutil::small_corpus(20)) {
    CAPTURE(name);
    const std::string text =
        fvlt::document_to_json_text(fvlt::make_document(path, {{"source", name}}));
    const fvlt::PathDocument doc = fvlt::parse_document(text);
    const fvlt::FvPath reloaded = fvlt::load_path(doc);

    const fvlt::RawPathSpec a = path.raw();
    const fvlt::RawPathSpec b = reloaded.raw();
    CHECK(a.breakpoints == b.breakpoints);
    CHECK(a.segments == b.segments);
    CHECK(a.jumps == b.jumps);
    CHECK(fvlt::path_identity_hash(path) == fvlt::path_identity_hash(reloaded));
    CHECK(doc.metadata.at("source") == name);
  }
}

TEST_CASE("hash ignores metadata but not path data") {
  const fvlt::FvPath zigzag = fvlt::make_fixture("zigzag");
  const fvlt::FvPath drift = fvlt::make_fixture("drift");
  CHECK(fvlt::path_identity_hash(zigzag) != fvlt::path_identity_hash(drift));
}

TEST_CASE("malformed documents name the offending field") {
  auto expect_rejected = [](const std::string& text, const char* needle) {
    try {
      fvlt::parse_document(text);
      FAIL_CHECK("expected InvalidDocument for ", needle);
    } catch (const fvlt::InvalidDocument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_rejected("{ not json", "JSON");
  expect_rejected(R"({"horizon":1})", "schema_version");
  expect_rejected(R"({"schema_version":99,"horizon":1,"breakpoints":[],"segments":[],"jumps":[]})",
                  "schema_version");
  expect_rejected(R"({"schema_version":1,"breakpoints":[0,1],"segments":[[0]],"jumps":[]})",
                  "horizon");
  expect_rejected(
      R"({"schema_version":1,"horizon":2,"breakpoints":[0,1],"segments":[[0]],"jumps":[]})",
      "horizon");
  expect_rejected(
      R"({"schema_version":1,"horizon":1,"breakpoints":[0,"x"],"segments":[[0]],"jumps":[]})",
      "breakpoints");
  expect_rejected(
      R"({"schema_version":1,"horizon":1,"breakpoints":[0,1],"segments":[[0]],)"
      R"("jumps":[{"index":1,"size":1},{"index":1,"size":2}]})",
      "duplicate");
}

TEST_CASE("csv profile output is stable") {
  const auto profile = fvlt::build_profile(fvlt::make_fixture("zigzag"), 3.0);
  CHECK(fvlt::profile_to_csv(profile) ==
        "x_left,x_right,ell,lambda,N\n"
        "0,1,1,1,1\n"
        "1,2,1,3,3\n"
        "2,3,1,1,1\n");
}

TEST_CASE("mutated documents never escape the error contract") {
  // byte-level fuzz of a valid document: every mutation must either parse to
  // a loadable path or fail with a library error, never anything else
  const std::string base =
      fvlt::document_to_json_text(fvlt::make_document(fvlt::make_fixture("jumpmid")));
  fvlt::SplitMix64 rng(0xF422);
  int parsed = 0, rejected = 0;
  for (int trial = 0; trial < 600; ++trial) {
    std::string text = base;
    const int edits = 1 + static_cast<int>(rng.uniform() * 4.0);
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = static_cast<std::size_t>(rng.uniform() * text.size());
      const double action = rng.uniform();
      if (action < 0.4) {
        text[pos] = static_cast<char>(32 + static_cast<int>(rng.uniform() * 95.0));
      } else if (action < 0.7) {
        text.erase(pos, 1);
      } else {
        text.insert(pos, 1, static_cast<char>('0' + static_cast<int>(rng.uniform() * 10.0)));
      }
    }
    try {
      const fvlt::FvPath path = fvlt::load_path(fvlt::parse_document(text));
      (void)path.total_variation(path.horizon());
      ++parsed;
    } catch (const fvlt::Error&) {
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 600);
  CHECK(rejected > 0);
}
