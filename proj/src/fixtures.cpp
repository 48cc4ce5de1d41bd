#include "fvlt/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "fvlt/errors.hpp"
#include "fvlt/rng.hpp"

namespace fvlt {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double param_or(const std::map<std::string, double>& params, const std::string& key,
                double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown_params(const FixtureSpec& spec, std::initializer_list<const char*> allowed) {
  for (const auto& entry : spec.params) {
    const std::string& key = entry.first;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end()) {
      throw InvalidParameter("fixture " + spec.name + ": unknown parameter '" + key + "'");
    }
  }
}

FvPath cantor_approximation(int n) {
  if (n < 0 || n > 12) {
    throw InvalidParameter("cantor: n must be in 0..12");
  }
  // Sloped intervals of the n-th construction stage; flat pieces in between.
  std::vector<std::pair<double, double>> sloped{{0.0, 1.0}};
  for (int stage = 0; stage < n; ++stage) {
    std::vector<std::pair<double, double>> next;
    next.reserve(sloped.size() * 2);
    for (const auto& [a, b] : sloped) {
      const double third = (b - a) / 3.0;
      next.emplace_back(a, a + third);
      next.emplace_back(b - third, b);
    }
    sloped = std::move(next);
  }
  const double rise = std::ldexp(1.0, -n);  // each sloped piece climbs 2^-n

  RawPathSpec spec;
  spec.breakpoints.push_back(0.0);
  double value = 0.0;
  for (std::size_t k = 0; k < sloped.size(); ++k) {
    const auto& [a, b] = sloped[k];
    spec.segments.push_back({value, rise / (b - a)});
    spec.breakpoints.push_back(b);
    value += rise;
    if (k + 1 < sloped.size()) {
      spec.segments.push_back({value});
      spec.breakpoints.push_back(sloped[k + 1].first);
    }
  }
  return FvPath::validate(spec);
}

}  // namespace

FvPath make_fixture(const FixtureSpec& spec) {
  const std::string name = lower(spec.name);

  if (name == "const") {
    reject_unknown_params(spec, {"value", "horizon"});
    const double value = param_or(spec.params, "value", 1.0);
    const double horizon = param_or(spec.params, "horizon", 1.0);
    if (!(horizon > 0.0)) throw InvalidParameter("const: horizon must be positive");
    RawPathSpec raw;
    raw.breakpoints = {0.0, horizon};
    raw.segments = {{value}};
    return FvPath::validate(raw);
  }
  if (name == "drift") {
    reject_unknown_params(spec, {});
    RawPathSpec raw;
    raw.breakpoints = {0.0, 2.0};
    raw.segments = {{0.0, 1.0}};
    return FvPath::validate(raw);
  }
  if (name == "zigzag") {
    reject_unknown_params(spec, {});
    RawPathSpec raw;
    raw.breakpoints = {0.0, 1.0, 2.0, 3.0};
    raw.segments = {{0.0, 2.0}, {2.0, -1.0}, {1.0, 2.0}};
    return FvPath::validate(raw);
  }
  if (name == "stair") {
    reject_unknown_params(spec, {});
    RawPathSpec raw;
    raw.breakpoints = {0.0, 1.0, 2.0, 3.0};
    raw.segments = {{0.0}, {1.0}, {2.0}};
    raw.jumps = {{1, 1.0}, {2, 1.0}, {3, 1.0}};
    return FvPath::validate(raw);
  }
  if (name == "jumpmid") {
    reject_unknown_params(spec, {});
    RawPathSpec raw;
    raw.breakpoints = {0.0, 1.0, 2.0};
    raw.segments = {{0.0, 2.0}, {0.5, 1.0}};
    raw.jumps = {{1, -1.5}};
    return FvPath::validate(raw);
  }
  if (name == "parab") {
    reject_unknown_params(spec, {});
    RawPathSpec raw;
    raw.breakpoints = {0.0, 2.0};
    raw.segments = {{1.0, -2.0, 1.0}};
    return FvPath::validate(raw);
  }
  if (name == "negparab") {
    reject_unknown_params(spec, {});
    RawPathSpec raw;
    raw.breakpoints = {0.0, 2.0};
    raw.segments = {{-1.0, 2.0, -1.0}};
    return FvPath::validate(raw);
  }
  if (name == "cantor") {
    reject_unknown_params(spec, {"n"});
    const double n = param_or(spec.params, "n", 4.0);
    if (n != std::floor(n)) throw InvalidParameter("cantor: n must be an integer");
    return cantor_approximation(static_cast<int>(n));
  }
  throw UnknownFixture("unknown fixture '" + spec.name + "'");
}

FvPath make_fixture(const std::string& name) { return make_fixture(FixtureSpec{name, {}}); }

std::vector<std::pair<std::string, FvPath>> default_fixture_corpus() {
  std::vector<std::pair<std::string, FvPath>> corpus;
  for (const char* name :
       {"const", "drift", "zigzag", "stair", "jumpmid", "parab", "negparab", "cantor"}) {
    corpus.emplace_back(name, make_fixture(name));
  }
  return corpus;
}

FvPath random_path(const RandomPathParams& params) {
  if (params.max_breakpoints < 1) {
    throw InvalidParameter("random_path: max_breakpoints must be >= 1");
  }
  if (params.max_degree < 0 || params.max_degree > 6) {
    throw InvalidParameter("random_path: max_degree must be in 0..6");
  }
  if (params.jump_probability < 0.0 || params.jump_probability > 1.0) {
    throw InvalidParameter("random_path: jump_probability must be in [0, 1]");
  }
  if (!(params.value_scale > 0.0)) {
    throw InvalidParameter("random_path: value_scale must be positive");
  }

  SplitMix64 rng(params.seed);

  // Draw order (frozen): segment count, then all segment lengths, then the
  // start value, then per segment the degree, its nonconstant coefficients,
  // and the jump decision at its right breakpoint.
  int count = 1 + static_cast<int>(rng.uniform() * params.max_breakpoints);
  count = std::clamp(count, 1, params.max_breakpoints);

  std::vector<double> lengths(static_cast<std::size_t>(count));
  for (double& len : lengths) len = 0.1 + rng.uniform();

  RawPathSpec spec;
  spec.breakpoints.push_back(0.0);
  for (double len : lengths) spec.breakpoints.push_back(spec.breakpoints.back() + len);

  double value = (2.0 * rng.uniform() - 1.0) * params.value_scale;
  for (int i = 0; i < count; ++i) {
    int degree = static_cast<int>(rng.uniform() * (params.max_degree + 1));
    degree = std::clamp(degree, 0, params.max_degree);
    std::vector<double> coeffs{value};
    for (int k = 1; k <= degree; ++k) {
      coeffs.push_back((2.0 * rng.uniform() - 1.0) * params.value_scale *
                       std::ldexp(1.0, -k));
    }
    const double end = Polynomial(coeffs)(lengths[static_cast<std::size_t>(i)]);
    spec.segments.push_back(std::move(coeffs));

    if (rng.uniform() < params.jump_probability) {
      // Jump sizes stay away from zero so validation never sees an ambiguous
      // declaration.
      const double magnitude = (0.05 + 0.95 * rng.uniform()) * params.value_scale;
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      const double jump = sign * magnitude;
      spec.jumps[static_cast<std::size_t>(i + 1)] = jump;
      value = end + jump;
    } else {
      value = end;
    }
  }
  return FvPath::validate(spec);
}

}  // namespace fvlt
