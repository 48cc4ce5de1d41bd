#include "fvlt/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "fvlt/levels.hpp"
#include "fvlt/occupation.hpp"
#include "fvlt/serialization.hpp"
#include "fvlt/version.hpp"

namespace fvlt {

namespace {

constexpr double kIdentityRel = 1e-9;

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Excluded: return "excluded";
  }
  return "?";
}

// Rejection-samples a level that is simple, away from V(0) and V(t), and
// carries no touch events, so every indicator identity applies.
bool sample_checkable_level(const FvPath& path, double t, SplitMix64& rng, double* out) {
  const double lo = path.min_value();
  const double hi = path.max_value();
  const double margin = 0.1 * (1.0 + hi - lo);
  const double tol = path.level_tolerance();
  const double v0 = path.eval(0.0).value;
  const double vt = path.eval(t).value;
  for (int attempt = 0; attempt < 200; ++attempt) {
    const double x = (lo - margin) + rng.uniform() * (hi - lo + 2.0 * margin);
    if (!classify_level(path, x, t).simple()) continue;
    if (std::abs(x - v0) <= 2.0 * tol || std::abs(x - vt) <= 2.0 * tol) continue;
    const auto events = level_events(path, x, t);
    if (std::any_of(events.begin(), events.end(),
                    [](const CrossingEvent& e) { return e.kind == CrossingKind::Touch; })) {
      continue;
    }
    *out = x;
    return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<std::string, Polynomial>> cov_test_functions(SplitMix64& rng) {
  std::vector<std::pair<std::string, Polynomial>> fs;
  fs.emplace_back("x", Polynomial({0.0, 1.0}));
  fs.emplace_back("x^2", Polynomial({0.0, 0.0, 1.0}));
  fs.emplace_back("x^3", Polynomial({0.0, 0.0, 0.0, 1.0}));
  fs.emplace_back("x^4-2x^2", Polynomial({0.0, 0.0, -2.0, 0.0, 1.0}));
  std::vector<double> coeffs;
  for (int k = 0; k < 5; ++k) coeffs.push_back(2.0 * rng.uniform() - 1.0);
  coeffs.push_back(0.25 + 0.75 * rng.uniform());  // leading coefficient kept away from 0
  fs.emplace_back("rand5", Polynomial(std::move(coeffs)));
  return fs;
}

VerificationReport run_verification(const FvPath& path, const VerifyOptions& options) {
  VerificationReport report;
  report.path_hash = path_identity_hash(path);
  report.tool_version = kToolVersion;
  report.tolerance_scale = options.tolerance_scale;

  const double horizon = path.horizon();
  SplitMix64 rng(options.sample_seed);
  const auto fs = cov_test_functions(rng);

  // Change-of-variables pair over ten horizons, plus agreement of the two
  // right-hand sides with each other.
  for (int k = 1; k <= 10; ++k) {
    const double t = horizon * (static_cast<double>(k) / 10.0);
    const LocalTimeProfile profile = build_profile(path, t);
    for (const auto& [fname, f] : fs) {
      CovChecks pair = check_cov_pair(path, f, t, profile, options.tolerance_scale);
      const std::string suffix = " f=" + fname + " t=" + std::to_string(k) + "/10";
      pair.via_stieltjes.name += suffix;
      pair.via_density.name += suffix;

      IdentityCheck agree;
      agree.name = "cov_rhs_agreement" + suffix;
      agree.lhs = pair.via_stieltjes.rhs;
      agree.rhs = pair.via_density.rhs;
      agree.tolerance = pair.via_stieltjes.tolerance;
      agree.residual = std::abs(agree.lhs - agree.rhs);
      agree.verdict = agree.residual <= agree.tolerance ? Verdict::Pass : Verdict::Fail;

      report.checks.push_back(std::move(pair.via_stieltjes));
      report.checks.push_back(std::move(pair.via_density));
      report.checks.push_back(std::move(agree));
    }
  }

  // Indicator identities at sampled simple levels.
  for (int k = 0; k < options.tanaka_levels; ++k) {
    double x = 0.0;
    if (!sample_checkable_level(path, horizon, rng, &x)) break;
    TanakaChecks tk = check_tanaka_signed(path, x, horizon);
    report.checks.push_back(std::move(tk.standard));
    report.checks.push_back(std::move(tk.alternative));
    report.checks.push_back(check_tanaka_absolute(path, x, horizon));
  }

  // Occupation-density check on sampled intervals avoiding critical values.
  {
    const LocalTimeProfile profile = build_profile(path, horizon);
    const std::vector<double> critical = critical_values(path, horizon);
    const double lo = path.min_value();
    const double hi = path.max_value();
    const double margin = 0.1 * (1.0 + hi - lo);
    const double avoid = 1e-6 * (1.0 + hi - lo);
    const double w = path.total_variation(horizon).total;
    const double tolerance = kIdentityRel * (1.0 + w) * options.tolerance_scale;

    int produced = 0;
    for (int attempt = 0; attempt < 200 * options.density_intervals &&
                          produced < options.density_intervals;
         ++attempt) {
      double a = (lo - margin) + rng.uniform() * (hi - lo + 2.0 * margin);
      double b = (lo - margin) + rng.uniform() * (hi - lo + 2.0 * margin);
      if (a > b) std::swap(a, b);
      if (b - a < 1e-3 * (1.0 + hi - lo)) continue;
      const bool clear = std::none_of(critical.begin(), critical.end(), [&](double c) {
        return std::abs(a - c) <= avoid || std::abs(b - c) <= avoid;
      });
      if (!clear) continue;

      const DensityResiduals res = verify_density(path, profile, a, b);
      const std::string suffix = " [" + short_number(a) + "," + short_number(b) + "]";
      IdentityCheck signed_check;
      signed_check.name = "density_signed" + suffix;
      signed_check.lhs = res.signed_residual;
      signed_check.rhs = 0.0;
      signed_check.residual = res.signed_residual;
      signed_check.tolerance = tolerance;
      signed_check.verdict = signed_check.residual <= tolerance ? Verdict::Pass : Verdict::Fail;
      IdentityCheck abs_check = signed_check;
      abs_check.name = "density_absolute" + suffix;
      abs_check.lhs = res.absolute_residual;
      abs_check.residual = res.absolute_residual;
      abs_check.verdict = abs_check.residual <= tolerance ? Verdict::Pass : Verdict::Fail;
      report.checks.push_back(std::move(signed_check));
      report.checks.push_back(std::move(abs_check));
      ++produced;
    }

    report.checks.push_back(check_crossing_integral(path, profile, options.tolerance_scale));

    // Profile mass identities at the horizon.
    const std::vector<TimedJump> jumps = path.jumps_up_to(horizon);
    double jump_total = 0.0;
    for (const TimedJump& j : jumps) jump_total += j.size;
    const double continuous_change = path.eval(horizon).value - jump_total - path.eval(0.0).value;

    double net = 0.0, abs_mass = 0.0;
    if (profile.cell_boundaries.size() >= 2) {
      const ProfileIntegral pi = integrate_against_profile(
          profile, Polynomial::constant(1.0), profile.cell_boundaries.front(),
          profile.cell_boundaries.back());
      net = pi.net;
      abs_mass = pi.abs;
    }
    IdentityCheck mass_signed;
    mass_signed.name = "mass_signed";
    mass_signed.lhs = net;
    mass_signed.rhs = continuous_change;
    mass_signed.tolerance =
        kIdentityRel * (1.0 + std::max(std::abs(net), std::abs(continuous_change)) + 0.1 * w) *
        options.tolerance_scale;
    mass_signed.residual = std::abs(mass_signed.lhs - mass_signed.rhs);
    mass_signed.verdict =
        mass_signed.residual <= mass_signed.tolerance ? Verdict::Pass : Verdict::Fail;
    report.checks.push_back(std::move(mass_signed));

    IdentityCheck mass_abs;
    mass_abs.name = "mass_absolute";
    mass_abs.lhs = abs_mass;
    mass_abs.rhs = path.total_variation(horizon).continuous;
    mass_abs.tolerance =
        kIdentityRel * (1.0 + mass_abs.rhs) * options.tolerance_scale;
    mass_abs.residual = std::abs(mass_abs.lhs - mass_abs.rhs);
    mass_abs.verdict = mass_abs.residual <= mass_abs.tolerance ? Verdict::Pass : Verdict::Fail;
    report.checks.push_back(std::move(mass_abs));
  }

  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const IdentityCheck& a, const IdentityCheck& b) {
                     if (a.name != b.name) return a.name < b.name;
                     const double la = std::isnan(a.level) ? -1e300 : a.level;
                     const double lb = std::isnan(b.level) ? -1e300 : b.level;
                     return la < lb;
                   });
  for (const IdentityCheck& c : report.checks) {
    switch (c.verdict) {
      case Verdict::Pass: ++report.passed; break;
      case Verdict::Fail: ++report.failed; break;
      case Verdict::Excluded: ++report.excluded; break;
    }
  }
  return report;
}

std::string report_to_json_text(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const IdentityCheck& c : report.checks) {
    nlohmann::json j{{"name", c.name},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"residual", c.residual},
                     {"tolerance", c.tolerance},
                     {"verdict", verdict_name(c.verdict)}};
    if (!std::isnan(c.level)) j["level"] = c.level;
    if (!c.notes.empty()) j["notes"] = c.notes;
    checks.push_back(std::move(j));
  }
  nlohmann::json j{{"schema_version", 1},
                   {"tool_version", report.tool_version},
                   {"path_hash", report.path_hash},
                   {"tolerance_scale", report.tolerance_scale},
                   {"summary",
                    {{"pass", report.passed}, {"fail", report.failed},
                     {"excluded", report.excluded}}},
                   {"checks", std::move(checks)}};
  return j.dump(2) + "\n";
}

std::string report_summary_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "path " << report.path_hash << ": " << report.checks.size() << " checks, "
     << report.passed << " pass, " << report.failed << " fail, " << report.excluded
     << " excluded\n";
  for (const IdentityCheck& c : report.checks) {
    if (c.verdict != Verdict::Fail) continue;
    os << "  FAIL " << c.name;
    if (!std::isnan(c.level)) os << " level=" << short_number(c.level);
    os << ": lhs=" << short_number(c.lhs) << " rhs=" << short_number(c.rhs)
       << " residual=" << short_number(c.residual) << " tolerance=" << short_number(c.tolerance);
    if (!c.notes.empty()) os << " (" << c.notes << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace fvlt
