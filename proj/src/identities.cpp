#include "fvlt/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fvlt/errors.hpp"
#include "fvlt/levels.hpp"
#include "fvlt/roots.hpp"
#include "fvlt/stieltjes.hpp"

namespace fvlt {

namespace {

constexpr double kIdentityRel = 1e-9;

double jump_sum(const FvPath& path, const Polynomial& f, double t) {
  double sum = 0.0;
  for (const TimedJump& j : path.jumps_up_to(t)) {
    const Evaluation v = path.eval(j.time);
    sum += f(v.value) - f(v.left_limit);
  }
  return sum;
}

void finish(IdentityCheck& check) {
  check.residual = std::abs(check.lhs - check.rhs);
  if (check.verdict != Verdict::Excluded) {
    check.verdict = check.residual <= check.tolerance ? Verdict::Pass : Verdict::Fail;
  }
}

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

double identity_tolerance(const FvPath& path, const Polynomial& f, double tolerance_scale) {
  const ValueRange r = value_range(f.derivative(), path.min_value(), path.max_value());
  const double max_slope = std::max(std::abs(r.lo), std::abs(r.hi));
  return kIdentityRel * (1.0 + path.total_variation(path.horizon()).total + max_slope) *
         tolerance_scale;
}

CovChecks check_cov_pair(const FvPath& path, const Polynomial& f, double t,
                         double tolerance_scale) {
  return check_cov_pair(path, f, t, build_profile(path, t), tolerance_scale);
}

CovChecks check_cov_pair(const FvPath& path, const Polynomial& f, double t,
                         const LocalTimeProfile& profile, double tolerance_scale) {
  const double lhs = f(path.eval(t).value) - f(path.eval(0.0).value);
  const double jumps = jump_sum(path, f, t);
  const Polynomial df = f.derivative();
  const double tolerance = identity_tolerance(path, f, tolerance_scale);

  CovChecks out;
  out.via_stieltjes.name = "cov_stieltjes";
  out.via_stieltjes.lhs = lhs;
  out.via_stieltjes.rhs = integrate_along_continuous(path, df, t).signed_part + jumps;
  out.via_stieltjes.tolerance = tolerance;
  finish(out.via_stieltjes);

  double density_part = 0.0;
  if (profile.cell_boundaries.size() >= 2) {
    density_part = integrate_against_profile(profile, df, profile.cell_boundaries.front(),
                                             profile.cell_boundaries.back())
                       .net;
  }
  out.via_density.name = "cov_density";
  out.via_density.lhs = lhs;
  out.via_density.rhs = density_part + jumps;
  out.via_density.tolerance = tolerance;
  finish(out.via_density);
  return out;
}

TanakaChecks check_tanaka_signed(const FvPath& path, double level, double t) {
  const std::vector<CrossingEvent> events = level_events(path, level, t);
  const double tol = path.level_tolerance();
  const double v0 = path.eval(0.0).value;
  const double vt = path.eval(t).value;

  int net = 0;
  bool one_sided = false;
  for (const CrossingEvent& ev : events) {
    if (ev.kind == CrossingKind::ContinuousUp) ++net;
    if (ev.kind == CrossingKind::ContinuousDown) --net;
    one_sided = one_sided || ev.one_sided;
  }

  auto above = [&](double v) { return v >= level ? 1 : 0; };
  auto below = [&](double v) { return v < level ? 1 : 0; };
  int jump_above = 0, jump_below = 0;
  for (const TimedJump& j : path.jumps_up_to(t)) {
    const Evaluation v = path.eval(j.time);
    jump_above += above(v.value) - above(v.left_limit);
    jump_below += below(v.value) - below(v.left_limit);
  }

  const bool excluded = std::abs(level - v0) <= tol || std::abs(level - vt) <= tol;
  std::string notes;
  if (excluded) notes = "level excluded: coincides with V(0) or V(t)";
  if (one_sided) {
    if (!notes.empty()) notes += "; ";
    notes += "event at the horizon classified from the left side";
  }

  TanakaChecks out;
  out.standard.name = "tanaka_standard";
  out.standard.level = level;
  out.standard.lhs = above(vt);
  out.standard.rhs = above(v0) + net + jump_above;
  out.standard.tolerance = 0.0;
  out.standard.notes = notes;
  if (excluded) out.standard.verdict = Verdict::Excluded;
  finish(out.standard);

  out.alternative.name = "tanaka_alternative";
  out.alternative.level = level;
  out.alternative.lhs = below(vt);
  out.alternative.rhs = below(v0) - net + jump_below;
  out.alternative.tolerance = 0.0;
  out.alternative.notes = notes;
  if (excluded) out.alternative.verdict = Verdict::Excluded;
  finish(out.alternative);
  return out;
}

double indicator_variation(const FvPath& path, double level, double t) {
  double variation = 0.0;
  for (const CrossingEvent& ev : level_events(path, level, t)) {
    switch (ev.kind) {
      case CrossingKind::Touch:
        if (ev.touch_side < 0) variation += 2.0;  // indicator spikes 0 -> 1 -> 0
        break;
      default:
        variation += 1.0;
    }
  }
  return variation;
}

IdentityCheck check_tanaka_absolute(const FvPath& path, double level, double t) {
  const std::vector<CrossingEvent> events = level_events(path, level, t);

  int abs_passages = 0, jump_crossings = 0;
  double variation = 0.0;
  std::vector<double> touch_times;
  bool one_sided = false;
  for (const CrossingEvent& ev : events) {
    one_sided = one_sided || ev.one_sided;
    switch (ev.kind) {
      case CrossingKind::ContinuousUp:
      case CrossingKind::ContinuousDown:
        ++abs_passages;
        variation += 1.0;
        break;
      case CrossingKind::JumpUp:
      case CrossingKind::JumpDown:
        ++jump_crossings;
        variation += 1.0;
        break;
      case CrossingKind::Touch:
        touch_times.push_back(ev.time);
        if (ev.touch_side < 0) variation += 2.0;
        break;
    }
  }

  IdentityCheck check;
  check.name = "tanaka_absolute";
  check.level = level;
  check.lhs = variation;
  check.rhs = static_cast<double>(abs_passages + jump_crossings);
  check.tolerance = 0.0;
  if (!touch_times.empty()) {
    check.verdict = Verdict::Excluded;
    std::ostringstream os;
    os << "level excluded: touch at t=" << format_value(touch_times.front());
    if (touch_times.size() > 1) os << " (+" << touch_times.size() - 1 << " more)";
    check.notes = os.str();
  }
  if (one_sided) {
    if (!check.notes.empty()) check.notes += "; ";
    check.notes += "event at the horizon classified from the left side";
  }
  finish(check);
  return check;
}

IdentityCheck check_crossing_integral(const FvPath& path, double t, double tolerance_scale) {
  return check_crossing_integral(path, build_profile(path, t), tolerance_scale);
}

IdentityCheck check_crossing_integral(const FvPath& path, const LocalTimeProfile& profile,
                                      double tolerance_scale) {
  double integral = 0.0;
  if (profile.cell_boundaries.size() >= 2) {
    integral = integrate_against_profile(profile, Polynomial::constant(1.0),
                                         profile.cell_boundaries.front(),
                                         profile.cell_boundaries.back())
                   .crossings;
  }
  const double w = path.total_variation(profile.horizon).total;

  IdentityCheck check;
  check.name = "crossing_integral_bound";
  check.lhs = integral;
  check.rhs = w;
  check.tolerance = kIdentityRel * (1.0 + w) * tolerance_scale;
  check.residual = std::max(0.0, integral - w);
  check.verdict = check.residual <= check.tolerance ? Verdict::Pass : Verdict::Fail;
  check.notes = "gap=" + format_value(w - integral);
  return check;
}

}  // namespace fvlt
