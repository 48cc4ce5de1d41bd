#include "fvlt/path.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fvlt/errors.hpp"
#include "fvlt/roots.hpp"

namespace fvlt {

namespace {

constexpr double kContinuityRel = 1e-9;   // tau_cont scale
constexpr double kLevelRel = 1e-10;       // tau_level scale

std::string format_time(double t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

}  // namespace

StepFunction::StepFunction(std::vector<double> times, std::vector<double> cumulative)
    : times_(std::move(times)), cumulative_(std::move(cumulative)) {}

double StepFunction::operator()(double t) const {
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  if (it == times_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

FvPath FvPath::validate(const RawPathSpec& spec, const ValidationConfig& config) {
  const std::size_t n = spec.segments.size();
  if (spec.breakpoints.size() < 2 || n == 0 || spec.breakpoints.size() != n + 1) {
    throw InvalidDocument("breakpoints/segments: need n >= 1 segments and n+1 breakpoints");
  }
  if (spec.breakpoints.front() != 0.0) {
    throw InvalidDocument("breakpoints: first breakpoint must be 0");
  }
  for (std::size_t i = 0; i + 1 < spec.breakpoints.size(); ++i) {
    if (!(spec.breakpoints[i] < spec.breakpoints[i + 1])) {
      throw NonMonotoneBreakpoints("breakpoints: not strictly increasing at index " +
                                   std::to_string(i + 1));
    }
  }

  FvPath path;
  path.breakpoints_ = spec.breakpoints;
  path.segments_.reserve(n);
  double max_coeff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p(spec.segments[i]);
    if (p.degree() > config.max_degree) {
      throw DegreeTooHigh("segments[" + std::to_string(i) + "]: degree " +
                          std::to_string(p.degree()) + " exceeds maximum " +
                          std::to_string(config.max_degree));
    }
    max_coeff = std::max(max_coeff, p.max_abs_coefficient());
    path.segments_.push_back(std::move(p));
  }
  const double tau_cont = kContinuityRel * (1.0 + max_coeff);

  for (const auto& [index, size] : spec.jumps) {
    if (index == 0) throw InvalidDocument("jumps: no jump may be declared at t = 0");
    if (index > n) {
      throw InvalidDocument("jumps: breakpoint index " + std::to_string(index) +
                            " out of range");
    }
    if (std::abs(size) <= tau_cont) {
      throw ZeroJump("jumps: size at breakpoint index " + std::to_string(index) +
                     " is zero (or below continuity tolerance)");
    }
  }

  // Breakpoint consistency: declared jumps must match the segment data,
  // undeclared breakpoints must be continuous.
  for (std::size_t i = 1; i <= n; ++i) {
    const double left = path.segments_[i - 1](path.breakpoints_[i] - path.breakpoints_[i - 1]);
    const auto it = spec.jumps.find(i);
    if (i == n) {
      if (it != spec.jumps.end()) path.jumps_[i] = it->second;
      continue;
    }
    const double right = path.segments_[i](0.0);
    const double actual = right - left;
    if (it == spec.jumps.end()) {
      if (std::abs(actual) > tau_cont) {
        throw ContinuityViolation("breakpoint t=" + format_time(path.breakpoints_[i]) +
                                  ": gap " + format_time(actual) + " with no declared jump");
      }
    } else {
      if (std::abs(actual - it->second) > tau_cont) {
        throw ContinuityViolation("breakpoint t=" + format_time(path.breakpoints_[i]) +
                                  ": declared jump " + format_time(it->second) +
                                  " disagrees with segment data " + format_time(actual));
      }
      if (std::abs(actual) <= tau_cont) {
        throw ZeroJump("breakpoint t=" + format_time(path.breakpoints_[i]) +
                       ": declared jump but segments are continuous");
      }
      path.jumps_[i] = actual;
    }
  }

  // Monotone decomposition of each segment. Only sign changes of the
  // derivative split a piece; even-multiplicity derivative roots do not.
  path.monotone_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double len = path.segment_length(i);
    const Polynomial& p = path.segments_[i];
    std::vector<double> cuts;
    const Polynomial dp = p.derivative();
    if (dp.degree() >= 1) cuts = sign_change_points(dp, 0.0, len);
    double u0 = 0.0;
    for (std::size_t k = 0; k <= cuts.size(); ++k) {
      const double u1 = (k < cuts.size()) ? cuts[k] : len;
      const double diff = p(u1) - p(u0);
      const int dir = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
      path.monotone_[i].push_back({u0, u1, dir});
      u0 = u1;
    }
  }

  // Value range over [0, T], final jump included.
  bool first = true;
  auto take = [&](double v) {
    if (first) {
      path.min_value_ = path.max_value_ = v;
      first = false;
    } else {
      path.min_value_ = std::min(path.min_value_, v);
      path.max_value_ = std::max(path.max_value_, v);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const ValueRange r = value_range(path.segments_[i], 0.0, path.segment_length(i));
    take(r.lo);
    take(r.hi);
  }
  if (auto it = path.jumps_.find(n); it != path.jumps_.end()) {
    take(path.segments_[n - 1](path.segment_length(n - 1)) + it->second);
  }

  return path;
}

double FvPath::level_tolerance() const {
  return kLevelRel * (1.0 + std::max(std::abs(min_value_), std::abs(max_value_)));
}

Evaluation FvPath::eval(double t) const {
  if (t < 0.0 || t > horizon()) {
    throw OutOfDomain("eval: t=" + format_time(t) + " outside [0, " +
                      format_time(horizon()) + "]");
  }
  const std::size_t n = segments_.size();
  if (t == horizon()) {
    const double u = t - breakpoints_[n - 1];
    const double left = segments_[n - 1](u);
    const auto it = jumps_.find(n);
    const double value = left + (it != jumps_.end() ? it->second : 0.0);
    return {value, left};
  }
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  const double u = t - breakpoints_[i];
  const double value = segments_[i](u);
  double left = value;
  if (u == 0.0 && i > 0) {
    left = segments_[i - 1](breakpoints_[i] - breakpoints_[i - 1]);
  }
  return {value, left};
}

std::vector<TimedJump> FvPath::jumps_up_to(double t) const {
  if (t < 0.0 || t > horizon()) {
    throw OutOfDomain("jumps_up_to: t=" + format_time(t) + " outside [0, " +
                      format_time(horizon()) + "]");
  }
  std::vector<TimedJump> out;
  for (const auto& [index, size] : jumps_) {
    const double time = breakpoints_[index];
    if (time > t) break;
    out.push_back({time, size});
  }
  return out;
}

Variation FvPath::total_variation(double t) const {
  if (t < 0.0 || t > horizon()) {
    throw OutOfDomain("total_variation: t=" + format_time(t) + " outside [0, " +
                      format_time(horizon()) + "]");
  }
  double continuous = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (breakpoints_[i] >= t) break;
    const double u_max = std::min(segment_length(i), t - breakpoints_[i]);
    for (const MonotonePiece& piece : monotone_[i]) {
      if (piece.u_begin >= u_max) break;
      const double u1 = std::min(piece.u_end, u_max);
      continuous += std::abs(segments_[i](u1) - segments_[i](piece.u_begin));
    }
  }
  double jump_sum = 0.0;
  for (const TimedJump& j : jumps_up_to(t)) jump_sum += std::abs(j.size);
  return {continuous + jump_sum, continuous};
}

RawPathSpec FvPath::raw() const {
  RawPathSpec spec;
  spec.breakpoints = breakpoints_;
  spec.segments.reserve(segments_.size());
  for (const Polynomial& p : segments_) spec.segments.push_back(p.coefficients());
  spec.jumps = jumps_;
  return spec;
}

PathDecomposition decompose(const FvPath& path) {
  const std::size_t n = path.segment_count();

  std::vector<double> times, cumulative;
  double cum = 0.0;
  for (const auto& [index, size] : path.jumps()) {
    cum += size;
    times.push_back(path.breakpoints()[index]);
    cumulative.push_back(cum);
  }

  // Continuous part: shift each segment's constant coefficient down by the
  // jumps accumulated strictly before or at its start.
  RawPathSpec spec;
  spec.breakpoints.assign(path.breakpoints().begin(), path.breakpoints().end());
  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto it = path.jumps().find(i); it != path.jumps().end()) shift += it->second;
    std::vector<double> coeffs = path.segment(i).coefficients();
    if (coeffs.empty()) coeffs.push_back(0.0);
    coeffs[0] -= shift;
    spec.segments.push_back(std::move(coeffs));
  }

  ValidationConfig config;
  for (std::size_t i = 0; i < n; ++i) {
    config.max_degree = std::max(config.max_degree, path.segment(i).degree());
  }
  PathDecomposition d{FvPath::validate(spec, config),
                      StepFunction(std::move(times), std::move(cumulative))};
  return d;
}

}  // namespace fvlt
