#include "qacc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "qacc/errors.hpp"
#include "qacc/modes.hpp"

namespace qacc::experiments {

namespace {

constexpr double kMinimumAL = 0.02;
constexpr double kConformalWindowAL = 0.3;
constexpr int kBisectionSteps = 60;
constexpr double kBisectionRelWidth = 1e-9;

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + text + "' in grid spec");
  }
}

}  // namespace

std::string_view to_string(SweepMode mode) {
  return mode == SweepMode::Vacuum ? "vacuum" : "stimulated_per_photon";
}

std::string_view to_string(Frame frame) {
  switch (frame) {
    case Frame::InertialCavityFrame:
      return "inertial-cavity-frame";
    case Frame::AcceleratedCavityFrame:
      return "accelerated-cavity-frame";
    case Frame::Indistinguishable:
      break;
  }
  return "indistinguishable";
}

double SweepConfig::resolved_gap() const {
  if (gap) return *gap;
  return modes::inertial_frequency(1, PhysicalParams{length, mass, 1.0, 0, 0.0});
}

PhysicalParams SweepConfig::at(double acceleration) const {
  PhysicalParams p{length, mass, resolved_gap(), occupation, acceleration};
  p.validate();
  return p;
}

AccelerationGrid AccelerationGrid::default_for(double length) {
  return {kMinimumAL / length, 1.8 / length, 60, true};
}

AccelerationGrid AccelerationGrid::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
  if (parts.size() != 4) throw UsageError("grid spec must be lo:hi:n:log|lin, got '" + spec + "'");
  AccelerationGrid grid;
  grid.lo = parse_number(parts[0], "lower bound");
  grid.hi = parse_number(parts[1], "upper bound");
  const double n = parse_number(parts[2], "point count");
  if (n != std::floor(n) || n < 1 || n > 100000) throw UsageError("bad grid point count");
  grid.points = static_cast<int>(n);
  if (parts[3] == "log") {
    grid.logarithmic = true;
  } else if (parts[3] == "lin") {
    grid.logarithmic = false;
  } else {
    throw UsageError("grid spacing must be log or lin, got '" + parts[3] + "'");
  }
  return grid;
}

std::vector<double> AccelerationGrid::values(double length) const {
  if (points < 1) throw DomainError("grid needs at least one point");
  if (!(lo > 0.0) || (points > 1 && !(hi > lo))) throw DomainError("grid must have 0 < lo < hi");
  if (lo * length < kMinimumAL * (1.0 - 1e-12)) {
    throw DomainError("grid starts below a*L = 0.02");
  }
  if (hi * length >= 2.0) throw HorizonError("grid reaches the horizon a*L = 2");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    out.push_back(logarithmic ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f);
  }
  out.back() = points == 1 ? lo : hi;
  return out;
}

Panel parse_panel(std::string_view text) {
  if (text == "a") return Panel::A;
  if (text == "b") return Panel::B;
  if (text == "c") return Panel::C;
  throw UsageError("panel must be a, b or c");
}

SweepConfig panel_config(Panel panel) {
  SweepConfig config;
  config.length = 1.0;
  config.mass = panel == Panel::C ? 2.0 : 0.2;
  config.occupation = panel == Panel::A ? 0 : 1;
  return config;
}

SweepMode panel_mode(Panel panel) {
  return panel == Panel::A ? SweepMode::Vacuum : SweepMode::StimulatedPerPhoton;
}

response::ProbabilityBreakdown evaluate(Scenario scenario, const SweepConfig& config,
                                        SweepMode mode, double acceleration) {
  PhysicalParams params = config.at(acceleration);
  response::ResponseOptions options;
  options.normalization = config.normalization;
  if (mode == SweepMode::Vacuum) {
    params.occupation = 0;
    return response::transition_probability(scenario, params, config.k_max, config.tol, options);
  }
  return response::stimulated_only_probability(scenario, params, config.tol, options);
}

double relative_deviation(double p_rob, double p_bob) {
  const double scale = std::max(p_rob, p_bob);
  return scale > 0.0 ? std::abs(p_bob - p_rob) / scale : 0.0;
}

SweepTable sweep(const SweepConfig& config, const AccelerationGrid& grid, SweepMode mode,
                 Scenario first, Scenario second, unsigned threads) {
  SweepTable table{config, grid, mode, {}};
  const auto accelerations = grid.values(config.length);
  table.rows.resize(accelerations.size());

  auto compute_row = [&](std::size_t i) {
    SweepRow& row = table.rows[i];
    row.a = accelerations[i];
    row.p_rob = row.p_bob = std::numeric_limits<double>::quiet_NaN();
    auto run = [&](Scenario s, double& p, double& tail, const char* tag) {
      try {
        const auto result = evaluate(s, config, mode, row.a);
        p = result.total;
        tail = result.tail_estimate;
        if (result.truncation_flagged()) row.flags.push_back(std::string(tag) + "_tail");
      } catch (const std::exception& e) {
        row.flags.push_back(std::string(tag) + "_error:" + e.what());
      }
    };
    run(first, row.p_rob, row.rob_tail, "rob");
    run(second, row.p_bob, row.bob_tail, "bob");
    if (row.p_rob > 0.0 && std::isfinite(row.p_bob)) {
      row.ratio = row.p_bob / row.p_rob;
    } else {
      row.ratio = std::numeric_limits<double>::quiet_NaN();
      row.flags.push_back("ratio_undefined");
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(accelerations.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < accelerations.size(); ++i) compute_row(i);
    return table;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < accelerations.size(); i = next++) compute_row(i);
      });
    }
  }
  return table;
}

ConformalReport conformal_check(const AccelerationGrid& grid, double small_mass,
                                SweepConfig base) {
  if (small_mass > 0.05) throw DomainError("conformal_check needs m <= 0.05");
  base.mass = small_mass;
  const SweepTable table = sweep(base, grid, SweepMode::Vacuum);
  ConformalReport report;
  for (const auto& row : table.rows) {
    if (!row.flags.empty() && (!std::isfinite(row.p_rob) || !std::isfinite(row.p_bob))) {
      throw ConvergenceError("conformal_check: grid point a = " + std::to_string(row.a) +
                             " failed: " + row.flags.front());
    }
    const double dev = relative_deviation(row.p_rob, row.p_bob);
    report.accelerations.push_back(row.a);
    report.deviations.push_back(dev);
    if (row.a * base.length <= kConformalWindowAL * (1.0 + 1e-12)) {
      report.max_deviation = std::max(report.max_deviation, dev);
    }
  }
  return report;
}

ReferenceCurve reference_curve(Scenario scenario, const SweepConfig& config, SweepMode mode,
                               double a_lo, double a_hi, int points) {
  const AccelerationGrid grid{a_lo, a_hi, points, true};
  ReferenceCurve curve{scenario, config, mode, grid.values(config.length), {}};
  for (double a : curve.a) curve.p.push_back(evaluate(scenario, config, mode, a).total);
  return curve;
}

AccelerationEstimate estimate_acceleration(double p_measured, const ReferenceCurve& curve) {
  if (curve.a.empty() || curve.a.size() != curve.p.size()) {
    throw DomainError("reference curve is empty or malformed");
  }
  const auto [lo_it, hi_it] = std::minmax_element(curve.p.begin(), curve.p.end());
  if (p_measured < *lo_it || p_measured > *hi_it) {
    std::ostringstream msg;
    msg << "p = " << p_measured << " outside the curve range [" << *lo_it << ", " << *hi_it
        << "]";
    throw OutOfRangeError(msg.str());
  }

  auto residual = [&](double a) {
    return evaluate(curve.scenario, curve.config, curve.mode, a).total - p_measured;
  };

  AccelerationEstimate out;
  const std::size_t n = curve.a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double d0 = curve.p[i] - p_measured;
    if (d0 == 0.0) {
      out.candidates.push_back(curve.a[i]);
      continue;
    }
    if (i + 1 == n) break;
    const double d1 = curve.p[i + 1] - p_measured;
    if (d1 == 0.0 || (d0 < 0.0) == (d1 < 0.0)) continue;
    double lo = curve.a[i];
    double hi = curve.a[i + 1];
    double f_lo = d0;
    for (int step = 0; step < kBisectionSteps && hi - lo > kBisectionRelWidth * hi; ++step) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = residual(mid);
      if (f_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    out.candidates.push_back(0.5 * (lo + hi));
  }
  std::sort(out.candidates.begin(), out.candidates.end());
  out.multi_valued = out.candidates.size() > 1;
  return out;
}

FrameClassification discriminate_frame(double p_measured, const SweepConfig& config,
                                       SweepMode mode, double a_lo, double a_hi, int points,
                                       double band) {
  auto admit = [&](Scenario scenario) -> std::vector<double> {
    const ReferenceCurve curve = reference_curve(scenario, config, mode, a_lo, a_hi, points);
    try {
      return estimate_acceleration(p_measured, curve).candidates;
    } catch (const OutOfRangeError&) {
      std::vector<double> near;
      for (std::size_t i = 0; i < curve.p.size(); ++i) {
        if (std::abs(curve.p[i] - p_measured) <= band * std::abs(p_measured)) {
          near.push_back(curve.a[i]);
        }
      }
      return near;
    }
  };

  FrameClassification out;
  out.rob_candidates = admit(Scenario::AcceleratedDetector);
  out.bob_candidates = admit(Scenario::InertialDetectorAcceleratedCavity);
  const bool rob = !out.rob_candidates.empty();
  const bool bob = !out.bob_candidates.empty();
  if (rob && !bob) {
    out.frame = Frame::InertialCavityFrame;
  } else if (bob && !rob) {
    out.frame = Frame::AcceleratedCavityFrame;
  } else {
    out.frame = Frame::Indistinguishable;
  }
  return out;
}

}  // namespace qacc::experiments
