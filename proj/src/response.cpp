#include "qacc/response.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qacc/errors.hpp"
#include "qacc/kinematics.hpp"
#include "qacc/quadrature.hpp"

namespace qacc::response {

namespace {

constexpr int kUniformPieces = 8;
constexpr int kEdgeLevels = 6;
constexpr int kRateSamples = 64;
constexpr double kCancellationFloor = 1e-12;
// Edge clustering for the inertial detector once the window approaches the
// horizon.
constexpr double kClusterAboveAL = 1.5;

struct Piece {
  double lo;
  double hi;
  std::size_t panels;
};

std::vector<Piece> partition(double half_window, bool cluster_edges) {
  std::vector<double> cuts;
  const double width = 2.0 * half_window / kUniformPieces;
  for (int i = 0; i <= kUniformPieces; ++i) cuts.push_back(-half_window + i * width);
  if (cluster_edges) {
    for (int level = 1; level <= kEdgeLevels; ++level) {
      const double offset = width / static_cast<double>(1 << level);
      cuts.push_back(-half_window + offset);
      cuts.push_back(half_window - offset);
    }
    std::sort(cuts.begin(), cuts.end());
  }
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) pieces.push_back({cuts[i], cuts[i + 1], 1});
  return pieces;
}

double max_phase_rate(const RealFunction& phase, double lo, double hi) {
  const double step = (hi - lo) / kRateSamples;
  double previous = phase(lo);
  double rate = 0.0;
  for (int i = 1; i <= kRateSamples; ++i) {
    const double current = phase(lo + i * step);
    rate = std::max(rate, std::abs(current - previous) / step);
    previous = current;
  }
  return rate;
}

std::size_t total_nodes(const std::vector<Piece>& pieces) {
  std::size_t panels = 0;
  for (const auto& p : pieces) panels += p.panels;
  return panels * quadrature::kPanelOrder;
}

Complex evaluate(const std::vector<Piece>& pieces, const RealFunction& amplitude,
                 const RealFunction& phase) {
  auto integrand = [&](double s) { return std::polar(amplitude(s), phase(s)); };
  Complex sum{};
  for (const auto& p : pieces) {
    sum += quadrature::composite_gauss_legendre<Complex>(integrand, p.lo, p.hi, p.panels);
  }
  return sum;
}

double squared(const OscillatoryResult& r) { return std::norm(r.value); }

}  // namespace

OscillatoryResult oscillatory_integral(const RealFunction& amplitude, const RealFunction& phase,
                                       double half_window, double tol,
                                       const OscillatoryOptions& options) {
  if (!(half_window > 0.0) || !std::isfinite(half_window)) {
    throw DomainError("oscillatory_integral needs a finite window T > 0");
  }
  if (!(tol > 0.0)) throw DomainError("oscillatory_integral needs tol > 0");

  auto pieces = partition(half_window, options.cluster_edges);
  for (auto& p : pieces) {
    const double phase_span = max_phase_rate(phase, p.lo, p.hi) * (p.hi - p.lo);
    const double nodes = options.nodes_per_period * phase_span / (2.0 * std::numbers::pi);
    p.panels = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(nodes / quadrature::kPanelOrder)));
  }
  const std::size_t first = total_nodes(pieces);
  std::size_t scale = (options.min_nodes + first - 1) / first;
  scale = std::max<std::size_t>(scale, 1) * std::max<std::size_t>(options.base_refinement, 1);
  for (auto& p : pieces) p.panels *= scale;
  if (total_nodes(pieces) > options.node_cap) {
    throw ConvergenceError("oscillatory integral needs more than " +
                           std::to_string(options.node_cap) + " nodes");
  }

  double mass = 0.0;
  auto magnitude = [&](double s) { return std::abs(amplitude(s)); };
  for (const auto& p : pieces) {
    mass += quadrature::composite_gauss_legendre<double>(magnitude, p.lo, p.hi, p.panels);
  }

  Complex previous = evaluate(pieces, amplitude, phase);
  while (true) {
    for (auto& p : pieces) p.panels *= 2;
    const std::size_t nodes = total_nodes(pieces);
    if (nodes > options.node_cap) {
      throw ConvergenceError("oscillatory integral did not reach tol " + std::to_string(tol) +
                             " within " + std::to_string(options.node_cap) + " nodes");
    }
    const Complex current = evaluate(pieces, amplitude, phase);
    const double change = std::abs(current - previous);
    if (change <= std::max(tol * std::abs(current), kCancellationFloor * mass)) {
      return {current, nodes, change};
    }
    previous = current;
  }
}

OscillatoryResult mode_amplitude(const modes::InertialModeSet& inertial, int k, int sign,
                                 double tol, const OscillatoryOptions& options) {
  const PhysicalParams& params = inertial.params();
  const double a = params.acceleration;
  const double omega = params.gap;
  const double omega_k = inertial.frequency(k) * sign;
  const double half = kinematics::rob_window(params);
  auto amplitude = [&](double tau) { return inertial(k, kinematics::rob_worldline(a, tau).x); };
  auto phase = [&](double tau) {
    return omega * tau + omega_k * kinematics::rob_worldline(a, tau).t;
  };
  return oscillatory_integral(amplitude, phase, half, tol, options);
}

OscillatoryResult mode_amplitude(const modes::RindlerModeSet& rindler, int k, int sign,
                                 double tol, const OscillatoryOptions& options) {
  const PhysicalParams& params = rindler.params();
  const double a = params.acceleration;
  const double omega = params.gap;
  const double big_omega = rindler.frequency(k) * sign;
  const double half = kinematics::bob_window(params);
  auto amplitude = [&](double t) { return rindler(k, kinematics::bob_worldline(a, t).chi); };
  auto phase = [&](double t) {
    return omega * t + big_omega * kinematics::bob_worldline(a, t).tau;
  };
  OscillatoryOptions tuned = options;
  if (a * params.length > kClusterAboveAL) tuned.cluster_edges = true;
  return oscillatory_integral(amplitude, phase, half, tol, tuned);
}

bool ProbabilityBreakdown::truncation_flagged() const {
  return total > 0.0 && tail_estimate / total >= 0.01;
}

namespace {

template <class ModeSet>
ProbabilityBreakdown assemble(const ModeSet& modes, double tol, const ResponseOptions& options,
                              bool vacuum, double stimulated_weight) {
  ProbabilityBreakdown out;
  const int k_max = vacuum ? modes.k_max() : 1;
  out.k_max = k_max;
  out.vacuum_terms.assign(static_cast<std::size_t>(k_max), 0.0);
  if (vacuum) {
    for (int k = 1; k <= k_max; ++k) {
      const auto r = mode_amplitude(modes, k, +1, tol, options.quadrature);
      out.vacuum_terms[static_cast<std::size_t>(k - 1)] = squared(r);
      out.max_nodes = std::max(out.max_nodes, r.nodes);
    }
  }
  if (stimulated_weight > 0.0) {
    const auto co = mode_amplitude(modes, 1, +1, tol, options.quadrature);
    const auto counter = mode_amplitude(modes, 1, -1, tol, options.quadrature);
    out.stimulated_corotating = stimulated_weight * squared(co);
    out.stimulated_counterrotating = stimulated_weight * squared(counter);
    out.max_nodes = std::max({out.max_nodes, co.nodes, counter.nodes});
  }
  double total = 0.0;
  for (double v : out.vacuum_terms) total += v;
  out.total = total + out.stimulated_corotating + out.stimulated_counterrotating;
  out.tail_estimate = out.vacuum_terms.back();
  return out;
}

}  // namespace

ProbabilityBreakdown transition_probability(const modes::InertialModeSet& inertial, double tol,
                                            const ResponseOptions& options) {
  return assemble(inertial, tol, options, true,
                  static_cast<double>(inertial.params().occupation));
}

ProbabilityBreakdown transition_probability(const modes::RindlerModeSet& rindler, double tol,
                                            const ResponseOptions& options) {
  return assemble(rindler, tol, options, true, static_cast<double>(rindler.params().occupation));
}

ProbabilityBreakdown transition_probability(Scenario scenario, const PhysicalParams& params,
                                            int k_max, double tol,
                                            const ResponseOptions& options) {
  if (scenario == Scenario::AcceleratedDetector) {
    return transition_probability(modes::InertialModeSet(params, k_max, options.normalization),
                                  tol, options);
  }
  return transition_probability(modes::RindlerModeSet(params, k_max), tol, options);
}

ProbabilityBreakdown stimulated_only_probability(Scenario scenario, const PhysicalParams& params,
                                                 double tol, const ResponseOptions& options) {
  if (scenario == Scenario::AcceleratedDetector) {
    return assemble(modes::InertialModeSet(params, 1, options.normalization), tol, options, false,
                    1.0);
  }
  return assemble(modes::RindlerModeSet(params, 1), tol, options, false, 1.0);
}

}  // namespace qacc::response
