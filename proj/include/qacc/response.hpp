#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "qacc/modes.hpp"
#include "qacc/params.hpp"

namespace qacc::response {

using Complex = std::complex<double>;
using RealFunction = std::function<double(double)>;

struct OscillatoryOptions {
  /// Minimum quadrature nodes per 2π of phase in the first pass.
  double nodes_per_period = 20.0;
  std::size_t min_nodes = 256;
  std::size_t node_cap = std::size_t{1} << 20;
  /// Split the pieces next to ±T geometrically, for phases that steepen at
  /// the window edges.
  bool cluster_edges = false;
  /// Extra factor on the first-pass node count (convergence studies).
  std::size_t base_refinement = 1;
};

struct OscillatoryResult {
  Complex value;
  std::size_t nodes = 0;  ///< nodes in the accepted (finest) pass
  double change = 0.0;    ///< |I_2n - I_n| of the accepted pass
};

/// ∫_{-T}^{T} amplitude(s) e^{i phase(s)} ds by composite Gauss-Legendre.
///
/// The first pass gives every piece of the window enough panels for
/// `nodes_per_period` nodes per local phase period; all panel counts then
/// double until successive passes agree to `tol` relative (with a floor of
/// 1e-12 of ∫|amplitude| for integrals that cancel almost completely).
/// ConvergenceError once the node count would exceed `node_cap`.
OscillatoryResult oscillatory_integral(const RealFunction& amplitude, const RealFunction& phase,
                                       double half_window, double tol,
                                       const OscillatoryOptions& options = {});

/// The three pieces of the first-order click probability, coupling set to 1.
struct ProbabilityBreakdown {
  std::vector<double> vacuum_terms;  ///< |∫ F_k e^{i(ωs + ω̃_k s̃)}|², k = 1..k_max
  double stimulated_corotating = 0.0;      ///< n₁ |∫ F_1 e^{i(ωs + ω̃_1 s̃)}|²
  double stimulated_counterrotating = 0.0;  ///< n₁ |∫ F_1 e^{i(ωs - ω̃_1 s̃)}|²
  double total = 0.0;
  int k_max = 0;
  double tail_estimate = 0.0;  ///< last retained vacuum term
  std::size_t max_nodes = 0;   ///< finest quadrature pass over all integrals

  /// tail_estimate / total ≥ 1%.
  bool truncation_flagged() const;
};

struct ResponseOptions {
  Normalization normalization = Normalization::Massless;
  OscillatoryOptions quadrature;
};

/// Full three-term probability for either twin. Builds the mode set from
/// `params` (k_max modes).
ProbabilityBreakdown transition_probability(Scenario scenario, const PhysicalParams& params,
                                            int k_max, double tol,
                                            const ResponseOptions& options = {});

/// Same, with the accelerated-cavity modes supplied by the caller.
ProbabilityBreakdown transition_probability(const modes::RindlerModeSet& rindler, double tol,
                                            const ResponseOptions& options = {});

/// Same, with the static-cavity modes supplied by the caller.
ProbabilityBreakdown transition_probability(const modes::InertialModeSet& inertial, double tol,
                                            const ResponseOptions& options = {});

/// n₁ ≫ 1 regime: vacuum series dropped, stimulated terms per quantum (unit
/// weight). The physical value is n₁ times this.
ProbabilityBreakdown stimulated_only_probability(Scenario scenario, const PhysicalParams& params,
                                                 double tol,
                                                 const ResponseOptions& options = {});

/// Complex amplitude ∫ ε F_k e^{i(ωs ± ω̃_k s̃(s))} ds along the scenario's
/// worldline. `sign` is +1 or -1.
OscillatoryResult mode_amplitude(const modes::RindlerModeSet& rindler, int k, int sign,
                                 double tol, const OscillatoryOptions& options = {});
OscillatoryResult mode_amplitude(const modes::InertialModeSet& inertial, int k, int sign,
                                 double tol, const OscillatoryOptions& options = {});

}  // namespace qacc::response
