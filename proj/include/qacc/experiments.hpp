#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qacc/params.hpp"
#include "qacc/response.hpp"

namespace qacc::experiments {

enum class SweepMode {
  Vacuum,               ///< n₁ = 0, full vacuum series
  StimulatedPerPhoton,  ///< n₁ ≫ 1, stimulated terms per quantum
};

std::string_view to_string(SweepMode mode);

/// Everything except the acceleration. When `gap` is unset the detector is
/// tuned to the lowest static-cavity mode, ω = ω₁(L, m).
struct SweepConfig {
  double length = 1.0;
  double mass = 0.2;
  std::optional<double> gap;
  long occupation = 0;
  int k_max = 15;
  double tol = 1e-6;
  Normalization normalization = Normalization::Massless;

  double resolved_gap() const;
  PhysicalParams at(double acceleration) const;
};

/// Acceleration grid, `points` values from `lo` to `hi` inclusive.
struct AccelerationGrid {
  double lo = 0.02;
  double hi = 1.8;
  int points = 60;
  bool logarithmic = true;

  /// Default a·L ∈ [0.02, 1.8], 60 log-spaced points.
  static AccelerationGrid default_for(double length);
  /// Parses "lo:hi:n:log" or "lo:hi:n:lin".
  static AccelerationGrid parse(const std::string& spec);

  /// Strictly increasing values; DomainError if the grid is degenerate,
  /// starts below a·L = 0.02 or reaches the horizon a·L = 2.
  std::vector<double> values(double length) const;
};

/// Named panel presets: (a) vacuum, m = 0.2; (b) stimulated, m = 0.2; (c) stimulated, m = 2.
enum class Panel { A, B, C };
Panel parse_panel(std::string_view text);
SweepConfig panel_config(Panel panel);
SweepMode panel_mode(Panel panel);

/// Probability of one scenario at one acceleration in the given mode.
response::ProbabilityBreakdown evaluate(Scenario scenario, const SweepConfig& config,
                                        SweepMode mode, double acceleration);

struct SweepRow {
  double a = 0.0;
  double p_rob = 0.0;
  double p_bob = 0.0;
  double ratio = 0.0;  ///< p_bob / p_rob, NaN when undefined
  double rob_tail = 0.0;
  double bob_tail = 0.0;
  std::vector<std::string> flags;
};

struct SweepTable {
  SweepConfig config;
  AccelerationGrid grid;
  SweepMode mode = SweepMode::Vacuum;
  std::vector<SweepRow> rows;
};

/// One row per grid point. The `p_rob` column comes from `first`, `p_bob` from
/// `second`; the defaults compare the twins. Grid points run concurrently on
/// up to `threads` workers; rows keep grid order and per-point failures are
/// recorded in the row flags.
SweepTable sweep(const SweepConfig& config, const AccelerationGrid& grid, SweepMode mode,
                 Scenario first = Scenario::AcceleratedDetector,
                 Scenario second = Scenario::InertialDetectorAcceleratedCavity,
                 unsigned threads = 0);

/// |p_bob - p_rob| / max(p_rob, p_bob), 0 when both vanish.
double relative_deviation(double p_rob, double p_bob);

struct ConformalReport {
  double max_deviation = 0.0;  ///< over grid points with a·L ≤ 0.3
  std::vector<double> accelerations;
  std::vector<double> deviations;  ///< full profile over the grid
};

/// Vacuum-mode comparison of the twins at a small field mass (≤ 0.05).
ConformalReport conformal_check(const AccelerationGrid& grid, double small_mass,
                                SweepConfig base = {});

/// Tabulated P(a) for one scenario over the bracket.
struct ReferenceCurve {
  Scenario scenario;
  SweepConfig config;
  SweepMode mode;
  std::vector<double> a;
  std::vector<double> p;
};

ReferenceCurve reference_curve(Scenario scenario, const SweepConfig& config, SweepMode mode,
                               double a_lo, double a_hi, int points = 60);

struct AccelerationEstimate {
  std::vector<double> candidates;  ///< increasing
  bool multi_valued = false;
};

/// Accelerations in the curve's bracket where P(a) = p_measured: every grid
/// cell whose end values straddle p_measured is refined by bisection on the
/// exact probability. OutOfRangeError when p_measured lies outside the range
/// of the tabulated curve.
AccelerationEstimate estimate_acceleration(double p_measured, const ReferenceCurve& curve);

enum class Frame {
  InertialCavityFrame,     ///< matches the accelerated detector in a static cavity
  AcceleratedCavityFrame,  ///< matches the inertial detector in an accelerated cavity
  Indistinguishable,
};

std::string_view to_string(Frame frame);

struct FrameClassification {
  Frame frame = Frame::Indistinguishable;
  std::vector<double> rob_candidates;
  std::vector<double> bob_candidates;
};

/// Which twin's curve explains p_measured within the bracket, the
/// kinematically known range of relative acceleration. A curve admits the
/// value when it crosses it, or comes within `band` (relative) of it at a grid
/// point. One admitting curve decides the frame; none or both leave the frames
/// indistinguishable.
FrameClassification discriminate_frame(double p_measured, const SweepConfig& config,
                                       SweepMode mode, double a_lo, double a_hi,
                                       int points = 60, double band = 1e-3);

}  // namespace qacc::experiments
