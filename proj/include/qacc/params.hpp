#pragma once

#include <string>
#include <string_view>

namespace qacc {

/// Experiment configuration in natural units (c = ħ = 1).
struct PhysicalParams {
  double length = 1.0;        ///< cavity proper length L
  double mass = 0.0;          ///< field mass m
  double gap = 1.0;           ///< detector energy gap ω
  long occupation = 0;        ///< n₁, quanta in the lowest cavity mode
  double acceleration = 0.0;  ///< a

  /// Throws DomainError unless L > 0, m ≥ 0, ω > 0, n₁ ≥ 0, a ≥ 0 (all finite).
  void validate() const;
  /// validate() plus a > 0 and a·L < 2 (HorizonError).
  void validate_accelerated_cavity() const;
};

/// Which twin carries the detector.
enum class Scenario {
  AcceleratedDetector,                ///< Rob: accelerated detector, static cavity
  InertialDetectorAcceleratedCavity,  ///< Bob: inertial detector, accelerated cavity
};

/// Normalisation of the static-cavity sine modes.
enum class Normalization {
  Massless,        ///< 1/sqrt(kπ), Klein-Gordon normalised only for m = 0
  MassConsistent,  ///< 1/sqrt(ω_k L)
};

std::string_view to_string(Scenario s);
std::string_view to_string(Normalization n);
Scenario parse_scenario(std::string_view text);          // "rob" | "bob"
Normalization parse_normalization(std::string_view text);  // "paper" | "kg"

}  // namespace qacc
