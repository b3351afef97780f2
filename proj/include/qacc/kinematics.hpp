#pragma once

#include "qacc/params.hpp"

namespace qacc::kinematics {

/// Point in the static cavity's Minkowski chart.
struct MinkowskiPoint {
  double t;
  double x;
};

/// Point in the accelerated cavity's Rindler chart.
struct RindlerPoint {
  double tau;
  double chi;
};

/// Rob at proper time τ: x = -(cosh aτ - 1)/a, t = sinh(aτ)/a. Starts from the
/// cavity centre at τ = 0. Requires a > 0.
MinkowskiPoint rob_worldline(double a, double tau);

/// Half-width of Rob's coupling window, a⁻¹ arccosh(1 + aL/2). Both ends sit
/// on the wall x = -L/2.
double rob_window(const PhysicalParams& params);

/// Bob at Minkowski time t seen from the accelerated cavity:
/// χ = sqrt(a⁻² - t²), τ = a⁻¹ atanh(at). HorizonError for |t| ≥ 1/a.
RindlerPoint bob_worldline(double a, double t);

/// Half-width of Bob's coupling window, a⁻¹ sqrt(aL(1 - aL/4)). Both ends sit
/// on the near wall χ₂ = 1/a - L/2. HorizonError when a·L ≥ 2.
double bob_window(const PhysicalParams& params);

/// (t, x) ↦ (τ, χ) = (a⁻¹ atanh(t/x), sqrt(x² - t²)) on the right wedge x > |t|.
RindlerPoint rindler_transform(double t, double x, double a);

/// Inverse of rindler_transform: (χ sinh aτ, χ cosh aτ).
MinkowskiPoint inverse_rindler_transform(double tau, double chi, double a);

/// ξ = a⁻¹ ln(aχ). In (τ, ξ) the massless field looks inertial.
double conformal_coordinate(double chi, double a);

/// A detector trajectory together with its sharp coupling window [-T, T] in
/// the detector's proper time.
struct WindowedWorldline {
  Scenario scenario;
  PhysicalParams params;
  double half_window;

  static WindowedWorldline make(Scenario scenario, const PhysicalParams& params);
};

}  // namespace qacc::kinematics
