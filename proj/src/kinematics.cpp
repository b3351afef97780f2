#include "qacc/kinematics.hpp"

#include <cmath>
#include <string>

#include "qacc/errors.hpp"

namespace qacc::kinematics {

namespace {

void require_positive_acceleration(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("acceleration must be > 0, got " + std::to_string(a));
  }
}

}  // namespace

MinkowskiPoint rob_worldline(double a, double tau) {
  require_positive_acceleration(a);
  // cosh(u) - 1 = 2 sinh²(u/2), without the cancellation at small aτ.
  const double s = std::sinh(0.5 * a * tau);
  return {std::sinh(a * tau) / a, -2.0 * s * s / a};
}

double rob_window(const PhysicalParams& params) {
  params.validate();
  const double a = params.acceleration;
  require_positive_acceleration(a);
  // arccosh(1 + u) = log1p(u + sqrt(u (2 + u)))
  const double u = 0.5 * a * params.length;
  return std::log1p(u + std::sqrt(u * (2.0 + u))) / a;
}

RindlerPoint bob_worldline(double a, double t) {
  require_positive_acceleration(a);
  const double horizon = 1.0 / a;
  if (!(std::abs(t) < horizon)) {
    throw HorizonError("|t| = " + std::to_string(std::abs(t)) +
                       " reaches the Rindler horizon at 1/a = " + std::to_string(horizon));
  }
  return {std::atanh(a * t) / a, std::sqrt((horizon - t) * (horizon + t))};
}

double bob_window(const PhysicalParams& params) {
  params.validate_accelerated_cavity();
  const double a = params.acceleration;
  const double aL = a * params.length;
  return std::sqrt(aL * (1.0 - 0.25 * aL)) / a;
}

RindlerPoint rindler_transform(double t, double x, double a) {
  require_positive_acceleration(a);
  if (!(x > std::abs(t))) {
    throw DomainError("(t, x) = (" + std::to_string(t) + ", " + std::to_string(x) +
                      ") is outside the right Rindler wedge");
  }
  return {std::atanh(t / x) / a, std::sqrt((x - t) * (x + t))};
}

MinkowskiPoint inverse_rindler_transform(double tau, double chi, double a) {
  require_positive_acceleration(a);
  return {chi * std::sinh(a * tau), chi * std::cosh(a * tau)};
}

double conformal_coordinate(double chi, double a) {
  require_positive_acceleration(a);
  if (!(chi > 0.0)) throw DomainError("conformal coordinate requires chi > 0");
  return std::log(a * chi) / a;
}

WindowedWorldline WindowedWorldline::make(Scenario scenario, const PhysicalParams& params) {
  const double half = scenario == Scenario::AcceleratedDetector ? rob_window(params)
                                                                : bob_window(params);
  return {scenario, params, half};
}

}  // namespace qacc::kinematics
