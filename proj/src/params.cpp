#include "qacc/params.hpp"

#include <cmath>

#include "qacc/errors.hpp"

namespace qacc {

void PhysicalParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(length) || !(length > 0.0)) throw DomainError("cavity length L must be > 0");
  if (!finite(mass) || mass < 0.0) throw DomainError("field mass m must be >= 0");
  if (!finite(gap) || !(gap > 0.0)) throw DomainError("detector gap omega must be > 0");
  if (occupation < 0) throw DomainError("occupation n1 must be >= 0");
  if (!finite(acceleration) || acceleration < 0.0) {
    throw DomainError("acceleration a must be >= 0");
  }
}

void PhysicalParams::validate_accelerated_cavity() const {
  validate();
  if (!(acceleration > 0.0)) throw DomainError("acceleration a must be > 0");
  if (acceleration * length >= 2.0) {
    throw HorizonError("a*L = " + std::to_string(acceleration * length) +
                       " >= 2: cavity crosses the Rindler horizon");
  }
}

std::string_view to_string(Scenario s) {
  return s == Scenario::AcceleratedDetector ? "rob" : "bob";
}

std::string_view to_string(Normalization n) {
  return n == Normalization::Massless ? "paper" : "kg";
}

Scenario parse_scenario(std::string_view text) {
  if (text == "rob") return Scenario::AcceleratedDetector;
  if (text == "bob") return Scenario::InertialDetectorAcceleratedCavity;
  throw UsageError("unknown scenario '" + std::string(text) + "' (expected rob|bob)");
}

Normalization parse_normalization(std::string_view text) {
  if (text == "paper") return Normalization::Massless;
  if (text == "kg") return Normalization::MassConsistent;
  throw UsageError("unknown normalization '" + std::string(text) + "' (expected paper|kg)");
}

}  // namespace qacc
