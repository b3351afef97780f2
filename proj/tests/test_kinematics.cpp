#include <doctest.h>

#include <cmath>
#include <random>

#include "qacc/errors.hpp"
#include "qacc/kinematics.hpp"

using qacc::PhysicalParams;
namespace kin = qacc::kinematics;

namespace {

PhysicalParams params(double a, double L) { return {L, 0.2, 1.0, 0, a}; }

}  // namespace

TEST_CASE("accelerated worldline apex, wall crossing and time reflection") {
  const auto apex = kin::rob_worldline(0.7, 0.0);
  CHECK(apex.t == 0.0);
  CHECK(apex.x == 0.0);
  const auto wall = kin::rob_worldline(1.0, 0.9624236501192068949955);
  CHECK(wall.x == doctest::Approx(-0.5).epsilon(1e-15));
  for (double tau : {0.1, 0.5, 2.0, 7.0}) {
    const auto f = kin::rob_worldline(0.3, tau);
    const auto b = kin::rob_worldline(0.3, -tau);
    CHECK(f.x == b.x);
    CHECK(f.t == -b.t);
  }
}

TEST_CASE("accelerated detector window") {
  CHECK(kin::rob_window(params(1.0, 1.0)) == doctest::Approx(0.9624236501192068949955).epsilon(1e-15));
  // 10 acosh(1.05), computed at 40 digits
  CHECK(kin::rob_window(params(0.1, 1.0)) == doctest::Approx(3.149247566038478717434).epsilon(1e-14));
  for (double a : {1e-4, 1e-6, 1e-8}) {
    CHECK(kin::rob_window(params(a, 1.0)) * std::sqrt(a) == doctest::Approx(1.0).epsilon(3.0 * a));
  }
}

TEST_CASE("inertial worldline seen from the accelerated cavity") {
  const auto centre = kin::bob_worldline(0.8, 0.0);
  CHECK(centre.tau == 0.0);
  CHECK(centre.chi == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(kin::bob_worldline(1.0, std::sqrt(0.75)).chi == doctest::Approx(0.5).epsilon(1e-14));
  for (double t : {0.1, 0.4, 0.9}) {
    const auto f = kin::bob_worldline(1.0, t);
    const auto b = kin::bob_worldline(1.0, -t);
    CHECK(f.chi == b.chi);
    CHECK(f.tau == -b.tau);
  }
  CHECK_THROWS_AS(kin::bob_worldline(1.0, 1.0), qacc::HorizonError);
  CHECK_THROWS_AS(kin::bob_worldline(1.0, -1.5), qacc::HorizonError);
}

TEST_CASE("inertial detector window") {
  CHECK(kin::bob_window(params(1.0, 1.0)) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(kin::bob_window(params(1.0, 1.999999)) < 1.0);
  CHECK(kin::bob_window(params(1.0, 1.999999)) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS(kin::bob_window(params(2.0, 1.0)), qacc::HorizonError);
  for (double a : {1e-4, 1e-6}) {
    CHECK(kin::bob_window(params(a, 1.0)) * std::sqrt(a) == doctest::Approx(1.0).epsilon(3.0 * a));
  }
}

TEST_CASE("window endpoints sit on the wall for random configurations") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> length(0.1, 10.0);
  std::uniform_real_distribution<double> product(0.02, 1.98);
  for (int i = 0; i < 100; ++i) {
    const double L = length(rng);
    const double a = product(rng) / L;
    const auto p = params(a, L);
    CAPTURE(a);
    CAPTURE(L);
    CHECK(std::abs(kin::rob_worldline(a, kin::rob_window(p)).x + L / 2) <= 1e-12 * std::max(1.0, L));
    CHECK(std::abs(kin::bob_worldline(a, kin::bob_window(p)).chi - (1 / a - L / 2)) <=
          1e-12 * std::max(1.0, 1 / a));
  }
}

TEST_CASE("detectors stay inside the cavity during the window") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> product(0.02, 1.98);
  for (int i = 0; i < 20; ++i) {
    const double a = product(rng);
    const auto p = params(a, 1.0);
    const double tr = kin::rob_window(p);
    const double tb = kin::bob_window(p);
    for (int j = -50; j <= 50; ++j) {
      const double x = kin::rob_worldline(a, tr * j / 50.0).x;
      CHECK(x <= 0.0);
      CHECK(x >= -0.5 - 1e-12);
      const double chi = kin::bob_worldline(a, tb * j / 50.0).chi;
      CHECK(chi <= 1 / a + 1e-15);
      CHECK(chi >= 1 / a - 0.5 - 1e-12);
    }
  }
}

TEST_CASE("proper-time derivative of coordinate time is cosh") {
  const double a = 0.9;
  const double h = 1e-5;
  for (double tau : {-1.0, 0.0, 0.3, 1.2}) {
    const double dt = (kin::rob_worldline(a, tau + h).t - kin::rob_worldline(a, tau - h).t) / (2 * h);
    CHECK(dt == doctest::Approx(std::cosh(a * tau)).epsilon(1e-8));
    CHECK(dt >= 1.0);
  }
}

TEST_CASE("Rindler transform: slice identity, round trip and the wedge") {
  const auto slice = kin::rindler_transform(0.0, 1.0, 1.0);
  CHECK(slice.tau == 0.0);
  CHECK(slice.chi == 1.0);
  for (double tau : {-2.0, -0.3, 0.0, 0.8, 1.7}) {
    for (double chi : {0.2, 1.0, 4.0}) {
      const auto mk = kin::inverse_rindler_transform(tau, chi, 0.6);
      const auto back = kin::rindler_transform(mk.t, mk.x, 0.6);
      CHECK(back.tau == doctest::Approx(tau).scale(1.0).epsilon(1e-12));
      CHECK(back.chi == doctest::Approx(chi).epsilon(1e-12));
    }
  }
  for (double t : {-0.9, -0.2, 0.0, 0.5, 0.99}) {
    const auto direct = kin::rindler_transform(t, 1.0, 1.0);
    const auto bob = kin::bob_worldline(1.0, t);
    CHECK(direct.tau == doctest::Approx(bob.tau).scale(1.0).epsilon(1e-12));
    CHECK(direct.chi == doctest::Approx(bob.chi).epsilon(1e-12));
  }
  CHECK_THROWS_AS(kin::rindler_transform(1.0, 1.0, 1.0), qacc::DomainError);
  CHECK_THROWS_AS(kin::rindler_transform(0.0, -1.0, 1.0), qacc::DomainError);
}

TEST_CASE("conformal coordinate") {
  CHECK(kin::conformal_coordinate(2.0, 0.5) == 0.0);
  CHECK(kin::conformal_coordinate(1.5, 1.0) == doctest::Approx(0.405465108108164381978).epsilon(1e-15));
  CHECK(kin::conformal_coordinate(1.5, 0.5) - kin::conformal_coordinate(0.5, 0.5) ==
        doctest::Approx(std::log(3.0) / 0.5).epsilon(1e-14));
  CHECK_THROWS_AS(kin::conformal_coordinate(0.0, 1.0), qacc::DomainError);
}

TEST_CASE("windowed worldline dispatches on the scenario") {
  const auto p = params(0.5, 1.0);
  CHECK(kin::WindowedWorldline::make(qacc::Scenario::AcceleratedDetector, p).half_window ==
        kin::rob_window(p));
  CHECK(kin::WindowedWorldline::make(qacc::Scenario::InertialDetectorAcceleratedCavity, p)
            .half_window == kin::bob_window(p));
}
