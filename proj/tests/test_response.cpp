#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qacc/errors.hpp"
#include "qacc/kinematics.hpp"
#include "qacc/modes.hpp"
#include "qacc/response.hpp"

using qacc::PhysicalParams;
using qacc::Scenario;
namespace rsp = qacc::response;

namespace {

PhysicalParams params(double a, double m, long n1 = 0) {
  PhysicalParams p{1.0, m, 1.0, n1, a};
  p.gap = qacc::modes::inertial_frequency(1, p);
  return p;
}

constexpr Scenario kBoth[] = {Scenario::AcceleratedDetector,
                              Scenario::InertialDetectorAcceleratedCavity};

}  // namespace

TEST_CASE("oscillatory integral of a constant") {
  const auto r = rsp::oscillatory_integral([](double) { return 1.0; }, [](double) { return 0.0; },
                                           1.0, 1e-10);
  CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(r.value.imag()) < 1e-15);
  CHECK(r.nodes >= 256);
}

TEST_CASE("oscillatory integral of a plane wave") {
  const auto r = rsp::oscillatory_integral([](double) { return 1.0; },
                                           [](double s) { return 10.0 * s; }, 1.0, 1e-10);
  CHECK(r.value.real() == doctest::Approx(-0.1088042221778739626809).epsilon(1e-10));
  CHECK(std::abs(r.value.imag()) < 1e-13);
}

TEST_CASE("odd amplitude with an even phase has no real part") {
  // The whole integrand is odd here, so the imaginary part vanishes as well.
  const double tol = 1e-8;
  const auto r = rsp::oscillatory_integral([](double s) { return s * std::exp(-s * s); },
                                           [](double s) { return 7.0 * s * s; }, 2.0, tol);
  CHECK(std::abs(r.value.real()) < tol);
  CHECK(std::abs(r.value.imag()) < tol);
}

TEST_CASE("odd amplitude with an odd phase is purely imaginary") {
  const double tol = 1e-8;
  const auto r = rsp::oscillatory_integral([](double s) { return s * std::exp(-s * s); },
                                           [](double s) { return 7.0 * s + s * s * s; }, 2.0, tol);
  CHECK(std::abs(r.value.real()) < tol * std::abs(r.value));
  CHECK(std::abs(r.value.imag()) > 1e-3);
}

TEST_CASE("node count grows with the phase rate") {
  auto nodes = [](double w) {
    return rsp::oscillatory_integral([](double) { return 1.0; },
                                     [w](double s) { return w * s; }, 1.0, 1e-8)
        .nodes;
  };
  const double w = 2000.0;
  CHECK(static_cast<double>(nodes(w)) >= 20.0 * 2.0 * w / (2.0 * std::numbers::pi));
  CHECK(nodes(w) > nodes(10.0));
}

TEST_CASE("node cap raises a convergence error") {
  rsp::OscillatoryOptions tight;
  tight.node_cap = 512;
  CHECK_THROWS_AS(rsp::oscillatory_integral([](double) { return 1.0; },
                                            [](double s) { return 1e4 * s * s; }, 1.0, 1e-12,
                                            tight),
                  qacc::ConvergenceError);
}

TEST_CASE("breakdown structure") {
  for (Scenario s : kBoth) {
    const auto r = rsp::transition_probability(s, params(0.4, 0.2, 3), 6, 1e-6);
    REQUIRE(r.vacuum_terms.size() == 6);
    CHECK(r.k_max == 6);
    double sum = 0.0;
    for (double v : r.vacuum_terms) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(r.stimulated_corotating >= 0.0);
    CHECK(r.stimulated_counterrotating >= 0.0);
    CHECK(r.total == sum + r.stimulated_corotating + r.stimulated_counterrotating);
    CHECK(r.tail_estimate == r.vacuum_terms.back());
  }
}

TEST_CASE("empty cavity has no stimulated terms") {
  for (Scenario s : kBoth) {
    const auto r = rsp::transition_probability(s, params(0.3, 0.2, 0), 4, 1e-6);
    CHECK(r.stimulated_corotating == 0.0);
    CHECK(r.stimulated_counterrotating == 0.0);
  }
}

TEST_CASE("stimulated terms are linear in the occupation") {
  for (Scenario s : kBoth) {
    const auto one = rsp::transition_probability(s, params(0.6, 2.0, 1), 3, 1e-6);
    const auto many = rsp::transition_probability(s, params(0.6, 2.0, 7), 3, 1e-6);
    CHECK(many.stimulated_corotating == doctest::Approx(7.0 * one.stimulated_corotating).epsilon(1e-15));
    CHECK(many.stimulated_counterrotating ==
          doctest::Approx(7.0 * one.stimulated_counterrotating).epsilon(1e-15));
    for (std::size_t k = 0; k < one.vacuum_terms.size(); ++k) {
      CHECK(many.vacuum_terms[k] == one.vacuum_terms[k]);
    }
  }
}

TEST_CASE("per-photon probability equals the stimulated part divided by the occupation") {
  for (Scenario s : kBoth) {
    const auto full = rsp::transition_probability(s, params(0.25, 0.2, 5), 4, 1e-6);
    const auto per = rsp::stimulated_only_probability(s, params(0.25, 0.2, 5), 1e-6);
    for (double v : per.vacuum_terms) CHECK(v == 0.0);
    CHECK(per.total == per.stimulated_corotating + per.stimulated_counterrotating);
    CHECK(per.stimulated_corotating ==
          doctest::Approx(full.stimulated_corotating / 5.0).epsilon(1e-14));
    CHECK(per.stimulated_counterrotating ==
          doctest::Approx(full.stimulated_counterrotating / 5.0).epsilon(1e-14));
  }
}

TEST_CASE("node doubling moves the total by less than 0.1 percent") {
  rsp::ResponseOptions fine;
  fine.quadrature.base_refinement = 2;
  for (Scenario s : kBoth) {
    for (double a : {0.05, 0.7, 1.7}) {
      const auto coarse = rsp::transition_probability(s, params(a, 0.2, 1), 15, 1e-6);
      const auto refined = rsp::transition_probability(s, params(a, 0.2, 1), 15, 1e-6, fine);
      CAPTURE(a);
      CHECK(std::abs(refined.total - coarse.total) < 1e-3 * coarse.total);
    }
  }
}

TEST_CASE("lowest-mode amplitude is even along the window") {
  // Even amplitude and odd phase: the imaginary part is the odd projection.
  const double tol = 1e-8;
  const qacc::modes::InertialModeSet rob(params(0.5, 0.2), 1);
  const qacc::modes::RindlerModeSet bob(params(0.5, 0.2), 1);
  for (int sign : {+1, -1}) {
    const auto r = rsp::mode_amplitude(rob, 1, sign, tol);
    CHECK(std::abs(r.value.imag()) <= tol * std::abs(r.value));
    const auto b = rsp::mode_amplitude(bob, 1, sign, tol);
    CHECK(std::abs(b.value.imag()) <= tol * std::abs(b.value));
  }
}

TEST_CASE("massless inertial-detector case uses the conformal modes") {
  const auto r = rsp::transition_probability(Scenario::InertialDetectorAcceleratedCavity,
                                             params(0.3, 0.0), 5, 1e-6);
  CHECK(std::isfinite(r.total));
  CHECK(r.total > 0.0);
  const auto near = rsp::transition_probability(Scenario::InertialDetectorAcceleratedCavity,
                                                params(0.3, 1e-4), 5, 1e-6);
  CHECK(near.total == doctest::Approx(r.total).epsilon(1e-4));
}

TEST_CASE("horizon is enforced for the accelerated cavity") {
  CHECK_THROWS_AS(rsp::transition_probability(Scenario::InertialDetectorAcceleratedCavity,
                                              params(2.0, 0.2), 3, 1e-6),
                  qacc::HorizonError);
  CHECK_NOTHROW(rsp::transition_probability(Scenario::AcceleratedDetector, params(2.0, 0.2), 3,
                                            1e-6));
}
