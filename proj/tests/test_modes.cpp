#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qacc/errors.hpp"
#include "qacc/modes.hpp"

using qacc::Normalization;
using qacc::PhysicalParams;
namespace modes = qacc::modes;

namespace {

constexpr double kPi = std::numbers::pi;

PhysicalParams params(double a, double m, double L = 1.0) { return {L, m, 1.0, 0, a}; }

double max_abs(const modes::RindlerModeSet& set, int k, int samples = 400) {
  const auto& w = set.walls();
  double best = 0.0;
  for (int i = 0; i <= samples; ++i) {
    best = std::max(best, std::abs(set(k, w.near + (w.far - w.near) * i / samples)));
  }
  return best;
}

}  // namespace

TEST_CASE("static-cavity frequencies") {
  CHECK(modes::inertial_frequency(1, params(0, 0)) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(modes::inertial_frequency(1, params(0, 0.2)) ==
        doctest::Approx(3.147952414044621262631).epsilon(1e-15));
  CHECK(modes::inertial_frequency(2, params(0, 2)) ==
        doctest::Approx(6.593816618951230317521).epsilon(1e-15));
  const modes::InertialModeSet set(params(0, 0.7), 20);
  for (int k = 1; k < 20; ++k) CHECK(set.frequency(k + 1) > set.frequency(k));
}

TEST_CASE("static-cavity mode values and walls") {
  const auto p = params(0, 0.2);
  CHECK(modes::inertial_mode(1, -0.5, p) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(modes::inertial_mode(1, 0.0, p) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-14));
  CHECK(std::abs(modes::inertial_mode(2, 0.0, p)) < 1e-15);
  CHECK(modes::inertial_mode(1, 0.0, p, Normalization::MassConsistent) ==
        doctest::Approx(1.0 / std::sqrt(modes::inertial_frequency(1, p))).epsilon(1e-14));
  for (int k = 1; k <= 15; ++k) {
    CHECK(std::abs(modes::inertial_mode(k, -0.5, p)) < 1e-12);
    CHECK(std::abs(modes::inertial_mode(k, 0.5, p)) < 1e-12);
  }
  CHECK_THROWS_AS(modes::inertial_mode(1, 0.51, p), qacc::DomainError);
}

TEST_CASE("static-cavity inner product holds under the mass-consistent normalisation") {
  for (double m : {0.0, 0.2, 2.0}) {
    const modes::InertialModeSet kg(params(0, m), 6, Normalization::MassConsistent);
    for (int j = 1; j <= 6; ++j) {
      for (int k = 1; k <= 6; ++k) {
        CHECK(modes::kg_inner_product(kg, j, k) ==
              doctest::Approx(j == k ? 1.0 : 0.0).scale(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("default 1/sqrt(k pi) modes are Klein-Gordon normalised only when massless") {
  const modes::InertialModeSet massless(params(0, 0.0), 4);
  for (int k = 1; k <= 4; ++k) {
    CHECK(modes::kg_inner_product(massless, k, k) == doctest::Approx(1.0).epsilon(1e-10));
  }
  const modes::InertialModeSet massive(params(0, 2.0), 4);
  CHECK(std::abs(modes::kg_inner_product(massive, 1, 1) - 1.0) > 0.1);
  CHECK(std::abs(modes::kg_inner_product(massive, 1, 2)) < 1e-10);
}

TEST_CASE("Rindler walls") {
  const auto w = modes::rindler_boundaries(params(1.0, 0.2));
  CHECK(w.far == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(w.near == doctest::Approx(0.5).epsilon(1e-15));
  const auto w2 = modes::rindler_boundaries(params(0.1, 0.2));
  CHECK(w2.far == doctest::Approx(10.5).epsilon(1e-15));
  CHECK(w2.near == doctest::Approx(9.5).epsilon(1e-15));
  CHECK_THROWS_AS(modes::rindler_boundaries(params(2.0, 0.2)), qacc::HorizonError);
  CHECK_THROWS_AS(modes::rindler_boundaries(params(3.0, 0.2)), qacc::HorizonError);
  CHECK_THROWS_AS(modes::rindler_boundaries(params(0.0, 0.2)), qacc::DomainError);
}

TEST_CASE("massive spectrum approaches the conformal one") {
  const auto nu = modes::rindler_spectrum(params(1.0, 1e-4), 10);
  REQUIRE(nu.size() == 10);
  CHECK(nu[0] == doctest::Approx(2.85960086738012726965).epsilon(1e-3));
  CHECK(nu[4] == doctest::Approx(14.2980043369006363483).epsilon(1e-3));
  for (int k = 1; k <= 10; ++k) {
    CHECK(nu[k - 1] == doctest::Approx(k * kPi / std::log(3.0)).epsilon(1e-3));
  }
}

TEST_CASE("spectrum is strictly increasing and every order is a wall zero") {
  for (auto [a, m] : {std::pair{0.5, 0.2}, std::pair{1.0, 2.0}, std::pair{0.02, 2.0},
                      std::pair{1.9, 0.2}}) {
    CAPTURE(a);
    CAPTURE(m);
    const modes::RindlerModeSet set(params(a, m), 15);
    for (int k = 1; k < 15; ++k) CHECK(set.order(k + 1) > set.order(k));
    CHECK(set.order(1) > 0.0);
    for (int k = 1; k <= 15; ++k) {
      const double peak = max_abs(set, k);
      CHECK(std::abs(set(k, set.walls().far)) < 1e-8 * peak);
      CHECK(std::abs(set(k, set.walls().near)) < 1e-8 * peak);
      CHECK(set.frequency(k) == doctest::Approx(a * set.order(k)).epsilon(1e-15));
    }
  }
}

TEST_CASE("mode k has k - 1 interior nodes") {
  const modes::RindlerModeSet set(params(0.7, 1.0), 8);
  const auto& w = set.walls();
  for (int k = 1; k <= 8; ++k) {
    int changes = 0;
    const int samples = 4000;
    double prev = set(k, w.near + (w.far - w.near) * 1.0 / samples);
    for (int i = 2; i < samples; ++i) {
      const double v = set(k, w.near + (w.far - w.near) * i / samples);
      if ((v < 0.0) != (prev < 0.0)) ++changes;
      prev = v;
    }
    CHECK(changes == k - 1);
  }
}

TEST_CASE("Rindler Gram matrix is the identity") {
  for (auto [a, m] : {std::pair{0.5, 0.2}, std::pair{1.0, 2.0}, std::pair{1.0, 1e-4}}) {
    const modes::RindlerModeSet set(params(a, m), 15);
    double worst = 0.0;
    for (int j = 1; j <= 15; ++j) {
      for (int k = j; k <= 15; ++k) {
        worst = std::max(worst,
                         std::abs(modes::kg_inner_product(set, j, k) - (j == k ? 1.0 : 0.0)));
      }
    }
    CAPTURE(a);
    CAPTURE(m);
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("normalisation is converged and positive") {
  const auto p = params(0.5, 0.2);
  const modes::RindlerModeSet set(p, 5);
  for (int k = 1; k <= 5; ++k) {
    CHECK(set.normalization(k) > 0.0);
    CHECK(modes::rindler_normalization(p, set.order(k)) ==
          doctest::Approx(set.normalization(k)).epsilon(1e-12));
  }
}

TEST_CASE("near-massless mode profile matches the conformal sine") {
  const modes::RindlerModeSet set(params(1.0, 1e-4), 3);
  const double nu = set.order(1);
  const double antinode = 0.5 * std::exp(kPi / (2.0 * nu));
  const double scale = set(1, antinode) / std::sin(nu * std::log(antinode / 0.5));
  for (int i = 1; i < 100; ++i) {
    const double chi = 0.5 + 0.01 * i;
    CHECK(std::abs(set(1, chi) - scale * std::sin(nu * std::log(chi / 0.5))) <
          1e-3 * std::abs(scale));
  }
}

TEST_CASE("below the mass threshold the exact conformal family is used") {
  const modes::RindlerModeSet set(params(1.0, 0.0), 4);
  CHECK(set.conformal());
  for (int k = 1; k <= 4; ++k) {
    CHECK(set.order(k) == doctest::Approx(k * kPi / std::log(3.0)).epsilon(1e-14));
    CHECK(modes::kg_inner_product(set, k, k) == doctest::Approx(1.0).epsilon(1e-8));
  }
  CHECK(std::abs(modes::kg_inner_product(set, 1, 2)) < 1e-8);
}

TEST_CASE("Rindler mode rejects points outside the cavity") {
  const modes::RindlerModeSet set(params(1.0, 0.2), 2);
  CHECK_THROWS_AS(set(1, 0.4), qacc::DomainError);
  CHECK_THROWS_AS(set(1, 1.6), qacc::DomainError);
}
