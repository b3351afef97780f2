#include "qacc/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qacc/errors.hpp"
#include "qacc/quadrature.hpp"
#include "qacc/specfun.hpp"

namespace qacc::modes {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootTolerance = 1e-10;
constexpr double kNormIntegralTol = 1e-11;
// Relative slack for χ at the walls; worldline endpoints land there up to
// rounding.
constexpr double kWallSlack = 1e-10;
constexpr int kMaxScanExtensions = 40;

void check_index(int k, int k_max) {
  if (k < 1 || k > k_max) {
    throw DomainError("mode index " + std::to_string(k) + " outside [1, " +
                      std::to_string(k_max) + "]");
  }
}

double scan_step(double first_conformal) { return std::min(0.1, first_conformal / 20.0); }

// The bracket B̃_ν(χ₂) referenced to χ₁, up to a positive factor.
double wall_residual(double nu, double m, const RindlerWalls& walls) {
  return specfun::scaled_rindler_bracket(nu, m, walls.far, walls.near);
}

double bisect_root(double lo, double hi, double f_lo, double m, const RindlerWalls& walls) {
  while (hi - lo > kRootTolerance) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = wall_residual(mid, m, walls);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double inertial_frequency(int k, const PhysicalParams& params) {
  if (k < 1) throw DomainError("mode index must be >= 1");
  const double wave = k * kPi / params.length;
  return std::sqrt(wave * wave + params.mass * params.mass);
}

double inertial_mode(int k, double x, const PhysicalParams& params, Normalization norm) {
  if (k < 1) throw DomainError("mode index must be >= 1");
  const double half = 0.5 * params.length;
  if (std::abs(x) > half * (1.0 + kWallSlack)) {
    throw DomainError("x = " + std::to_string(x) + " outside the cavity");
  }
  const double amplitude = norm == Normalization::Massless
                               ? 1.0 / std::sqrt(k * kPi)
                               : 1.0 / std::sqrt(inertial_frequency(k, params) * params.length);
  return amplitude * std::sin(k * kPi * (x + half) / params.length);
}

InertialModeSet::InertialModeSet(const PhysicalParams& params, int k_max, Normalization norm)
    : params_(params), k_max_(k_max), norm_(norm) {
  params_.validate();
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  for (int k = 1; k <= k_max; ++k) {
    frequencies_.push_back(inertial_frequency(k, params_));
    amplitudes_.push_back(norm == Normalization::Massless
                              ? 1.0 / std::sqrt(k * kPi)
                              : 1.0 / std::sqrt(frequencies_.back() * params_.length));
  }
}

double InertialModeSet::frequency(int k) const {
  check_index(k, k_max_);
  return frequencies_[static_cast<std::size_t>(k - 1)];
}

double InertialModeSet::operator()(int k, double x) const {
  check_index(k, k_max_);
  const double half = 0.5 * params_.length;
  if (std::abs(x) > half * (1.0 + kWallSlack)) {
    throw DomainError("x = " + std::to_string(x) + " outside the cavity");
  }
  return amplitudes_[static_cast<std::size_t>(k - 1)] *
         std::sin(k * kPi * (x + half) / params_.length);
}

RindlerWalls rindler_boundaries(const PhysicalParams& params) {
  params.validate_accelerated_cavity();
  const double centre = 1.0 / params.acceleration;
  return {centre + 0.5 * params.length, centre - 0.5 * params.length};
}

double conformal_order(int k, const RindlerWalls& walls) {
  return k * kPi / std::log(walls.far / walls.near);
}

std::vector<double> rindler_spectrum(const PhysicalParams& params, int k_max) {
  const RindlerWalls walls = rindler_boundaries(params);
  if (!(params.mass > 0.0)) throw DomainError("rindler_spectrum requires m > 0");
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  const double m = params.mass;

  const double first = conformal_order(1, walls);
  const double step = scan_step(first);
  // Mass pushes the orders up by at most ~mχ₁ relative to the conformal ones.
  double upper = (k_max + 1) * first + m * walls.far;
  upper = std::max(upper, m * walls.near + (k_max + 1) * first);

  // For ν ≤ mχ₂ the radial equation χ(χF')' = (m²χ² - ν²)F has a
  // non-negative coefficient across the cavity, so no solution vanishes at
  // both walls. The bracket there is also exponentially small against its
  // terms and rounds to noise, so the scan starts at the turning point.
  std::vector<double> roots;
  double lo = std::max(step, m * walls.near);
  double f_lo = wall_residual(lo, m, walls);
  for (int extension = 0; extension <= kMaxScanExtensions; ++extension) {
    while (lo < upper && static_cast<int>(roots.size()) < k_max) {
      const double hi = lo + step;
      const double f_hi = wall_residual(hi, m, walls);
      if (f_lo == 0.0) {
        roots.push_back(lo);
      } else if ((f_lo < 0.0) != (f_hi < 0.0) && f_hi != 0.0) {
        roots.push_back(bisect_root(lo, hi, f_lo, m, walls));
      }
      lo = hi;
      f_lo = f_hi;
    }
    if (static_cast<int>(roots.size()) >= k_max) return roots;
    upper *= 1.5;
  }
  throw ConvergenceError("root scan found only " + std::to_string(roots.size()) + " of " +
                         std::to_string(k_max) + " Rindler eigen-orders");
}

double rindler_normalization(const PhysicalParams& params, double order) {
  const RindlerWalls walls = rindler_boundaries(params);
  const double m = params.mass;
  const auto far = std::conj(specfun::scaled_bessel_i_imag_order(order, m * walls.far));
  auto density = [&](double chi) {
    const double bracket =
        2.0 * (far * specfun::scaled_bessel_i_imag_order(order, m * chi)).imag();
    return 2.0 * order / chi * bracket * bracket;
  };
  // Roughly one panel per half-wave, ν ln(χ₁/χ₂)/π of them.
  const double half_waves = order * std::log(walls.far / walls.near) / kPi;
  const auto start = static_cast<std::size_t>(std::max(8.0, 2.0 * std::ceil(half_waves)));
  const auto norm_sq = quadrature::integrate(density, walls.near, walls.far, kNormIntegralTol,
                                             0.0, start);
  if (!(norm_sq.value > 0.0)) throw ConvergenceError("Rindler mode has zero norm");
  return 1.0 / std::sqrt(norm_sq.value);
}

RindlerModeSet::RindlerModeSet(const PhysicalParams& params, int k_max)
    : params_(params),
      k_max_(k_max),
      walls_(rindler_boundaries(params)),
      conformal_(params.mass < kConformalMassThreshold) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  if (conformal_) {
    for (int k = 1; k <= k_max; ++k) {
      orders_.push_back(conformal_order(k, walls_));
      norms_.push_back(1.0 / std::sqrt(k * kPi));
    }
    return;
  }
  orders_ = rindler_spectrum(params_, k_max);
  for (double nu : orders_) {
    far_wall_conj_.push_back(
        std::conj(specfun::scaled_bessel_i_imag_order(nu, params_.mass * walls_.far)));
    norms_.push_back(rindler_normalization(params_, nu));
  }
}

double RindlerModeSet::unnormalized(std::size_t index, double chi) const {
  const double nu = orders_[index];
  if (conformal_) return std::sin(nu * std::log(chi / walls_.far));
  const auto at = specfun::scaled_bessel_i_imag_order(nu, params_.mass * chi);
  return 2.0 * (far_wall_conj_[index] * at).imag();
}

double RindlerModeSet::operator()(int k, double chi) const {
  check_index(k, k_max_);
  const double slack = kWallSlack * walls_.far;
  if (chi < walls_.near - slack || chi > walls_.far + slack) {
    throw DomainError("chi = " + std::to_string(chi) + " outside the accelerated cavity");
  }
  chi = std::clamp(chi, walls_.near, walls_.far);
  const auto index = static_cast<std::size_t>(k - 1);
  return norms_[index] * unnormalized(index, chi);
}

double kg_inner_product(const RindlerModeSet& modes, int j, int k) {
  const double weight = modes.order(j) + modes.order(k);
  auto integrand = [&](double chi) { return weight / chi * modes(j, chi) * modes(k, chi); };
  const auto start = static_cast<std::size_t>(std::max({8, 2 * j, 2 * k}));
  return quadrature::integrate(integrand, modes.walls().near, modes.walls().far, 1e-10, 1e-11,
                               start)
      .value;
}

double kg_inner_product(const InertialModeSet& modes, int j, int k) {
  const double weight = modes.frequency(j) + modes.frequency(k);
  auto integrand = [&](double x) { return weight * modes(j, x) * modes(k, x); };
  const double half = 0.5 * modes.params().length;
  return quadrature::integrate(integrand, -half, half, 1e-12, 1e-13,
                               static_cast<std::size_t>(std::max({8, j, k})))
      .value;
}

}  // namespace qacc::modes
