#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qacc/params.hpp"

namespace qacc::modes {

/// ω_k = sqrt((kπ/L)² + m²).
double inertial_frequency(int k, const PhysicalParams& params);

/// Static-cavity Dirichlet mode on [-L/2, L/2]. DomainError for |x| > L/2.
double inertial_mode(int k, double x, const PhysicalParams& params,
                     Normalization norm = Normalization::Massless);

/// Sine modes of the cavity at rest, truncated at k_max.
class InertialModeSet {
 public:
  InertialModeSet(const PhysicalParams& params, int k_max,
                  Normalization norm = Normalization::Massless);

  const PhysicalParams& params() const { return params_; }
  int k_max() const { return k_max_; }
  Normalization normalization() const { return norm_; }

  double frequency(int k) const;
  double operator()(int k, double x) const;

 private:
  PhysicalParams params_;
  int k_max_;
  Normalization norm_;
  std::vector<double> frequencies_;
  std::vector<double> amplitudes_;
};

/// Rindler radii of the accelerated cavity's walls.
struct RindlerWalls {
  double far;   ///< χ₁ = 1/a + L/2
  double near;  ///< χ₂ = 1/a - L/2
};

/// HorizonError when a·L ≥ 2, DomainError when a ≤ 0.
RindlerWalls rindler_boundaries(const PhysicalParams& params);

/// Below this mass the accelerated-cavity family is the exact conformal one,
/// sin(ν_k ln(χ/χ₁)) with ν_k = kπ / ln(χ₁/χ₂).
inline constexpr double kConformalMassThreshold = 1e-6;

/// ν_k^{(0)} = kπ / ln(χ₁/χ₂), the m → 0 spectrum.
double conformal_order(int k, const RindlerWalls& walls);

/// First k_max positive zeros ν_k of ν ↦ B_ν(χ₂) (bracket referenced to χ₁),
/// in increasing order, each refined by bisection to 1e-10. Requires m > 0.
/// The physical Rindler frequency is Ω_k = a·ν_k.
std::vector<double> rindler_spectrum(const PhysicalParams& params, int k_max);

/// N_k > 0 with ∫_{χ₂}^{χ₁} (2ν_k/χ) [N_k B̃_k(χ)]² dχ = 1, where B̃ is the
/// gamma-scaled bracket |Γ(1+iν)|²·B (see specfun). The scaled bracket keeps
/// N_k representable for the large orders reached at small a.
double rindler_normalization(const PhysicalParams& params, double order);

/// Standing-wave modes of the uniformly accelerated cavity in Rindler
/// coordinates (τ, χ). Immutable after construction; safe to share.
class RindlerModeSet {
 public:
  RindlerModeSet(const PhysicalParams& params, int k_max);

  const PhysicalParams& params() const { return params_; }
  int k_max() const { return k_max_; }
  const RindlerWalls& walls() const { return walls_; }
  bool conformal() const { return conformal_; }

  double order(int k) const { return orders_.at(static_cast<std::size_t>(k - 1)); }
  /// Ω_k = a·ν_k, conjugate to Rindler time τ.
  double frequency(int k) const { return params_.acceleration * order(k); }
  double normalization(int k) const { return norms_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<double>& orders() const { return orders_; }

  /// F_k(χ) = N_k B̃_k(χ). DomainError outside [χ₂, χ₁].
  double operator()(int k, double chi) const;

 private:
  double unnormalized(std::size_t index, double chi) const;

  PhysicalParams params_;
  int k_max_;
  RindlerWalls walls_;
  bool conformal_;
  std::vector<double> orders_;
  std::vector<double> norms_;
  std::vector<std::complex<double>> far_wall_conj_;  // conj S_ν(mχ₁)
};

/// ∫_{χ₂}^{χ₁} ((Ω_j + Ω_k)/(aχ)) F_j F_k dχ, the Klein-Gordon product on a
/// τ = const slice.
double kg_inner_product(const RindlerModeSet& modes, int j, int k);

/// ∫_{-L/2}^{L/2} (ω_j + ω_k) F_j F_k dx.
double kg_inner_product(const InertialModeSet& modes, int j, int k);

}  // namespace qacc::modes
