#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>

#include "qacc/errors.hpp"

namespace qacc::quadrature {

/// Points per Gauss-Legendre panel.
inline constexpr unsigned kPanelOrder = 10;

namespace detail {

using Rule = boost::math::quadrature::gauss<double, kPanelOrder>;

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }

}  // namespace detail

/// Composite Gauss-Legendre with `panels` equal panels on [lo, hi].
template <class Value, class F>
Value composite_gauss_legendre(const F& f, double lo, double hi, std::size_t panels) {
  const auto& nodes = detail::Rule::abscissa();
  const auto& weights = detail::Rule::weights();
  const double width = (hi - lo) / static_cast<double>(panels);
  const double half = 0.5 * width;
  Value total{};
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * width;
    Value panel{};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      panel += weights[i] * (f(mid - half * nodes[i]) + f(mid + half * nodes[i]));
    }
    total += half * panel;
  }
  return total;
}

struct Estimate {
  double value = 0.0;
  std::size_t panels = 0;
};

/// Composite Gauss-Legendre, doubling the panel count until successive
/// estimates agree to `rel_tol` (or to `abs_tol`, for integrals that vanish).
template <class F>
Estimate integrate(const F& f, double lo, double hi, double rel_tol,
                   double abs_tol = 0.0, std::size_t start_panels = 8,
                   std::size_t max_panels = 1u << 17) {
  std::size_t panels = start_panels;
  double previous = composite_gauss_legendre<double>(f, lo, hi, panels);
  while (panels < max_panels) {
    panels *= 2;
    const double current = composite_gauss_legendre<double>(f, lo, hi, panels);
    if (std::abs(current - previous) <= std::max(rel_tol * std::abs(current), abs_tol)) {
      return {current, panels};
    }
    previous = current;
  }
  throw ConvergenceError("quadrature did not reach relative tolerance " +
                         std::to_string(rel_tol) + " within " +
                         std::to_string(max_panels) + " panels");
}

}  // namespace qacc::quadrature
