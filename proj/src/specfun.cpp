#include "qacc/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qacc/errors.hpp"

namespace qacc::specfun {

namespace {

using LongComplex = std::complex<long double>;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr int kMaxSeriesTerms = 10000;
constexpr long double kSeriesRelTol = 1e-16L;

void check_pole(Complex z) {
  if (std::abs(z.imag()) > 1e-14 || z.real() > 0.5) return;
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z.real() - nearest) <= 1e-14) {
    throw PoleError("gamma function pole at z = " + std::to_string(nearest));
  }
}

// log Γ(z) for Re z ≥ 1/2.
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
    series += kLanczosCoef[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(series);
}

}  // namespace

Complex complex_log_gamma(Complex z) {
  check_pole(z);
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Γ(z) Γ(1 - z) = π / sin(πz)
  const Complex sine = std::sin(std::numbers::pi * z);
  return std::log(std::numbers::pi) - std::log(sine) - lanczos_log_gamma(1.0 - z);
}

Complex complex_gamma(Complex z) {
  check_pole(z);
  if (z.real() >= 0.5) return std::exp(lanczos_log_gamma(z));
  const Complex sine = std::sin(std::numbers::pi * z);
  return std::numbers::pi / (sine * std::exp(lanczos_log_gamma(1.0 - z)));
}

Complex scaled_bessel_i_imag_order(double nu, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("bessel_i_imag_order requires z > 0, got " +
                      std::to_string(z));
  }
  const long double half = 0.5L * z;
  const long double quarter_sq = half * half;
  const long double order = nu;

  LongComplex term = 1.0L;
  LongComplex sum = 1.0L;
  bool converged = false;
  for (int j = 1; j <= kMaxSeriesTerms; ++j) {
    const LongComplex pochhammer_step(static_cast<long double>(j), order);
    const LongComplex ratio = quarter_sq / (static_cast<long double>(j) * pochhammer_step);
    term *= ratio;
    sum += term;
    // Terms grow until |ratio| drops below one; only test past the peak.
    if (std::abs(ratio) < 1.0L && std::abs(term) < kSeriesRelTol * std::abs(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("I_{i nu}(z) series exceeded " +
                           std::to_string(kMaxSeriesTerms) + " terms (nu = " +
                           std::to_string(nu) + ", z = " + std::to_string(z) + ")");
  }
  const long double phase = order * std::log(half);
  const LongComplex power(std::cos(phase), std::sin(phase));
  const LongComplex result = power * sum;
  return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

Complex bessel_i_imag_order(double nu, double z) {
  const Complex scaled = scaled_bessel_i_imag_order(nu, z);
  const Complex result = scaled * std::exp(-complex_log_gamma(Complex(1.0, nu)));
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw DomainError("I_{i nu}(z) not representable in double (nu = " +
                      std::to_string(nu) + ")");
  }
  return result;
}

double rindler_bracket(double nu, double m, double chi_ref, double chi) {
  if (!(m > 0.0) || !(chi_ref > 0.0) || !(chi > 0.0)) {
    throw DomainError("rindler_bracket requires m, chi_ref, chi > 0");
  }
  const Complex minus_ref = bessel_i_imag_order(-nu, m * chi_ref);
  const Complex plus_ref = bessel_i_imag_order(nu, m * chi_ref);
  const Complex minus_at = bessel_i_imag_order(-nu, m * chi);
  const Complex plus_at = bessel_i_imag_order(nu, m * chi);

  const Complex first = minus_ref * plus_at;
  const Complex second = plus_ref * minus_at;
  const Complex bracket = first - second;
  const double scale = std::abs(first) + std::abs(second);
  if (std::abs(bracket.real()) > 1e-10 * scale) {
    throw ConvergenceError("Rindler bracket has a non-negligible real part (nu = " +
                           std::to_string(nu) + ")");
  }
  // -i (i y) = y
  return bracket.imag();
}

double scaled_rindler_bracket(double nu, double m, double chi_ref, double chi) {
  if (!(m > 0.0) || !(chi_ref > 0.0) || !(chi > 0.0)) {
    throw DomainError("rindler_bracket requires m, chi_ref, chi > 0");
  }
  const Complex ref = scaled_bessel_i_imag_order(nu, m * chi_ref);
  const Complex at = scaled_bessel_i_imag_order(nu, m * chi);
  return 2.0 * (std::conj(ref) * at).imag();
}

}  // namespace qacc::specfun
