#pragma once

#include <complex>
#include <span>

namespace qacc::specfun {

using Complex = std::complex<double>;

/// Γ(z) for complex z. Lanczos (g = 7, 9 terms) on Re z ≥ 1/2, reflection
/// below. Throws PoleError within 1e-14 of a non-positive integer.
Complex complex_gamma(Complex z);

/// Principal-branch-free log Γ(z): exp() of the result equals Γ(z). The
/// imaginary part is continuous along rays in the right half-plane but is not
/// reduced to (-π, π].
Complex complex_log_gamma(Complex z);

/// Γ(1 + iν)·I_{iν}(z) = (z/2)^{iν} Σ_j (z²/4)^j / (j! (1 + iν)_j).
///
/// The Pochhammer form never divides by Γ, so it stays representable for
/// orders where |Γ(1 + iν)| ~ e^{-πν/2} under- or overflows. Any real ν is
/// accepted (negative ν gives the I_{-iν} series). Requires z > 0; throws
/// ConvergenceError after 10 000 terms.
Complex scaled_bessel_i_imag_order(double nu, double z);

/// I_{iν}(z), modified Bessel function of the first kind of imaginary order,
/// by its power series. Any real ν is accepted so that I_{-iν} can be formed
/// directly; throws DomainError for z ≤ 0 or when the value is not
/// representable as a finite double.
Complex bessel_i_imag_order(double nu, double z);

/// B(χ) = -i [I_{-iν}(mχ_ref) I_{iν}(mχ) - I_{iν}(mχ_ref) I_{-iν}(mχ)].
///
/// Evaluates the four Bessel values independently and checks that the bracket
/// is imaginary to 1e-10 of its term magnitudes before discarding the real
/// residue (ConvergenceError otherwise).
double rindler_bracket(double nu, double m, double chi_ref, double chi);

/// |Γ(1 + iν)|² · B(χ) = 2 Im[conj(S(mχ_ref)) S(mχ)] with S the scaled
/// series above. Same sign and zeros as rindler_bracket for every ν, but
/// finite for large orders.
double scaled_rindler_bracket(double nu, double m, double chi_ref, double chi);

/// One row of the arbitrary-precision reference table for I_{iν}(z).
struct BesselReference {
  double nu;
  double z;
  double re;
  double im;
};

/// 49-point table (ν ∈ {0.5, 1, 2, 5, 10, 20, 30} × z ∈ {0.01, 0.1, 0.5, 1, 2,
/// 5, 10}) generated with mpmath at 40 digits; see tests/oracle/gen_oracles.py.
std::span<const BesselReference> bessel_reference_table();

}  // namespace qacc::specfun
