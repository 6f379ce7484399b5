// specfun.hpp: scaled exponential integrals and the analytic continuations used by the
// exponential and extended-Drude damping models

#pragma once

#include <complex>

namespace qbm::specfun {

using ComplexValue = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286061;

/// Positive root of Ei(x).
inline constexpr double ei_root = 0.37250741078136663446;

/// Side of the branch cut selected by the ±i0⁺ prescription.
enum class Side { Above, Below };

/// eˣ·E₁(x) for x > 0. Finite for every positive x; ~ 1/x − 1/x² for large x.
/// Throws DomainError for x <= 0 or NaN.
double exp_e1(double x);

/// e⁻ˣ·Ei(x) for x > 0. Finite for every positive x; ~ 1/x + 1/x² for large x.
/// Throws DomainError for x <= 0 or NaN.
double exp_neg_ei(double x);

/// Ei(x) itself; throws DomainError when it overflows (x > ~709.78).
double ei(double x);

/// E₁(−y ± i0⁺) = −Ei(y) ∓ iπ, y > 0.
ComplexValue e1_negative_continuation(double y, Side side);

/// arccos(y) = π/2 + i·ln(i·y + √(1 − y²)) on the whole real line. Real on |y| <= 1,
/// −i·acosh(y) for y > 1 and π + i·acosh(−y) for y < −1 (the root √(1 − y²) is taken
/// on the lower side of its cut, which makes arccos(y)/√(1 − y²) analytic at y = 1).
ComplexValue arccos_c(double y);

/// arccos(y)/√(1 − y²) continued through y = 1; equals acosh(y)/√(y² − 1) above it.
/// Defined for y > −1.
double arccos_ratio(double y);

/// (1/w₁)·arctan(2w₁/γ) with w₁² = w1_squared, γ > 0; for negative w1_squared it is
/// evaluated as (1/2w̄₁)·ln((γ + 2w̄₁)/(γ − 2w̄₁)) with w̄₁² = −w1_squared.
double atan_ratio(double w1_squared, double gamma);

}  // namespace qbm::specfun
