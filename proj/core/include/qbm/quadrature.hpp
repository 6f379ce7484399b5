// quadrature.hpp: adaptive Gauss-Kronrod integration on finite and semi-infinite ranges,
// principal values and tail-divergence classification

#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

namespace qbm {

using RealFunction = std::function<double(double)>;

struct IntegralResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

struct QuadratureOptions {
    double abs_tol = 1e-9;
    double rel_tol = 0.0;
    std::size_t max_evals = 2'000'000;
    /// Throw NonConvergence instead of returning a result with converged == false.
    bool throw_on_failure = true;
};

enum class DivergenceTag { Convergent, LogDivergent, PowerDivergent };
enum class TailSign { Positive, Negative, Mixed };

struct DivergenceClass {
    DivergenceTag tag = DivergenceTag::Convergent;
    TailSign sign = TailSign::Mixed;
    /// Fitted exponent s of the truncated-integral increments, ΔI ∝ Lˢ (s = 0 is logarithmic).
    double slope = 0.0;
};

std::string_view to_string(DivergenceTag tag);
std::string_view to_string(TailSign sign);

/// ∫_a^b f. Split points strictly inside (a, b) start the subdivision.
IntegralResult integrate(const RealFunction& f, double a, double b, const QuadratureOptions& opts = {},
                         const std::vector<double>& splits = {});

/// ∫_a^∞ f. The range beyond the last split point s is mapped by x = s + L·t/(1 − t)
/// with L = max(s, 1).
IntegralResult integrate_from(const RealFunction& f, double a, const QuadratureOptions& opts = {},
                              const std::vector<double>& splits = {});

/// ∫_0^∞ f.
IntegralResult integrate_semi_infinite(const RealFunction& f, const QuadratureOptions& opts = {},
                                       const std::vector<double>& splits = {});

/// P∫_0^∞ f for f with a simple pole at `singularity`. The range [0, 2s] is folded onto
/// [0, s] as f(s + u) + f(s − u), in which the pole cancels; [2s, ∞) is integrated directly.
/// Extra split points (in x) refine both pieces.
/// Throws SingularityMisdeclared when f is not O(1/(x − s)) at the declared point.
IntegralResult principal_value_integral(const RealFunction& f, double singularity,
                                        const QuadratureOptions& opts = {},
                                        const std::vector<double>& splits = {});

/// Classifies the behaviour of ∫^L f as L → ∞ from geometric windows of [lo, hi]:
/// the increments over each window are regressed against ln L.
/// Throws Inconclusive when the fitted exponent is neither clearly zero nor clearly signed.
DivergenceClass classify_tail(const RealFunction& f, double lo, double hi, const QuadratureOptions& opts = {});

}  // namespace qbm
