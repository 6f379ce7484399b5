// spectral_model.hpp: continuous spectral densities J(ω), damping kernels γ(t) and
// their boundary values γ̃₊(ω)

#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include "qbm/quadrature.hpp"

namespace qbm {

using Complex = std::complex<double>;

/// J(ω) = Mγₒω.
struct Ohmic {
    double gamma0;
};

/// J(ω) = Mγₒω·ω_d²/(ω² + ω_d²).
struct Drude {
    double gamma0;
    double omega_d;
};

/// J(ω) = Mγₒω·e^{−ω/ω_e}.
struct Exponential {
    double gamma0;
    double omega_e;
};

/// J(ω) = Mγₒω·(ω/γₒ)^p.
struct ExtendedOhmic {
    double gamma0;
    int p;
};

/// J(ω) = (ω/ω_d)^n·J_Drude(ω).
struct ExtendedDrude {
    double gamma0;
    double omega_d;
    int n;
};

using SpectralModel = std::variant<Ohmic, Drude, Exponential, ExtendedOhmic, ExtendedDrude>;

struct ModelStatus {
    enum class Tag { Valid, InvalidKernel, ValidButKDivergent };
    Tag tag = Tag::Valid;
    /// Set for ValidButKDivergent: sign of the divergent K.
    TailSign sign = TailSign::Mixed;
    std::string reason;
};

std::string_view to_string(ModelStatus::Tag tag);

/// Throws DomainError when a rate, frequency or exponent is out of range.
void validate(const SpectralModel& model);

ModelStatus classify_model(const SpectralModel& model);

/// Damping rate γₒ of any variant.
double coupling_rate(const SpectralModel& model);

/// Cutoff frequency (ω_d or ω_e), or 0 for models without one.
double cutoff_frequency(const SpectralModel& model);

/// Human-readable form using the model grammar.
std::string describe(const SpectralModel& model);

/// Parses `ohmic g=<γₒ>`, `drude g=<γₒ> wd=<ω_d>`, `exp g=<γₒ> we=<ω_e>`,
/// `xohmic g=<γₒ> p=<p>` or `xdrude g=<γₒ> wd=<ω_d> n=<n>`. Keys may appear in any order.
/// Throws ParseError with a 1-based column.
SpectralModel parse_model(std::string_view text);

/// J(ω) for ω > 0. Throws InvalidModel for models with no well-defined kernel.
double j_omega(const SpectralModel& model, double mass, double omega);

/// γ(t) for t > 0; Drude, Exponential and ExtendedDrude with n ∈ {0, 1} only.
double gamma_t(const SpectralModel& model, double t);

/// γ̃₊(ω) from the closed forms. Real part J(ω)/(Mω); mass-independent.
/// Throws InvalidModel (invalid kernel) or Unsupported (kernel with δ-distribution weights).
Complex gamma_plus(const SpectralModel& model, double omega);

/// dγ̃₊/dω from the closed forms.
Complex gamma_plus_derivative(const SpectralModel& model, double omega);

/// γ̃₊(ω) with the imaginary part from the principal value
/// Im γ̃₊(ω) = −(2ω/π)·P∫₀^∞ J(ω')/(Mω'(ω'² − ω²)) dω'.
/// Throws Unsupported for spectral densities growing faster than ω.
Complex gamma_plus_generic(const SpectralModel& model, double omega, const QuadratureOptions& opts = {});

/// γ̃₊ for the K-divergent kernels (p = 2, n = 4), whose time-domain kernels carry
/// δ-distribution terms; the weight δ(0) enters as the positive free parameter `delta`.
Complex gamma_plus_regularized(const SpectralModel& model, double omega, double delta);
Complex gamma_plus_regularized_derivative(const SpectralModel& model, double omega, double delta);

/// G₊(ω) = ω² − ω₀² + iωγ̃₊(ω); Im G₊ = J(ω)/M.
Complex g_plus(const SpectralModel& model, double omega0, double omega);

/// dG₊/dω = 2ω + iγ̃₊ + iωγ̃₊'.
Complex g_plus_derivative(const SpectralModel& model, double omega0, double omega);

}  // namespace qbm
