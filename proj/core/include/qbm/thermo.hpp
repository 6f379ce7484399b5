// thermo.hpp: ground-state E_s(0), F(0) and K = F(0) − E_s(0) for continuous baths

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qbm/drude.hpp"
#include "qbm/quadrature.hpp"
#include "qbm/spectral_model.hpp"

namespace qbm {

/// A finite value with its quadrature error, or a divergence classification.
struct Quantity {
    bool divergent = false;
    double value = 0.0;
    double error = 0.0;
    DivergenceClass divergence;
};

enum class Method { GenericQuadrature, ClosedForm, SpecialIntegrand };

std::string_view to_string(Method method);

struct ThermoReport {
    std::string model;
    double omega0 = 0.0;
    double hbar = 1.0;
    ModelStatus status;
    Quantity E_s0;
    Quantity F0;
    Quantity K;
    Method method = Method::GenericQuadrature;
    /// ħω₀/2.
    double E_g = 0.0;
    /// K/E_g and Kπ/(γₒE_g); NaN when K is divergent.
    double K_over_Eg = 0.0;
    double K_pi_over_gamma_Eg = 0.0;
};

/// (ω₀² + ω²)·Im G₊/|G₊|², the E_s(0) integrand without the ħ/2π prefactor.
double system_energy_integrand(const SpectralModel& model, double omega0, double omega);

/// ω·Im(−G₊'/G₊), the F(0) integrand without the ħ/2π prefactor.
double free_energy_integrand(const SpectralModel& model, double omega0, double omega);

/// Im(ω²R₊'/G₊) with R₊ = −iγ̃₊, the K integrand without the ħ/2π prefactor.
double k_integrand(const SpectralModel& model, double omega0, double omega);

/// The same K integrand for the δ-regularized kernels (p = 2, n = 4).
double k_integrand_regularized(const SpectralModel& model, double omega0, double omega, double delta);

/// Split points for the frequency integrals: ω₀ and the cutoff together with the zeros of Re G₊.
std::vector<double> resonance_points(const SpectralModel& model, double omega0);

/// E_s(0) = (ħ/2π)∫(ω₀² + ω²)·Im G₊/|G₊|² dω, or its divergence class.
Quantity system_energy_0_cont(const SpectralModel& model, double omega0, double hbar = 1.0,
                              const QuadratureOptions& opts = {});

/// F(0) = (ħ/2π)∫ω·Im(−G₊'/G₊) dω, or its divergence class.
Quantity free_energy_0_cont(const SpectralModel& model, double omega0, double hbar = 1.0,
                            const QuadratureOptions& opts = {});

/// K = (ħ/2π)∫Im(ω²R₊'/G₊) dω. For p = 2 and n = 4 returns the divergence class of the
/// tail, which is checked to be the same for several positive δ weights.
/// Throws InvalidModel for invalid kernels and Unsupported where no kernel value exists.
Quantity k_cont(const SpectralModel& model, double omega0, double hbar = 1.0, const QuadratureOptions& opts = {});

/// K_d as the single λ-integral in λ = ω/γₒ.
double k_drude_lambda(double omega0, double omega_d, double gamma0, double hbar = 1.0,
                      const QuadratureOptions& opts = {});

/// K_e = (ħγₒω_e²/2π²)∫Im(f₁/f₂) dλ with λ = ω/ω_e.
double k_exponential(double omega0, double omega_e, double gamma0, double hbar = 1.0,
                     const QuadratureOptions& opts = {});

/// Im(f₁/f₂) of the exponential model at λ.
double k_exponential_integrand(double omega0, double omega_e, double gamma0, double lambda);

/// K_{d,1} = (ħγₒ/2π)∫Im(g₁/g₂) dλ with λ = ω/γₒ.
double k_extended_drude1(double omega0, double omega_d, double gamma0, double hbar = 1.0,
                         const QuadratureOptions& opts = {});

/// Full report: closed forms where available, special integrands for K of the
/// exponential and (d,1) models, generic quadrature otherwise.
ThermoReport thermo_report(const SpectralModel& model, double omega0, double hbar = 1.0,
                           const QuadratureOptions& opts = {});

}  // namespace qbm
