// drude.hpp: (w₀, Ω, γ) parametrization of the Drude and (d,2) models and their
// closed-form ground-state energies

#pragma once

namespace qbm {

enum class DrudeVariant {
    /// ω_d ω₀² = Ω w₀², ω_d = Ω + γ, ω₀² + γₒω_d = Ωγ + w₀².
    Drude,
    /// ω_d ω₀² = Ω w₀², ω_d + γₒ = Ω + γ, ω₀² = Ωγ + w₀².
    ExtendedDrude2,
};

enum class DampingRegime { Underdamped, Overdamped };

struct DrudeParams {
    double w0 = 0.0;
    double Omega = 0.0;
    double gamma = 0.0;
    /// Underdamped iff w₀ > γ/2.
    DampingRegime regime = DampingRegime::Underdamped;
    /// w₁ = √(w₀² − γ²/4) when underdamped, w̄₁ = √(γ²/4 − w₀²) when overdamped.
    double w1 = 0.0;
};

struct PhysicalParams {
    double omega0 = 0.0;
    double omega_d = 0.0;
    double gamma0 = 0.0;
};

/// Builds the parameter set and fills regime and w₁.
DrudeParams make_drude_params(double w0, double Omega, double gamma);

/// Solves the cubic whose roots are {Ω, z₁, z₂} (z₁ + z₂ = γ, z₁z₂ = w₀²). Among real roots,
/// Ω is the one farthest from the other two, |(Ω − z₁)(Ω − z₂)| maximal; the closed forms do
/// not depend on the labelling but are best conditioned this way.
DrudeParams drude_params_from_physical(double omega0, double omega_d, double gamma0, DrudeVariant variant);

PhysicalParams drude_params_to_physical(const DrudeParams& p, DrudeVariant variant);

/// Q = arccos(γ/2w₀)/w₁, continued analytically into the overdamped regime.
double drude_q(const DrudeParams& p);

struct DrudeEnergies {
    double E_s = 0.0;
    double F = 0.0;
    double K = 0.0;
};

/// E_s(0) = (ħ/2π)(A + B), F(0) and K = F − E_s for the Drude model, both regimes.
DrudeEnergies drude_energies_closed(const DrudeParams& p, double hbar = 1.0);

/// K_d from physical parameters via the closed forms.
double k_drude_closed(double omega0, double omega_d, double gamma0, double hbar = 1.0);

/// K_{d,2} = (ħ/2π)·Ωw₀²/((Ωγ + w₀²)(Ωγ − Ω² − w₀²))·C(w₀, Ω, γ).
/// The triple is relabelled through the physical parameters first.
double k_extended_drude2_closed(double w0, double Omega, double gamma, double hbar = 1.0);

}  // namespace qbm
