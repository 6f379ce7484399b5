// discrete_bath.hpp: oscillator coupled to N bath oscillators: normal modes, ground-state
// energies and the residue decomposition of K = F(0) − E_s(0)

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace qbm {

struct BathOscillator {
    double mass;
    double omega;
    double coupling;
};

/// System oscillator (M, ω₀) coupled to bath oscillators sorted by strictly increasing ω_j.
struct DiscreteBath {
    double M = 1.0;
    double omega0 = 1.0;
    std::vector<BathOscillator> oscillators;
};

/// Throws DomainError for non-positive masses/frequencies or zero couplings, and
/// DegenerateBath for unsorted or (numerically) repeated bath frequencies.
void validate(const DiscreteBath& bath);

/// γ(0) = (1/M)·Σ c_j²/(m_j ω_j²).
double gamma_zero(const DiscreteBath& bath);

/// D(ω) = (ω² − ω₀²)·Π(ω² − ω_j²) − ω²·Σ_j g_j Π_{i≠j}(ω² − ω_i²), g_j = c_j²/(M m_j ω_j²);
/// monic in ω² with zeros at the normal-mode frequencies.
double d_chi(const DiscreteBath& bath, double omega);

struct NormalModes {
    /// ω̄_k, ascending, N + 1 entries.
    std::vector<double> omega_bar;
    /// Interlacing bracket (in ω) that isolated each root.
    std::vector<std::pair<double, double>> brackets;
    /// Bath oscillator nearest to each root (npos without one) and ω̄_k² − ω_anchor² to full
    /// relative precision; empty when the modes were not produced by normal_modes.
    std::vector<std::size_t> anchor;
    std::vector<double> offset;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Normal modes by bisection of the secular function inside the interlacing brackets.
NormalModes normal_modes(const DiscreteBath& bath);

/// Squared system-coordinate weights u_k² = Π_j(ω̄_k² − ω_j²)/Π_{k'≠k}(ω̄_k² − ω̄_{k'}²).
std::vector<double> residue_weights(const DiscreteBath& bath, const NormalModes& modes);

/// F(0) = (ħ/2)(Σω̄_k − Σω_j).
double free_energy_0(const DiscreteBath& bath, const NormalModes& modes, double hbar = 1.0);

/// E_s(0) = (ħ/4)·Σ_k u_k²(ω₀² + ω̄_k²)/ω̄_k. Throws DegenerateBath when a residue weight vanishes.
double system_energy_0(const DiscreteBath& bath, const NormalModes& modes, double hbar = 1.0);

struct SecondLawReport {
    /// F(0) − E_s(0).
    double K = 0.0;
    /// Σ per_mode_terms + Σ per_bath_pole_terms.
    double residue_sum = 0.0;
    /// (ħ/4M)·A_k⁽¹⁾·A_k⁽²⁾ at each ω̄_k.
    std::vector<double> per_mode_terms;
    /// Residue contribution at each bath frequency ω_l.
    std::vector<double> per_bath_pole_terms;
    /// (k, l) pairs with |ω_l − ω̄_k| < 1e-9·ω_l whose terms were left out of residue_sum.
    std::vector<std::pair<std::size_t, std::size_t>> skipped;
};

/// K with its residue decomposition. With `throw_on_coincident`, a coincident (ω̄_k, ω_l)
/// pair raises CoincidentPole instead of being skipped.
SecondLawReport k_second_law(const DiscreteBath& bath, const NormalModes& modes, double hbar = 1.0,
                             bool throw_on_coincident = false);

struct GroundStateReport {
    double E_total = 0.0;
    double E_s = 0.0;
    std::vector<double> E_bath;
    double q_variance = 0.0;
    double p_variance = 0.0;
    /// Normal-mode frequencies from the eigenvalues, ascending.
    std::vector<double> omega_bar;
    /// Squared system components of the normalized eigenvectors.
    std::vector<double> weights;
};

/// Ground state from the eigen-decomposition of the mass-weighted potential matrix
/// (including the counter-term). Throws EigenFailure on non-convergence.
GroundStateReport exact_ground_state_oracle(const DiscreteBath& bath, double hbar = 1.0);

}  // namespace qbm
