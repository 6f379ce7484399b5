// tables.hpp: the K tables and curves for the exponential and extended-Drude models,
// plus the cutoff-limit checks

#pragma once

#include <array>
#include <vector>

#include "qbm/quadrature.hpp"

namespace qbm {

inline constexpr std::array<double, 6> table1_omega_e = {0.5, 1.0, 5.0, 10.0, 50.0, 80.0};
inline constexpr std::array<double, 4> table1_gamma0 = {0.5, 1.0, 2.0, 5.0};

struct Table1Row {
    double omega_e;
    /// K_e/E_g with ω₀ = 1, E_g = ħ/2, one entry per table1_gamma0.
    std::array<double, 4> k_over_eg;
};

struct Table1 {
    std::vector<Table1Row> rows;
    /// lim_{ω_e→∞} K_e/E_g = γₒ/π.
    std::array<double, 4> limit;
};

Table1 table1(const QuadratureOptions& opts = {});

struct Table2Row {
    double omega0;
    double omega_d;
    /// K_d·π/(γₒE_g) from the λ-integral, γₒ = 1, E_g = ħω₀/2.
    double kd_norm;
    /// K_{d,1}·π/(γₒE_g).
    double kd1_norm;
};

/// The 16 (ω₀, ω_d) pairs over {0.5, 1, 5, 10}², ordered by ω₀ then ω_d.
std::vector<Table2Row> table2(const QuadratureOptions& opts = {});

struct Fig1Point {
    double x;
    double omega_over_w0;
    /// K_{d,2}/E_g with E_g = (ħ/2)√(Ωγ + w₀²), w₀ = 1, γ = x.
    double k_over_eg;
};

/// x = γ/w₀ ∈ {0.1, 0.15, …, 3.0}.
std::vector<double> fig1_x_grid();

/// All points, ordered by Ω/w₀ ∈ {2, 5, 10} then x.
std::vector<Fig1Point> fig1();

struct DrudeLimitRow {
    double omega_d;
    double K;
    /// (γ/πw₀)E_g with E_g = ħw₀/2.
    double limit;
    /// (ħγ/2π)(1 − γ/2Ω).
    double expansion;
};

struct LimitReport {
    double gamma = 1.0;
    double w0 = 1.0;
    std::vector<DrudeLimitRow> drude;
    /// |K − limit| strictly decreasing along ω_d.
    bool drude_residual_decreasing = false;
    /// residual(10³)/residual(10⁴).
    double drude_residual_ratio = 0.0;
    /// |K − expansion|/expansion at ω_d = 10⁴.
    double drude_expansion_rel = 0.0;
    /// Every Table 1 column strictly increases in ω_e and stays below γₒ/π.
    bool exponential_monotone = false;
};

/// Drude cutoff limit at fixed (γ, w₀) = (1, 1) for ω_d ∈ {10², 10³, 10⁴} and the
/// monotone approach of K_e to γₒ/π.
LimitReport limit_checks(const QuadratureOptions& opts = {});

}  // namespace qbm
