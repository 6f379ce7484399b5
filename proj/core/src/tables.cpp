// tables.cpp: grids for the exponential, Drude and extended-Drude K values

#include "qbm/tables.hpp"

#include <cmath>
#include <numbers>

#include "qbm/drude.hpp"
#include "qbm/thermo.hpp"

namespace qbm {

Table1 table1(const QuadratureOptions& opts) {
    constexpr double omega0 = 1.0;
    constexpr double Eg = 0.5 * omega0;
    Table1 t;
    for (double we : table1_omega_e) {
        Table1Row row{we, {}};
        for (std::size_t j = 0; j < table1_gamma0.size(); ++j)
            row.k_over_eg[j] = k_exponential(omega0, we, table1_gamma0[j], 1.0, opts) / Eg;
        t.rows.push_back(row);
    }
    for (std::size_t j = 0; j < table1_gamma0.size(); ++j) t.limit[j] = table1_gamma0[j] / std::numbers::pi;
    return t;
}

std::vector<Table2Row> table2(const QuadratureOptions& opts) {
    constexpr double gamma0 = 1.0;
    constexpr std::array<double, 4> grid = {0.5, 1.0, 5.0, 10.0};
    std::vector<Table2Row> rows;
    for (double w0 : grid)
        for (double wd : grid) {
            const double norm = std::numbers::pi / (gamma0 * 0.5 * w0);
            rows.push_back({w0, wd, k_drude_lambda(w0, wd, gamma0, 1.0, opts) * norm,
                            k_extended_drude1(w0, wd, gamma0, 1.0, opts) * norm});
        }
    return rows;
}

std::vector<double> fig1_x_grid() {
    std::vector<double> xs;
    for (int i = 0; i <= 58; ++i) xs.push_back((10 + 5 * i) / 100.0);
    return xs;
}

std::vector<Fig1Point> fig1() {
    constexpr double w0 = 1.0;
    std::vector<Fig1Point> pts;
    for (double r : {2.0, 5.0, 10.0})
        for (double x : fig1_x_grid()) {
            const double Omega = r * w0;
            const double gamma = x * w0;
            const double Eg = 0.5 * std::sqrt(Omega * gamma + w0 * w0);
            pts.push_back({x, r, k_extended_drude2_closed(w0, Omega, gamma) / Eg});
        }
    return pts;
}

LimitReport limit_checks(const QuadratureOptions& opts) {
    LimitReport rep;
    const double g = rep.gamma;
    const double w0 = rep.w0;
    const double Eg = 0.5 * w0;
    for (double wd : {1e2, 1e3, 1e4}) {
        const double Omega = wd - g;
        const auto phys = drude_params_to_physical(make_drude_params(w0, Omega, g), DrudeVariant::Drude);
        DrudeLimitRow row;
        row.omega_d = wd;
        row.K = k_drude_closed(phys.omega0, phys.omega_d, phys.gamma0);
        row.limit = g / (std::numbers::pi * w0) * Eg;
        row.expansion = g / (2.0 * std::numbers::pi) * (1.0 - g / (2.0 * Omega));
        rep.drude.push_back(row);
    }
    auto residual = [](const DrudeLimitRow& r) { return std::abs(r.K - r.limit); };
    rep.drude_residual_decreasing = residual(rep.drude[1]) < residual(rep.drude[0]) &&
                                    residual(rep.drude[2]) < residual(rep.drude[1]);
    rep.drude_residual_ratio = residual(rep.drude[1]) / residual(rep.drude[2]);
    rep.drude_expansion_rel = std::abs(rep.drude[2].K - rep.drude[2].expansion) / rep.drude[2].expansion;

    const Table1 t = table1(opts);
    bool monotone = true;
    for (std::size_t j = 0; j < table1_gamma0.size(); ++j) {
        for (std::size_t i = 1; i < t.rows.size(); ++i)
            monotone = monotone && t.rows[i].k_over_eg[j] > t.rows[i - 1].k_over_eg[j];
        monotone = monotone && t.rows.back().k_over_eg[j] < t.limit[j];
    }
    rep.exponential_monotone = monotone;
    return rep;
}

}  // namespace qbm
