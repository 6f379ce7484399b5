// drude.cpp: cubic parameter maps and closed-form Drude / (d,2) energies

#include "qbm/drude.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qbm/errors.hpp"
#include "qbm/specfun.hpp"

namespace qbm {
namespace {

constexpr double pi = std::numbers::pi;

// s³ − a s² + b s − c with a, b, c > 0.
struct Cubic {
    double a;
    double b;
    double c;
    double value(double s) const { return ((s - a) * s + b) * s - c; }
    double slope(double s) const { return (3.0 * s - 2.0 * a) * s + b; }
};

double polish(const Cubic& p, double x) {
    for (int i = 0; i < 4; ++i) {
        const double d = p.slope(x);
        if (d == 0.0) break;
        const double next = x - p.value(x) / d;
        if (!std::isfinite(next) || next <= 0.0) break;
        if (next == x) break;
        x = next;
    }
    return x;
}

double best_root(const Cubic& p) {
    // p(0) = −c < 0 and p → ∞, so [0, hi] brackets a real root.
    double lo = 0.0;
    double hi = 1.0 + std::max({p.a, p.b, p.c});
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (p.value(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    const double r = polish(p, 0.5 * (lo + hi));

    std::array<double, 3> roots{r, r, r};
    int count = 1;
    const double sum = p.a - r;
    const double prod = p.c / r;
    const double disc = sum * sum - 4.0 * prod;
    if (disc >= 0.0) {
        const double q = 0.5 * (sum + std::copysign(std::sqrt(disc), sum));
        roots[1] = polish(p, q);
        roots[2] = polish(p, prod / q);
        count = 3;
    }
    double best = roots[0];
    for (int i = 1; i < count; ++i)
        if (roots[i] > 0.0 && std::abs(p.slope(roots[i])) > std::abs(p.slope(best))) best = roots[i];
    return best;
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

}  // namespace

DrudeParams make_drude_params(double w0, double Omega, double gamma) {
    require_positive(w0, "w0");
    require_positive(Omega, "Omega");
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be nonnegative and finite");
    DrudeParams p{w0, Omega, gamma, DampingRegime::Underdamped, 0.0};
    const double w1sq = w0 * w0 - 0.25 * gamma * gamma;
    p.regime = w0 > 0.5 * gamma ? DampingRegime::Underdamped : DampingRegime::Overdamped;
    p.w1 = std::sqrt(std::abs(w1sq));
    return p;
}

DrudeParams drude_params_from_physical(double omega0, double omega_d, double gamma0, DrudeVariant variant) {
    require_positive(omega0, "omega0");
    require_positive(omega_d, "omega_d");
    if (!(gamma0 >= 0.0)) throw DomainError("gamma0 must be nonnegative");
    const double w02 = omega0 * omega0;
    Cubic p = variant == DrudeVariant::Drude ? Cubic{omega_d, w02 + gamma0 * omega_d, w02 * omega_d}
                                             : Cubic{gamma0 + omega_d, w02, w02 * omega_d};
    const double Omega = best_root(p);
    // γ = a − Ω rewritten through p(Ω) = 0, free of cancellation when γ ≪ Ω.
    const double gamma = variant == DrudeVariant::Drude ? gamma0 * omega_d * Omega / (Omega * Omega + w02)
                                                        : gamma0 * w02 / (Omega * Omega + w02);
    return make_drude_params(std::sqrt(p.c / Omega), Omega, gamma);
}

PhysicalParams drude_params_to_physical(const DrudeParams& p, DrudeVariant variant) {
    const double w02 = p.w0 * p.w0;
    const double O = p.Omega;
    const double g = p.gamma;
    PhysicalParams out;
    if (variant == DrudeVariant::Drude) {
        out.omega_d = O + g;
        out.omega0 = std::sqrt(w02 * O / (O + g));
        out.gamma0 = g * (O * (O + g) + w02) / ((O + g) * (O + g));
    } else {
        const double o02 = O * g + w02;
        out.omega0 = std::sqrt(o02);
        out.omega_d = O * w02 / o02;
        out.gamma0 = O + g - out.omega_d;
    }
    return out;
}

double drude_q(const DrudeParams& p) { return specfun::arccos_ratio(p.gamma / (2.0 * p.w0)) / p.w0; }

DrudeEnergies drude_energies_closed(const DrudeParams& p, double hbar) {
    const double w02 = p.w0 * p.w0;
    const double O = p.Omega;
    const double g = p.gamma;
    const double O2 = O * O;
    const double w1sq = w02 - 0.25 * g * g;
    const double Q = drude_q(p);
    const double denom = (O + g) * (w02 - O * g + O2);
    if (denom == 0.0) throw DomainError("drude_energies_closed: Omega coincides with another root");

    const double A = ((w02 + O2) * (2.0 * O * w1sq + w02 * g) - 0.5 * O2 * g * g * g) / denom * Q;
    const double B = O * g * (O2 + O * g - w02) / denom * std::log(O / p.w0);
    const double P = w1sq * Q;

    DrudeEnergies e;
    e.E_s = hbar / (2.0 * pi) * (A + B);
    e.F = hbar / (2.0 * pi) * ((O + g) * std::log1p(g / O) + g * std::log(O / p.w0) + 2.0 * P);
    e.K = e.F - e.E_s;
    return e;
}

double k_drude_closed(double omega0, double omega_d, double gamma0, double hbar) {
    const auto p = drude_params_from_physical(omega0, omega_d, gamma0, DrudeVariant::Drude);
    return drude_energies_closed(p, hbar).K;
}

double k_extended_drude2_closed(double w0, double Omega, double gamma, double hbar) {
    const auto given = make_drude_params(w0, Omega, gamma);
    if (gamma == 0.0) return 0.0;
    const auto phys = drude_params_to_physical(given, DrudeVariant::ExtendedDrude2);
    const auto p = drude_params_from_physical(phys.omega0, phys.omega_d, phys.gamma0, DrudeVariant::ExtendedDrude2);

    const double w02 = p.w0 * p.w0;
    const double O = p.Omega;
    const double g = p.gamma;
    const double O2 = O * O;
    const double Og = O * g;
    const double denom = (Og + w02) * (Og - O2 - w02);
    if (denom == 0.0) throw DomainError("k_extended_drude2_closed: Omega coincides with another root");

    // Logarithms grouped into dimensionless ratios.
    const double C = g * (w02 - O2) * drude_q(p) + (O2 + w02 - Og) * std::log1p(Og / w02) +
                     Og * std::log(O2 / w02);
    return hbar / (2.0 * pi) * O * w02 / denom * C;
}

}  // namespace qbm
