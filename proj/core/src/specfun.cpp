// specfun.cpp: exponential integrals on the positive real axis

#include "qbm/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qbm/errors.hpp"

namespace qbm::specfun {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError(std::string(name) + ": argument must be positive and finite, got " +
                          std::to_string(x));
}

// E1(x) = -γ - ln x - Σ (-x)^k / (k·k!), used for 0 < x <= 1.
double e1_series(double x) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -x / k;
        const double add = term / k;
        sum += add;
        if (std::abs(add) < eps * std::abs(sum)) break;
    }
    return -euler_gamma - std::log(x) - sum;
}

// eˣE1(x) by the modified Lentz continued fraction, x > 1.
double exp_e1_fraction(double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

// Ei(x) = γ + ln x + Σ x^k / (k·k!).
double ei_series(double x) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= x / k;
        const double add = term / k;
        sum += add;
        if (add < eps * sum) break;
    }
    return euler_gamma + std::log(x) + sum;
}

// Taylor expansion of Ei about its positive root, where the ascending series cancels.
// Coefficients a_m of eˣ/x about x₀ satisfy x₀·a_m + a_{m-1} = e^{x₀}/m!.
double ei_near_root(double x) {
    const double h = x - ei_root;
    const double ex0 = std::exp(ei_root);
    double a = ex0 / ei_root;
    double inv_fact = 1.0;
    double hp = h;
    double sum = a * hp;
    for (int m = 1; m < 60; ++m) {
        inv_fact /= m;
        a = (ex0 * inv_fact - a) / ei_root;
        hp *= h;
        const double add = a * hp / (m + 1);
        sum += add;
        if (std::abs(add) < eps * std::abs(sum) * 0.1) break;
    }
    return sum;
}

// e⁻ˣEi(x) ≈ (1/x) Σ k!/x^k, truncated at the smallest term.
double exp_neg_ei_asymptotic(double x) {
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * k / x;
        if (next > term) break;
        term = next;
        sum += term;
        if (term < eps * sum) break;
    }
    return sum / x;
}

constexpr double near_root_radius = 0.1;
constexpr double asymptotic_threshold = 40.0;

}  // namespace

double exp_e1(double x) {
    require_positive(x, "exp_e1");
    if (x <= 1.0) return std::exp(x) * e1_series(x);
    return exp_e1_fraction(x);
}

double exp_neg_ei(double x) {
    require_positive(x, "exp_neg_ei");
    if (std::abs(x - ei_root) < near_root_radius) return std::exp(-x) * ei_near_root(x);
    if (x <= asymptotic_threshold) return std::exp(-x) * ei_series(x);
    return exp_neg_ei_asymptotic(x);
}

double ei(double x) {
    require_positive(x, "ei");
    if (std::abs(x - ei_root) < near_root_radius) return ei_near_root(x);
    if (x <= asymptotic_threshold) return ei_series(x);
    const double value = std::exp(x) * exp_neg_ei_asymptotic(x);
    if (!std::isfinite(value)) throw DomainError("ei: result overflows for x = " + std::to_string(x));
    return value;
}

ComplexValue e1_negative_continuation(double y, Side side) {
    require_positive(y, "e1_negative_continuation");
    const double im = side == Side::Above ? -std::numbers::pi : std::numbers::pi;
    return {-ei(y), im};
}

ComplexValue arccos_c(double y) {
    if (std::abs(y) <= 1.0) return {std::acos(y), 0.0};
    if (y > 1.0) return {0.0, -std::acosh(y)};
    return {std::numbers::pi, std::acosh(-y)};
}

double arccos_ratio(double y) {
    if (!(y > -1.0)) throw DomainError("arccos_ratio: argument must exceed -1");
    const double u = y - 1.0;
    if (std::abs(u) < 1e-3) {
        // 1 + Σ c_n uⁿ with c_n = (-2)^n n!² / (2n+1)!
        double c = 1.0;
        double sum = 1.0;
        double up = 1.0;
        for (int n = 1; n <= 8; ++n) {
            c *= -static_cast<double>(n) / (2 * n + 1);
            up *= u;
            sum += c * up;
        }
        return sum;
    }
    if (y < 1.0) return std::acos(y) / std::sqrt(1.0 - y * y);
    return std::acosh(y) / std::sqrt(y * y - 1.0);
}

double atan_ratio(double w1_squared, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("atan_ratio: gamma must be positive");
    const double s = 4.0 * w1_squared / (gamma * gamma);
    double g;
    if (std::abs(s) < 1e-4) {
        g = 1.0 - s / 3.0 + s * s / 5.0 - s * s * s / 7.0;
    } else if (s > 0.0) {
        const double z = std::sqrt(s);
        g = std::atan(z) / z;
    } else {
        if (s <= -1.0) throw DomainError("atan_ratio: requires w1_squared > -(gamma/2)^2");
        const double z = std::sqrt(-s);
        g = std::atanh(z) / z;
    }
    return 2.0 / gamma * g;
}

}  // namespace qbm::specfun
