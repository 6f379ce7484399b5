// thermo.cpp: frequency integrals for E_s(0), F(0) and K

#include "qbm/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "qbm/errors.hpp"
#include "qbm/specfun.hpp"

namespace qbm {
namespace {

constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

using KernelFn = std::function<Complex(double)>;

struct Kernel {
    KernelFn gp;
    KernelFn dgp;
};

Kernel closed_kernel(const SpectralModel& model) {
    return {[model](double w) { return gamma_plus(model, w); },
            [model](double w) { return gamma_plus_derivative(model, w); }};
}

Kernel regularized_kernel(const SpectralModel& model, double delta) {
    return {[model, delta](double w) { return gamma_plus_regularized(model, w, delta); },
            [model, delta](double w) { return gamma_plus_regularized_derivative(model, w, delta); }};
}

double es_integrand(const Kernel& k, double w0, double w) {
    const Complex G = w * w - w0 * w0 + I * w * k.gp(w);
    return (w0 * w0 + w * w) * G.imag() / std::norm(G);
}

double f_integrand(const Kernel& k, double w0, double w) {
    const Complex g = k.gp(w);
    const Complex G = w * w - w0 * w0 + I * w * g;
    const Complex dG = 2.0 * w + I * g + I * w * k.dgp(w);
    return w * (-dG / G).imag();
}

double kk_integrand(const Kernel& k, double w0, double w) {
    const Complex G = w * w - w0 * w0 + I * w * k.gp(w);
    const Complex dR = -I * k.dgp(w);
    return (w * w * dR / G).imag();
}

double model_scale(const SpectralModel& model, double omega0) {
    return std::max({omega0, cutoff_frequency(model), coupling_rate(model)});
}

Quantity integrate_or_classify(const RealFunction& f, double scale, double hbar, const QuadratureOptions& opts,
                               const std::vector<double>& splits) {
    Quantity q;
    const double lo = 1e2 * scale;
    const auto cls = classify_tail(f, lo, 1e4 * lo, opts);
    if (cls.tag != DivergenceTag::Convergent) {
        q.divergent = true;
        q.divergence = cls;
        q.value = std::numeric_limits<double>::quiet_NaN();
        return q;
    }
    q.divergence = cls;
    const auto r = integrate_semi_infinite(f, opts, splits);
    q.value = hbar / (2.0 * pi) * r.value;
    q.error = hbar / (2.0 * pi) * r.abs_error_estimate;
    return q;
}

void require_omega0(double omega0) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw DomainError("omega0 must be positive and finite");
}

void require_usable(const SpectralModel& model) {
    validate(model);
    const auto st = classify_model(model);
    if (st.tag == ModelStatus::Tag::InvalidKernel) throw InvalidModel(describe(model) + ": " + st.reason);
}

// Kernel for E_s and F: closed form for valid models, δ-regularized form for the K-divergent ones.
Kernel energy_kernel(const SpectralModel& model) {
    const auto st = classify_model(model);
    if (st.tag == ModelStatus::Tag::ValidButKDivergent) {
        const bool regularizable = (std::holds_alternative<ExtendedOhmic>(model) && std::get<ExtendedOhmic>(model).p == 2) ||
                                   (std::holds_alternative<ExtendedDrude>(model) && std::get<ExtendedDrude>(model).n == 4);
        if (!regularizable)
            throw Unsupported(describe(model) + ": kernel involves higher delta-derivative weights");
        return regularized_kernel(model, coupling_rate(model));
    }
    return closed_kernel(model);
}

bool is_drude(const SpectralModel& model) {
    if (std::holds_alternative<Drude>(model)) return true;
    const auto* x = std::get_if<ExtendedDrude>(&model);
    return x && x->n == 0;
}

}  // namespace

std::string_view to_string(Method method) {
    switch (method) {
        case Method::GenericQuadrature: return "generic-quadrature";
        case Method::ClosedForm: return "closed-form";
        case Method::SpecialIntegrand: return "special-integrand";
    }
    return "unknown";
}

double system_energy_integrand(const SpectralModel& model, double omega0, double omega) {
    return es_integrand(closed_kernel(model), omega0, omega);
}

double free_energy_integrand(const SpectralModel& model, double omega0, double omega) {
    return f_integrand(closed_kernel(model), omega0, omega);
}

double k_integrand(const SpectralModel& model, double omega0, double omega) {
    return kk_integrand(closed_kernel(model), omega0, omega);
}

double k_integrand_regularized(const SpectralModel& model, double omega0, double omega, double delta) {
    return kk_integrand(regularized_kernel(model, delta), omega0, omega);
}

std::vector<double> resonance_points(const SpectralModel& model, double omega0) {
    std::vector<double> pts{omega0};
    if (const double c = cutoff_frequency(model); c > 0.0) pts.push_back(c);
    Kernel k;
    try {
        k = energy_kernel(model);
    } catch (const Error&) {
        return pts;
    }
    auto re_g = [&](double w) { return (w * w - omega0 * omega0 + I * w * k.gp(w)).real(); };
    const double scale = model_scale(model, omega0);
    const double lo = 1e-4 * scale;
    const double hi = 1e4 * scale;
    constexpr int n = 800;
    const double ratio = std::pow(hi / lo, 1.0 / n);
    double a = lo;
    double fa = re_g(a);
    for (int i = 0; i < n; ++i) {
        const double b = a * ratio;
        const double fb = re_g(b);
        if ((fa < 0.0) != (fb < 0.0)) {
            double x0 = a;
            double x1 = b;
            double f0 = fa;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (x0 + x1);
                const double fm = re_g(mid);
                if ((fm < 0.0) == (f0 < 0.0)) {
                    x0 = mid;
                    f0 = fm;
                } else {
                    x1 = mid;
                }
            }
            pts.push_back(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

Quantity system_energy_0_cont(const SpectralModel& model, double omega0, double hbar, const QuadratureOptions& opts) {
    require_omega0(omega0);
    require_usable(model);
    const Kernel k = energy_kernel(model);
    return integrate_or_classify([&k, omega0](double w) { return es_integrand(k, omega0, w); },
                                 model_scale(model, omega0), hbar, opts, resonance_points(model, omega0));
}

Quantity free_energy_0_cont(const SpectralModel& model, double omega0, double hbar, const QuadratureOptions& opts) {
    require_omega0(omega0);
    require_usable(model);
    const Kernel k = energy_kernel(model);
    return integrate_or_classify([&k, omega0](double w) { return f_integrand(k, omega0, w); },
                                 model_scale(model, omega0), hbar, opts, resonance_points(model, omega0));
}

Quantity k_cont(const SpectralModel& model, double omega0, double hbar, const QuadratureOptions& opts) {
    require_omega0(omega0);
    require_usable(model);
    const auto st = classify_model(model);
    if (st.tag == ModelStatus::Tag::ValidButKDivergent) {
        // Classify the tail for several δ weights; the δ-independent outcome is the answer.
        const double g0 = coupling_rate(model);
        std::vector<DivergenceClass> classes;
        for (double factor : {0.5, 1.0, 2.0}) {
            const double delta = factor * g0;
            const Kernel k = regularized_kernel(model, delta);
            const double lo = 1e3 * std::max({omega0, g0, delta, cutoff_frequency(model)});
            // Surfaces Unsupported (n >= 6) before any quadrature work.
            (void)kk_integrand(k, omega0, lo);
            classes.push_back(classify_tail([&k, omega0](double w) { return kk_integrand(k, omega0, w); }, lo,
                                            1e3 * lo, opts));
        }
        for (const auto& c : classes)
            if (c.tag != classes.front().tag || c.sign != classes.front().sign)
                throw Inconclusive(describe(model) + ": tail class of K depends on the delta weight");
        Quantity q;
        q.divergent = classes.front().tag != DivergenceTag::Convergent;
        q.divergence = classes.front();
        q.value = std::numeric_limits<double>::quiet_NaN();
        if (!q.divergent) throw Inconclusive(describe(model) + ": K tail unexpectedly convergent");
        return q;
    }
    const Kernel k = closed_kernel(model);
    return integrate_or_classify([&k, omega0](double w) { return kk_integrand(k, omega0, w); },
                                 model_scale(model, omega0), hbar, opts, resonance_points(model, omega0));
}

double k_drude_lambda(double omega0, double omega_d, double gamma0, double hbar, const QuadratureOptions& opts) {
    require_omega0(omega0);
    if (!(omega_d > 0.0)) throw DomainError("omega_d must be positive");
    if (gamma0 == 0.0) return 0.0;
    if (!(gamma0 > 0.0)) throw DomainError("gamma0 must be nonnegative");
    const double l0 = omega0 / gamma0;
    const double ld = omega_d / gamma0;
    const double l02 = l0 * l0;
    const double ld2 = ld * ld;
    auto f = [=](double l) {
        const double l2 = l * l;
        const double num = 2.0 * ld2 * l2 * l2 * l - (2.0 * l02 + ld) * ld2 * l2 * l;
        const double re = (l2 + ld2) * (l2 - l02) - ld * l2;
        const double im = ld2 * l;
        return num / (re * re + im * im);
    };
    std::vector<double> splits;
    for (double w : resonance_points(Drude{gamma0, omega_d}, omega0)) splits.push_back(w / gamma0);
    const auto r = integrate_semi_infinite(f, opts, splits);
    return hbar * gamma0 / (2.0 * pi) * r.value;
}

double k_exponential_integrand(double omega0, double omega_e, double gamma0, double lambda) {
    const double ee1 = specfun::exp_e1(lambda);
    const double eei = specfun::exp_neg_ei(lambda);
    const double em = std::exp(-lambda);
    const double l2 = lambda * lambda;
    const Complex f1 = l2 * Complex(ee1 - eei, pi * em);
    const Complex f2(omega_e * omega_e * l2 - omega0 * omega0 - gamma0 * omega_e / pi * lambda * (ee1 + eei),
                     omega_e * gamma0 * lambda * em);
    return (f1 / f2).imag();
}

double k_exponential(double omega0, double omega_e, double gamma0, double hbar, const QuadratureOptions& opts) {
    require_omega0(omega0);
    if (!(omega_e > 0.0)) throw DomainError("omega_e must be positive");
    if (gamma0 == 0.0) return 0.0;
    if (!(gamma0 > 0.0)) throw DomainError("gamma0 must be nonnegative");
    std::vector<double> splits{1.0};
    for (double w : resonance_points(Exponential{gamma0, omega_e}, omega0)) splits.push_back(w / omega_e);
    const auto r = integrate_semi_infinite(
        [=](double l) { return k_exponential_integrand(omega0, omega_e, gamma0, l); }, opts, splits);
    return hbar * gamma0 * omega_e * omega_e / (2.0 * pi * pi) * r.value;
}

double k_extended_drude1(double omega0, double omega_d, double gamma0, double hbar, const QuadratureOptions& opts) {
    require_omega0(omega0);
    if (!(omega_d > 0.0)) throw DomainError("omega_d must be positive");
    if (gamma0 == 0.0) return 0.0;
    if (!(gamma0 > 0.0)) throw DomainError("gamma0 must be nonnegative");
    const double l0 = omega0 / gamma0;
    const double ld = omega_d / gamma0;
    const double ld2 = ld * ld;
    auto f = [=](double l) {
        const double l2 = l * l;
        const double L = std::log(l / ld);
        const Complex g1 = l2 * Complex(2.0 * ld / pi * ((ld2 - l2) * L + l2 + ld2), ld * (l2 - ld2));
        const Complex g2 = (l2 + ld2) * Complex((l2 - l0 * l0) * (l2 + ld2) - 2.0 * ld * l2 / pi * L, ld * l2);
        return (g1 / g2).imag();
    };
    std::vector<double> splits;
    for (double w : resonance_points(ExtendedDrude{gamma0, omega_d, 1}, omega0)) splits.push_back(w / gamma0);
    const auto r = integrate_semi_infinite(f, opts, splits);
    return hbar * gamma0 / (2.0 * pi) * r.value;
}

ThermoReport thermo_report(const SpectralModel& model, double omega0, double hbar, const QuadratureOptions& opts) {
    require_omega0(omega0);
    require_usable(model);
    ThermoReport rep;
    rep.model = describe(model);
    rep.omega0 = omega0;
    rep.hbar = hbar;
    rep.status = classify_model(model);
    rep.E_g = 0.5 * hbar * omega0;

    const double g0 = coupling_rate(model);
    if (is_drude(model)) {
        const double wd = cutoff_frequency(model);
        const auto e = drude_energies_closed(drude_params_from_physical(omega0, wd, g0, DrudeVariant::Drude), hbar);
        rep.E_s0.value = e.E_s;
        rep.F0.value = e.F;
        rep.K.value = e.K;
        rep.method = Method::ClosedForm;
    } else {
        rep.E_s0 = system_energy_0_cont(model, omega0, hbar, opts);
        rep.F0 = free_energy_0_cont(model, omega0, hbar, opts);
        if (const auto* m = std::get_if<Exponential>(&model)) {
            rep.K.value = k_exponential(omega0, m->omega_e, m->gamma0, hbar, opts);
            rep.method = Method::SpecialIntegrand;
        } else if (const auto* x = std::get_if<ExtendedDrude>(&model); x && x->n == 1) {
            rep.K.value = k_extended_drude1(omega0, x->omega_d, x->gamma0, hbar, opts);
            rep.method = Method::SpecialIntegrand;
        } else if (x && x->n == 2) {
            const auto p = drude_params_from_physical(omega0, x->omega_d, x->gamma0, DrudeVariant::ExtendedDrude2);
            rep.K.value = k_extended_drude2_closed(p.w0, p.Omega, p.gamma, hbar);
            rep.method = Method::ClosedForm;
        } else {
            rep.K = k_cont(model, omega0, hbar, opts);
            rep.method = Method::GenericQuadrature;
        }
    }
    if (rep.K.divergent) {
        rep.K_over_Eg = std::numeric_limits<double>::quiet_NaN();
        rep.K_pi_over_gamma_Eg = std::numeric_limits<double>::quiet_NaN();
    } else {
        rep.K_over_Eg = rep.K.value / rep.E_g;
        rep.K_pi_over_gamma_Eg = rep.K.value * pi / (g0 * rep.E_g);
    }
    return rep;
}

}  // namespace qbm
