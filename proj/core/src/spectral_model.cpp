// spectral_model.cpp: closed forms for J, γ(t) and γ̃₊ of the five model families

#include "qbm/spectral_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "qbm/errors.hpp"
#include "qbm/specfun.hpp"

namespace qbm {
namespace {

constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be positive and finite");
}

void require_frequency(double omega) { require_positive(omega, "frequency"); }

Complex drude_gamma(double g, double wd, double w) { return g * wd / Complex(wd, -w); }

Complex drude_gamma_derivative(double g, double wd, double w) {
    const Complex d(wd, -w);
    return I * g * wd / (d * d);
}

[[noreturn]] void throw_status(const SpectralModel& model, const ModelStatus& st) {
    if (st.tag == ModelStatus::Tag::InvalidKernel)
        throw InvalidModel(describe(model) + ": " + st.reason);
    throw Unsupported(describe(model) + ": damping kernel carries delta-distribution terms; " +
                      "gamma_plus has no finite value");
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

std::string_view to_string(ModelStatus::Tag tag) {
    switch (tag) {
        case ModelStatus::Tag::Valid: return "valid";
        case ModelStatus::Tag::InvalidKernel: return "invalid-kernel";
        case ModelStatus::Tag::ValidButKDivergent: return "valid-but-K-divergent";
    }
    return "unknown";
}

void validate(const SpectralModel& model) {
    std::visit(overloaded{
                   [](const Ohmic& m) { require_positive(m.gamma0, "gamma0"); },
                   [](const Drude& m) {
                       require_positive(m.gamma0, "gamma0");
                       require_positive(m.omega_d, "omega_d");
                   },
                   [](const Exponential& m) {
                       require_positive(m.gamma0, "gamma0");
                       require_positive(m.omega_e, "omega_e");
                   },
                   [](const ExtendedOhmic& m) {
                       require_positive(m.gamma0, "gamma0");
                       if (m.p < 0) throw DomainError("p must be nonnegative");
                   },
                   [](const ExtendedDrude& m) {
                       require_positive(m.gamma0, "gamma0");
                       require_positive(m.omega_d, "omega_d");
                       if (m.n < 0) throw DomainError("n must be nonnegative");
                   },
               },
               model);
}

ModelStatus classify_model(const SpectralModel& model) {
    ModelStatus st;
    if (const auto* m = std::get_if<ExtendedOhmic>(&model)) {
        if (m->p % 2 == 1) {
            st.tag = ModelStatus::Tag::InvalidKernel;
            st.reason = "odd p gives a principal-value 1/t^2 damping kernel with no gamma_plus";
        } else if (m->p == 2) {
            st.tag = ModelStatus::Tag::ValidButKDivergent;
            st.sign = TailSign::Negative;
            st.reason = "K diverges logarithmically to -infinity";
        }
    } else if (const auto* d = std::get_if<ExtendedDrude>(&model)) {
        if (d->n >= 3 && d->n % 2 == 1) {
            st.tag = ModelStatus::Tag::InvalidKernel;
            st.reason = "odd n >= 3 gives a principal-value 1/t^2 damping kernel";
        } else if (d->n >= 4) {
            st.tag = ModelStatus::Tag::ValidButKDivergent;
            st.sign = d->n == 4 ? TailSign::Negative : TailSign::Mixed;
            st.reason = d->n == 4 ? "K diverges logarithmically to -infinity"
                                  : "K diverges; sign depends on higher delta-derivative weights";
        }
    }
    return st;
}

double coupling_rate(const SpectralModel& model) {
    return std::visit([](const auto& m) { return m.gamma0; }, model);
}

double cutoff_frequency(const SpectralModel& model) {
    return std::visit(overloaded{
                          [](const Ohmic&) { return 0.0; },
                          [](const Drude& m) { return m.omega_d; },
                          [](const Exponential& m) { return m.omega_e; },
                          [](const ExtendedOhmic&) { return 0.0; },
                          [](const ExtendedDrude& m) { return m.omega_d; },
                      },
                      model);
}

std::string describe(const SpectralModel& model) {
    return std::visit(
        overloaded{
            [](const Ohmic& m) { return "ohmic g=" + format_number(m.gamma0); },
            [](const Drude& m) {
                return "drude g=" + format_number(m.gamma0) + " wd=" + format_number(m.omega_d);
            },
            [](const Exponential& m) {
                return "exp g=" + format_number(m.gamma0) + " we=" + format_number(m.omega_e);
            },
            [](const ExtendedOhmic& m) {
                return "xohmic g=" + format_number(m.gamma0) + " p=" + std::to_string(m.p);
            },
            [](const ExtendedDrude& m) {
                return "xdrude g=" + format_number(m.gamma0) + " wd=" + format_number(m.omega_d) +
                       " n=" + std::to_string(m.n);
            },
        },
        model);
}

SpectralModel parse_model(std::string_view text) {
    struct Token {
        std::string_view text;
        std::size_t column;
    };
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        tokens.push_back({text.substr(i, j - i), i + 1});
        i = j;
    }
    if (tokens.empty()) throw ParseError("empty model description", 1, 1);

    const std::string_view kind = tokens[0].text;
    std::vector<std::string_view> allowed;
    if (kind == "ohmic") allowed = {"g"};
    else if (kind == "drude") allowed = {"g", "wd"};
    else if (kind == "exp") allowed = {"g", "we"};
    else if (kind == "xohmic") allowed = {"g", "p"};
    else if (kind == "xdrude") allowed = {"g", "wd", "n"};
    else
        throw ParseError("unknown model '" + std::string(kind) +
                             "' (expected ohmic, drude, exp, xohmic or xdrude)",
                         1, tokens[0].column);

    std::vector<std::optional<double>> values(allowed.size());
    std::vector<std::size_t> value_column(allowed.size(), 1);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        const auto tok = tokens[t];
        const auto eq = tok.text.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw ParseError("expected key=value, got '" + std::string(tok.text) + "'", 1, tok.column);
        const auto key = tok.text.substr(0, eq);
        const auto val = tok.text.substr(eq + 1);
        std::size_t slot = allowed.size();
        for (std::size_t k = 0; k < allowed.size(); ++k)
            if (allowed[k] == key) slot = k;
        if (slot == allowed.size())
            throw ParseError("unknown key '" + std::string(key) + "' for model " + std::string(kind), 1,
                             tok.column);
        if (values[slot]) throw ParseError("duplicate key '" + std::string(key) + "'", 1, tok.column);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc() || ptr != val.data() + val.size() || val.empty())
            throw ParseError("invalid number '" + std::string(val) + "'", 1, tok.column + eq + 1);
        values[slot] = v;
        value_column[slot] = tok.column + eq + 1;
    }
    for (std::size_t k = 0; k < allowed.size(); ++k)
        if (!values[k])
            throw ParseError("missing key '" + std::string(allowed[k]) + "' for model " + std::string(kind), 1,
                             text.size() + 1);

    auto integer = [&](std::size_t slot, const char* name) {
        const double v = *values[slot];
        if (v != std::floor(v) || v < 0 || v > 1000)
            throw ParseError(std::string(name) + " must be a nonnegative integer", 1, value_column[slot]);
        return static_cast<int>(v);
    };

    SpectralModel model;
    if (kind == "ohmic") model = Ohmic{*values[0]};
    else if (kind == "drude") model = Drude{*values[0], *values[1]};
    else if (kind == "exp") model = Exponential{*values[0], *values[1]};
    else if (kind == "xohmic") model = ExtendedOhmic{*values[0], integer(1, "p")};
    else model = ExtendedDrude{*values[0], *values[1], integer(2, "n")};

    try {
        validate(model);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 1, 1);
    }
    return model;
}

double j_omega(const SpectralModel& model, double mass, double omega) {
    validate(model);
    require_frequency(omega);
    require_positive(mass, "mass");
    const auto st = classify_model(model);
    if (st.tag == ModelStatus::Tag::InvalidKernel) throw InvalidModel(describe(model) + ": " + st.reason);
    return std::visit(overloaded{
                          [&](const Ohmic& m) { return mass * m.gamma0 * omega; },
                          [&](const Drude& m) {
                              const double wd2 = m.omega_d * m.omega_d;
                              return mass * m.gamma0 * omega * wd2 / (omega * omega + wd2);
                          },
                          [&](const Exponential& m) {
                              return mass * m.gamma0 * omega * std::exp(-omega / m.omega_e);
                          },
                          [&](const ExtendedOhmic& m) {
                              return mass * m.gamma0 * omega * std::pow(omega / m.gamma0, m.p);
                          },
                          [&](const ExtendedDrude& m) {
                              const double wd2 = m.omega_d * m.omega_d;
                              return mass * m.gamma0 * omega * wd2 / (omega * omega + wd2) *
                                     std::pow(omega / m.omega_d, m.n);
                          },
                      },
                      model);
}

double gamma_t(const SpectralModel& model, double t) {
    validate(model);
    require_positive(t, "time");
    if (const auto* m = std::get_if<Drude>(&model)) return m->gamma0 * m->omega_d * std::exp(-m->omega_d * t);
    if (const auto* m = std::get_if<Exponential>(&model)) {
        const double x = m->omega_e * t;
        return 2.0 / pi * m->gamma0 * m->omega_e / (1.0 + x * x);
    }
    if (const auto* m = std::get_if<ExtendedDrude>(&model)) {
        const double x = m->omega_d * t;
        if (m->n == 0) return m->gamma0 * m->omega_d * std::exp(-x);
        if (m->n == 1) {
            // {Ei + E1}·sinh − {Ei − E1}·cosh = eˣE1(x) − e⁻ˣEi(x)
            return m->gamma0 * m->omega_d / pi * (specfun::exp_e1(x) - specfun::exp_neg_ei(x));
        }
    }
    throw Unsupported(describe(model) + ": no finite time-domain damping kernel available");
}

Complex gamma_plus(const SpectralModel& model, double omega) {
    validate(model);
    require_frequency(omega);
    const auto st = classify_model(model);
    if (st.tag != ModelStatus::Tag::Valid) throw_status(model, st);
    return std::visit(
        overloaded{
            [&](const Ohmic& m) { return Complex(m.gamma0, 0.0); },
            [&](const Drude& m) { return drude_gamma(m.gamma0, m.omega_d, omega); },
            [&](const Exponential& m) {
                const double x = omega / m.omega_e;
                return Complex(m.gamma0 * std::exp(-x),
                               m.gamma0 / pi * (specfun::exp_e1(x) + specfun::exp_neg_ei(x)));
            },
            [&](const ExtendedOhmic& m) -> Complex {
                if (m.p == 0) return Complex(m.gamma0, 0.0);
                throw Unsupported(describe(model) + ": damping kernel carries delta-distribution derivatives");
            },
            [&](const ExtendedDrude& m) -> Complex {
                if (m.n == 0) return drude_gamma(m.gamma0, m.omega_d, omega);
                if (m.n == 1) {
                    const double wd = m.omega_d;
                    const double h = m.gamma0 * wd * omega / (omega * omega + wd * wd);
                    return Complex(h, 2.0 / pi * h * std::log(omega / wd));
                }
                return m.gamma0 - drude_gamma(m.gamma0, m.omega_d, omega);
            },
        },
        model);
}

Complex gamma_plus_derivative(const SpectralModel& model, double omega) {
    validate(model);
    require_frequency(omega);
    const auto st = classify_model(model);
    if (st.tag != ModelStatus::Tag::Valid) throw_status(model, st);
    return std::visit(
        overloaded{
            [&](const Ohmic&) { return Complex(0.0, 0.0); },
            [&](const Drude& m) { return drude_gamma_derivative(m.gamma0, m.omega_d, omega); },
            [&](const Exponential& m) {
                const double x = omega / m.omega_e;
                return Complex(-m.gamma0 * std::exp(-x),
                               m.gamma0 / pi * (specfun::exp_e1(x) - specfun::exp_neg_ei(x))) /
                       m.omega_e;
            },
            [&](const ExtendedOhmic& m) -> Complex {
                if (m.p == 0) return Complex(0.0, 0.0);
                throw Unsupported(describe(model) + ": damping kernel carries delta-distribution derivatives");
            },
            [&](const ExtendedDrude& m) -> Complex {
                if (m.n == 0) return drude_gamma_derivative(m.gamma0, m.omega_d, omega);
                if (m.n == 1) {
                    const double wd = m.omega_d;
                    const double s = omega * omega + wd * wd;
                    const double h = m.gamma0 * wd * omega / s;
                    const double dh = m.gamma0 * wd * (wd * wd - omega * omega) / (s * s);
                    return Complex(dh, 2.0 / pi * (dh * std::log(omega / wd) + h / omega));
                }
                return -drude_gamma_derivative(m.gamma0, m.omega_d, omega);
            },
        },
        model);
}

Complex gamma_plus_generic(const SpectralModel& model, double omega, const QuadratureOptions& opts) {
    validate(model);
    require_frequency(omega);
    const auto st = classify_model(model);
    if (st.tag == ModelStatus::Tag::InvalidKernel) throw InvalidModel(describe(model) + ": " + st.reason);
    const bool grows_fast = (std::holds_alternative<ExtendedOhmic>(model) && std::get<ExtendedOhmic>(model).p > 0) ||
                            (std::holds_alternative<ExtendedDrude>(model) && std::get<ExtendedDrude>(model).n > 2);
    if (grows_fast)
        throw Unsupported(describe(model) + ": J grows faster than omega; the principal-value integral diverges");

    auto rate = [&model](double w) {
        w = std::max(w, std::numeric_limits<double>::min());
        return j_omega(model, 1.0, w) / w;
    };
    auto integrand = [&rate, omega](double w) { return rate(w) / ((w - omega) * (w + omega)); };
    std::vector<double> splits;
    if (const double c = cutoff_frequency(model); c > 0.0) {
        splits.push_back(c);
        splits.push_back(4.0 * c);
    }
    QuadratureOptions local = opts;
    local.abs_tol = opts.abs_tol * pi / (2.0 * omega);
    local.rel_tol = std::max(opts.rel_tol, 1e-14);
    const auto pv = principal_value_integral(integrand, omega, local, splits);
    return {rate(omega), -2.0 * omega / pi * pv.value};
}

Complex gamma_plus_regularized(const SpectralModel& model, double omega, double delta) {
    validate(model);
    require_frequency(omega);
    require_positive(delta, "delta weight");
    if (const auto* m = std::get_if<ExtendedOhmic>(&model); m && m->p == 2)
        return Complex(omega * omega, -2.0 * delta * omega) / m->gamma0;
    if (const auto* m = std::get_if<ExtendedDrude>(&model); m && m->n == 4) {
        const double wd2 = m->omega_d * m->omega_d;
        return drude_gamma(m->gamma0, m->omega_d, omega) - m->gamma0 +
               m->gamma0 * Complex(omega * omega, -2.0 * delta * omega) / wd2;
    }
    throw Unsupported(describe(model) + ": regularized kernel is defined only for p = 2 and n = 4");
}

Complex gamma_plus_regularized_derivative(const SpectralModel& model, double omega, double delta) {
    validate(model);
    require_frequency(omega);
    require_positive(delta, "delta weight");
    if (const auto* m = std::get_if<ExtendedOhmic>(&model); m && m->p == 2)
        return Complex(2.0 * omega, -2.0 * delta) / m->gamma0;
    if (const auto* m = std::get_if<ExtendedDrude>(&model); m && m->n == 4) {
        const double wd2 = m->omega_d * m->omega_d;
        return drude_gamma_derivative(m->gamma0, m->omega_d, omega) +
               m->gamma0 * Complex(2.0 * omega, -2.0 * delta) / wd2;
    }
    throw Unsupported(describe(model) + ": regularized kernel is defined only for p = 2 and n = 4");
}

Complex g_plus(const SpectralModel& model, double omega0, double omega) {
    require_positive(omega0, "omega0");
    return omega * omega - omega0 * omega0 + I * omega * gamma_plus(model, omega);
}

Complex g_plus_derivative(const SpectralModel& model, double omega0, double omega) {
    require_positive(omega0, "omega0");
    return 2.0 * omega + I * gamma_plus(model, omega) + I * omega * gamma_plus_derivative(model, omega);
}

}  // namespace qbm
