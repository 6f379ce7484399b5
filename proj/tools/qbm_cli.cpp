// qbm: command-line front end for the ground-state energies and K

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qbm/bath_io.hpp"
#include "qbm/bath_suite.hpp"
#include "qbm/discrete_bath.hpp"
#include "qbm/errors.hpp"
#include "qbm/tables.hpp"
#include "qbm/thermo.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_violation = 2;

struct RunConfig {
    double hbar = 1.0;
    double tol = 1e-9;
    std::size_t max_evals = 2'000'000;
    std::string format = "table";
    std::string out_path;
    std::optional<std::uint64_t> seed;

    qbm::QuadratureOptions quadrature() const {
        qbm::QuadratureOptions q;
        q.abs_tol = tol;
        q.max_evals = max_evals;
        return q;
    }
};

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string quantity(const qbm::Quantity& q) {
    if (!q.divergent) return num(q.value);
    return std::string(to_string(q.divergence.tag)) + "(" + std::string(to_string(q.divergence.sign)) + ")";
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void render(std::ostream& os, const Table& t, const std::string& format) {
    if (format == "csv") {
        auto line = [&os](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
            os << '\n';
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return;
    }
    std::vector<std::size_t> width(t.header.size(), 0);
    auto grow = [&width](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    grow(t.header);
    for (const auto& r : t.rows) grow(r);
    auto line = [&os, &width](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << cells[i];
            if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw CLI::ValidationError("--out", "cannot open " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int cmd_report(const RunConfig& cfg, const std::string& model_text, double omega0, double mass) {
    const auto model = qbm::parse_model(model_text);
    const auto r = qbm::thermo_report(model, omega0, cfg.hbar, cfg.quadrature());
    Table t{{"quantity", "value"}, {}};
    t.rows = {{"model", r.model},
              {"omega0", num(r.omega0)},
              {"M", num(mass)},
              {"hbar", num(r.hbar)},
              {"status", std::string(to_string(r.status.tag))},
              {"method", std::string(to_string(r.method))},
              {"E_s0", quantity(r.E_s0)},
              {"F0", quantity(r.F0)},
              {"K", quantity(r.K)},
              {"K_error", r.K.divergent ? "nan" : num(r.K.error)},
              {"E_g", num(r.E_g)},
              {"K_over_Eg", num(r.K_over_Eg)},
              {"K_pi_over_gamma_Eg", num(r.K_pi_over_gamma_Eg)}};
    Output out(cfg.out_path);
    render(out.stream(), t, cfg.format);
    return exit_ok;
}

int cmd_table1(const RunConfig& cfg) {
    const auto t1 = qbm::table1(cfg.quadrature());
    Table t{{"omega_e", "g0.5", "g1", "g2", "g5"}, {}};
    for (const auto& row : t1.rows) {
        std::vector<std::string> cells{num(row.omega_e)};
        for (double v : row.k_over_eg) cells.push_back(num(v));
        t.rows.push_back(cells);
    }
    std::vector<std::string> limit{"inf"};
    for (double v : t1.limit) limit.push_back(num(v));
    t.rows.push_back(limit);
    Output out(cfg.out_path);
    render(out.stream(), t, cfg.format);
    return exit_ok;
}

int cmd_table2(const RunConfig& cfg) {
    Table t{{"omega0", "omega_d", "Kd_norm", "Kd1_norm"}, {}};
    for (const auto& row : qbm::table2(cfg.quadrature()))
        t.rows.push_back({num(row.omega0), num(row.omega_d), num(row.kd_norm), num(row.kd1_norm)});
    Output out(cfg.out_path);
    render(out.stream(), t, cfg.format);
    return exit_ok;
}

int cmd_fig1(const RunConfig& cfg) {
    Table t{{"x", "Omega_over_w0", "K_over_Eg"}, {}};
    bool negative = true;
    for (const auto& p : qbm::fig1()) {
        t.rows.push_back({num(p.x), num(p.omega_over_w0), num(p.k_over_eg)});
        negative = negative && p.k_over_eg < 0.0;
    }
    Output out(cfg.out_path);
    render(out.stream(), t, cfg.format);
    if (!negative) {
        std::cerr << "fig1: K_over_Eg >= 0 at some point\n";
        return exit_violation;
    }
    return exit_ok;
}

int print_suite(std::ostream& os, const qbm::SuiteReport& rep, const std::string& format) {
    Table t{{"check", "result", "worst", "detail"}, {}};
    for (const auto& c : rep.checks) t.rows.push_back({c.name, c.passed ? "PASS" : "FAIL", num(c.worst), c.detail});
    render(os, t, format);
    return rep.all_passed() ? exit_ok : exit_violation;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

int cmd_discrete(const RunConfig& cfg, const std::string& path, const std::string& random, std::size_t count) {
    qbm::DiscreteBath bath;
    std::optional<std::size_t> random_n;
    if (!random.empty()) {
        const std::string digits = random.rfind("N=", 0) == 0 ? random.substr(2) : random;
        std::size_t pos = 0;
        unsigned long n = 0;
        try {
            n = std::stoul(digits, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != digits.size() || n == 0) throw CLI::ValidationError("--random", "expected N=<count>");
        random_n = n;
        std::mt19937_64 rng(cfg.seed.value_or(42));
        bath = qbm::random_bath(n, rng);
    } else {
        bath = qbm::load_bath(path);
    }

    const auto modes = qbm::normal_modes(bath);
    const auto weights = qbm::residue_weights(bath, modes);
    const double F = qbm::free_energy_0(bath, modes, cfg.hbar);
    const double Es = qbm::system_energy_0(bath, modes, cfg.hbar);
    const auto kl = qbm::k_second_law(bath, modes, cfg.hbar);
    const auto oracle = qbm::exact_ground_state_oracle(bath, cfg.hbar);

    double mode_residual = 0.0;
    for (std::size_t k = 0; k < modes.omega_bar.size(); ++k)
        mode_residual = std::max(mode_residual, rel(oracle.omega_bar[k], modes.omega_bar[k]));
    const double es_residual = rel(oracle.E_s, Es);
    const double residue_residual = std::abs(kl.residue_sum - (F - Es)) / std::max(std::abs(kl.K), 1e-300);

    Output out(cfg.out_path);
    auto& os = out.stream();
    Table summary{{"quantity", "value"}, {}};
    summary.rows = {{"N", std::to_string(bath.oscillators.size())},
                    {"gamma_zero", num(qbm::gamma_zero(bath))},
                    {"F0", num(F)},
                    {"E_s0", num(Es)},
                    {"K", num(kl.K)},
                    {"residue_sum", num(kl.residue_sum)},
                    {"skipped_pairs", std::to_string(kl.skipped.size())},
                    {"residue_residual", num(residue_residual)},
                    {"oracle_E_s_residual", num(es_residual)},
                    {"oracle_modes_residual", num(mode_residual)}};
    render(os, summary, cfg.format);
    os << '\n';
    Table mt{{"k", "omega_bar", "u2", "mode_term"}, {}};
    for (std::size_t k = 0; k < modes.omega_bar.size(); ++k)
        mt.rows.push_back({std::to_string(k), num(modes.omega_bar[k]), num(weights[k]), num(kl.per_mode_terms[k])});
    render(os, mt, cfg.format);
    os << '\n';
    Table pt{{"l", "omega_l", "pole_term"}, {}};
    for (std::size_t l = 0; l < bath.oscillators.size(); ++l)
        pt.rows.push_back({std::to_string(l), num(bath.oscillators[l].omega), num(kl.per_bath_pole_terms[l])});
    render(os, pt, cfg.format);

    int status = exit_ok;
    if (kl.K < 0.0 || es_residual > 1e-10 || mode_residual > 1e-10 || !(residue_residual <= 1e-8))
        status = exit_violation;

    if (random_n) {
        qbm::SuiteOptions opts;
        opts.count = count;
        opts.seed = cfg.seed.value_or(42);
        opts.fixed_n = *random_n;
        opts.hbar = cfg.hbar;
        os << '\n';
        if (print_suite(os, qbm::run_bath_suite(opts), cfg.format) != exit_ok) status = exit_violation;
    }
    if (status != exit_ok) std::cerr << "discrete: invariant violated\n";
    return status;
}

int cmd_check(const RunConfig& cfg, std::size_t count) {
    qbm::SuiteOptions opts;
    opts.count = count;
    opts.seed = cfg.seed.value_or(42);
    opts.hbar = cfg.hbar;
    Output out(cfg.out_path);
    const int status = print_suite(out.stream(), qbm::run_bath_suite(opts), cfg.format);
    if (status != exit_ok) std::cerr << "check: invariant violated\n";
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-temperature energies and K for an oscillator coupled to a bath"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--hbar", cfg.hbar, "Value of hbar")->check(CLI::PositiveNumber);
    app.add_option("--tol", cfg.tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-evals", cfg.max_evals, "Integrand evaluation budget")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "table"}));
    app.add_option("--out", cfg.out_path, "Write output to this file");
    app.add_option("--seed", cfg.seed, "Seed for random baths");

    auto* report = app.add_subcommand("report", "E_s(0), F(0) and K for a continuous model");
    std::string model_text;
    double omega0 = 1.0, mass = 1.0;
    report->add_option("--model", model_text, "Model, e.g. \"drude g=1 wd=1\"")->required();
    report->add_option("--omega0", omega0, "Bare frequency")->check(CLI::PositiveNumber);
    report->add_option("--mass", mass, "Oscillator mass")->check(CLI::PositiveNumber);

    auto* t1 = app.add_subcommand("table1", "K_e/E_g for the exponential model");
    auto* t2 = app.add_subcommand("table2", "K_d and K_{d,1} normalized by gamma_o E_g/pi");
    auto* f1 = app.add_subcommand("fig1", "K_{d,2}/E_g curves for Omega/w0 in {2, 5, 10}");

    auto* discrete = app.add_subcommand("discrete", "Normal modes and K for a discrete bath");
    std::string bath_path, random;
    std::size_t discrete_count = 200;
    auto* path_opt = discrete->add_option("bath", bath_path, "Bath file");
    auto* random_opt = discrete->add_option("--random", random, "Random bath, N=<count>");
    discrete->add_option("--count", discrete_count, "Baths in the accompanying suite (with --random)")
        ->check(CLI::PositiveNumber);
    path_opt->excludes(random_opt);
    discrete->callback([&] {
        if (bath_path.empty() && random.empty()) throw CLI::RequiredError("bath file or --random");
    });

    auto* check = app.add_subcommand("check", "Invariant suite over seeded random baths");
    std::size_t check_count = 200;
    check->add_option("--count", check_count, "Number of baths")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*report) return cmd_report(cfg, model_text, omega0, mass);
        if (*t1) return cmd_table1(cfg);
        if (*t2) return cmd_table2(cfg);
        if (*f1) return cmd_fig1(cfg);
        if (*discrete) return cmd_discrete(cfg, bath_path, random, discrete_count);
        if (*check) return cmd_check(cfg, check_count);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const qbm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const qbm::InvalidModel& e) {
        std::cerr << "InvalidKernel: " << e.what() << '\n';
        return exit_violation;
    } catch (const qbm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_violation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
