// bath_suite.cpp: property suite over seeded random baths

#include "qbm/bath_suite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo * std::exp(uniform01(rng) * std::log(hi / lo));
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Tracker {
    CheckResult result;
    bool lower_is_better;

    void observe(double value, bool ok, std::size_t bath_index) {
        const bool worse = lower_is_better ? value > result.worst : value < result.worst;
        if (worse) result.worst = value;
        if (!ok && result.passed) {
            result.passed = false;
            std::ostringstream msg;
            msg << "first failure at bath " << bath_index << " (value " << value << ")";
            result.detail = msg.str();
        }
    }
};

}  // namespace

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

DiscreteBath random_bath(std::size_t n, std::mt19937_64& rng) {
    DiscreteBath bath;
    bath.M = 0.5 + 1.5 * uniform01(rng);
    bath.omega0 = log_uniform(rng, 0.1, 10.0);

    std::vector<double> freqs;
    while (freqs.size() < n) {
        const double w = log_uniform(rng, 0.1, 10.0);
        const bool crowded =
            std::any_of(freqs.begin(), freqs.end(), [w](double f) { return std::abs(w - f) < 1e-3 * std::max(w, f); });
        if (!crowded) freqs.push_back(w);
    }
    std::sort(freqs.begin(), freqs.end());

    double g0 = 0.0;
    for (double w : freqs) {
        BathOscillator o{0.5 + 1.5 * uniform01(rng), w, 0.0};
        const double magnitude = 0.1 + uniform01(rng);
        o.coupling = uniform01(rng) < 0.5 ? -magnitude : magnitude;
        g0 += o.coupling * o.coupling / (bath.M * o.mass * w * w);
        bath.oscillators.push_back(o);
    }
    if (n > 0) {
        const double target = (0.05 + 4.95 * uniform01(rng)) * bath.omega0 * bath.omega0;
        const double scale = std::sqrt(target / g0);
        for (auto& o : bath.oscillators) o.coupling *= scale;
    }
    return bath;
}

bool SuiteReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport run_bath_suite(const SuiteOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    const double hbar = opts.hbar;

    auto make = [](const char* name, bool lower_is_better, double start) {
        Tracker t{{name, true, start, ""}, lower_is_better};
        return t;
    };
    Tracker interlacing = make("interlacing", false, 1.0);
    Tracker sum_rule = make("sum rule (rel <= 1e-10)", true, 0.0);
    Tracker product_rule = make("product rule (rel <= 1e-10)", true, 0.0);
    Tracker es_bound = make("E_s(0) > hbar omega0/2", false, 1e300);
    Tracker f_bound = make("F(0) > hbar omega0/2", false, 1e300);
    Tracker k_sign = make("K >= 0", false, 1e300);
    Tracker residue = make("residue sum == F - E_s (rel <= 1e-8)", true, 0.0);
    Tracker mode_sign = make("per-mode terms >= 0", false, 1e300);
    Tracker oracle_es = make("oracle E_s (rel <= 1e-10)", true, 0.0);
    Tracker oracle_modes = make("oracle normal modes (rel <= 1e-10)", true, 0.0);
    Tracker bath_excess = make("E_j > hbar omega_j/2", false, 1e300);
    Tracker total_split = make("E_total != E_s + sum E_j", false, 1e300);

    SuiteReport report;
    for (std::size_t b = 0; b < opts.count; ++b) {
        const std::size_t n =
            opts.fixed_n ? *opts.fixed_n : 1 + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(opts.max_n));
        const DiscreteBath bath = random_bath(n, rng);
        const auto modes = normal_modes(bath);
        const auto& wb = modes.omega_bar;
        const auto& osc = bath.oscillators;

        bool interlaced = wb.front() <= bath.omega0 && bath.omega0 <= wb.back();
        for (std::size_t j = 0; j < osc.size(); ++j) interlaced = interlaced && wb[j] <= osc[j].omega && osc[j].omega <= wb[j + 1];
        interlacing.observe(interlaced ? 1.0 : 0.0, interlaced, b);

        double lhs = 0.0;
        double rhs = bath.omega0 * bath.omega0 + gamma_zero(bath);
        double plhs = 1.0;
        double prhs = bath.omega0 * bath.omega0;
        for (double w : wb) {
            lhs += w * w;
            plhs *= w * w;
        }
        for (const auto& o : osc) {
            rhs += o.omega * o.omega;
            prhs *= o.omega * o.omega;
        }
        const double sr = rel(lhs, rhs);
        const double pr = rel(plhs, prhs);
        sum_rule.observe(sr, sr <= 1e-10, b);
        product_rule.observe(pr, pr <= 1e-10, b);

        const double F = free_energy_0(bath, modes, hbar);
        const double Es = system_energy_0(bath, modes, hbar);
        const double es_margin = Es - 0.5 * hbar * bath.omega0;
        es_bound.observe(es_margin, es_margin > 0.0, b);
        const double f_margin = F - 0.5 * hbar * bath.omega0;
        f_bound.observe(f_margin, f_margin > 0.0, b);

        const auto kl = k_second_law(bath, modes, hbar);
        k_sign.observe(kl.K, kl.K >= 0.0, b);
        const double rr = std::abs(kl.residue_sum - (F - Es)) / std::abs(kl.K);
        residue.observe(rr, rr <= 1e-8, b);
        const double min_term = *std::min_element(kl.per_mode_terms.begin(), kl.per_mode_terms.end());
        mode_sign.observe(min_term, min_term >= 0.0, b);

        const auto oracle = exact_ground_state_oracle(bath, hbar);
        const double oe = rel(oracle.E_s, Es);
        oracle_es.observe(oe, oe <= 1e-10, b);
        double om = 0.0;
        for (std::size_t k = 0; k < wb.size(); ++k) om = std::max(om, rel(oracle.omega_bar[k], wb[k]));
        oracle_modes.observe(om, om <= 1e-10, b);

        double min_excess = 1e300;
        double split = oracle.E_s;
        for (std::size_t j = 0; j < osc.size(); ++j) {
            min_excess = std::min(min_excess, oracle.E_bath[j] - 0.5 * hbar * osc[j].omega);
            split += oracle.E_bath[j];
        }
        bath_excess.observe(min_excess, min_excess > 0.0, b);
        const double gap = std::abs(oracle.E_total - split);
        total_split.observe(gap, gap > 1e-12 * oracle.E_total, b);
        ++report.baths;
    }

    for (auto* t : {&interlacing, &sum_rule, &product_rule, &es_bound, &f_bound, &k_sign, &residue, &mode_sign,
                    &oracle_es, &oracle_modes, &bath_excess, &total_split})
        report.checks.push_back(t->result);
    return report;
}

}  // namespace qbm
