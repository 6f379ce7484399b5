#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qbm/bath_suite.hpp"
#include "qbm/discrete_bath.hpp"
#include "qbm/errors.hpp"

using namespace qbm;

namespace {

DiscreteBath n1_bath() { return DiscreteBath{1.0, 1.0, {{1.0, 2.0, 1.0}}}; }

// Quadratic in ω²: ω⁴ − (ω₀² + ω₁² + g)ω² + ω₀²ω₁² = 0 with g = c²/(M m ω₁²).
struct QuadraticOracle {
    double lo, hi, F, E_s, u_lo, u_hi;
    QuadraticOracle(double M, double w0, double m, double w1, double c) {
        const double g = c * c / (M * m * w1 * w1);
        const double b = w0 * w0 + w1 * w1 + g;
        const double disc = std::sqrt(b * b - 4.0 * w0 * w0 * w1 * w1);
        const double x_hi = 0.5 * (b + disc);
        const double x_lo = w0 * w0 * w1 * w1 / x_hi;
        lo = std::sqrt(x_lo);
        hi = std::sqrt(x_hi);
        F = 0.5 * (lo + hi - w1);
        u_lo = (x_lo - w1 * w1) / (x_lo - x_hi);
        u_hi = (x_hi - w1 * w1) / (x_hi - x_lo);
        E_s = 0.25 * (u_lo * (w0 * w0 + x_lo) / lo + u_hi * (w0 * w0 + x_hi) / hi);
    }
};

}  // namespace

TEST_CASE("single bath oscillator against the quadratic oracle") {
    const auto bath = n1_bath();
    const QuadraticOracle q(1.0, 1.0, 1.0, 2.0, 1.0);
    CHECK(gamma_zero(bath) == doctest::Approx(0.25));

    const auto modes = normal_modes(bath);
    REQUIRE(modes.omega_bar.size() == 2);
    CHECK(modes.omega_bar[0] == doctest::Approx(q.lo).epsilon(1e-13));
    CHECK(modes.omega_bar[1] == doctest::Approx(q.hi).epsilon(1e-13));
    CHECK(std::abs(modes.omega_bar[0] - 0.9616733) < 1e-6);
    CHECK(std::abs(modes.omega_bar[1] - 2.0797077) < 1e-6);

    const auto w = residue_weights(bath, modes);
    CHECK(w[0] == doctest::Approx(q.u_lo).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(q.u_hi).epsilon(1e-12));
    CHECK(std::abs(w[0] - 0.9043678) < 1e-6);
    CHECK(std::abs(w[1] - 0.0956320) < 1e-6);

    const double F = free_energy_0(bath, modes);
    const double Es = system_energy_0(bath, modes);
    CHECK(F == doctest::Approx(q.F).epsilon(1e-13));
    CHECK(Es == doctest::Approx(q.E_s).epsilon(1e-13));
    CHECK(std::abs(F - 0.5206905) < 1e-6);
    CHECK(std::abs(Es - 0.5137469) < 1e-6);

    const auto k = k_second_law(bath, modes);
    CHECK(std::abs(k.K - 0.0069436) < 1e-6);
    CHECK(std::abs(k.residue_sum - k.K) < 1e-13);
    REQUIRE(k.per_bath_pole_terms.size() == 1);
    CHECK(k.per_bath_pole_terms[0] == doctest::Approx(-1.0).epsilon(1e-13));
    for (double t : k.per_mode_terms) CHECK(t >= 0.0);
    CHECK(k.skipped.empty());

    const auto oracle = exact_ground_state_oracle(bath);
    CHECK(oracle.E_s == doctest::Approx(Es).epsilon(1e-12));
    CHECK(oracle.omega_bar[0] == doctest::Approx(q.lo).epsilon(1e-12));
    CHECK(oracle.weights[0] == doctest::Approx(q.u_lo).epsilon(1e-12));
}

TEST_CASE("hbar scales every energy") {
    const auto bath = n1_bath();
    const auto modes = normal_modes(bath);
    CHECK(free_energy_0(bath, modes, 2.5) == doctest::Approx(2.5 * free_energy_0(bath, modes)));
    CHECK(k_second_law(bath, modes, 2.5).K == doctest::Approx(2.5 * k_second_law(bath, modes).K));
}

TEST_CASE("empty bath") {
    const DiscreteBath bath{2.0, 1.5, {}};
    const auto modes = normal_modes(bath);
    REQUIRE(modes.omega_bar.size() == 1);
    CHECK(modes.omega_bar[0] == doctest::Approx(1.5));
    CHECK(free_energy_0(bath, modes) == doctest::Approx(0.75));
    CHECK(system_energy_0(bath, modes) == doctest::Approx(0.75));
    CHECK(std::abs(k_second_law(bath, modes).K) < 1e-15);
    CHECK(exact_ground_state_oracle(bath).q_variance == doctest::Approx(1.0 / (2.0 * 2.0 * 1.5)));
}

TEST_CASE("weak coupling limit") {
    const DiscreteBath bath{1.0, 1.0, {{1.0, 0.5, 1e-5}, {2.0, 3.0, 1e-5}}};
    const auto modes = normal_modes(bath);
    CHECK(free_energy_0(bath, modes) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(std::abs(k_second_law(bath, modes).K) < 1e-9);
}

TEST_CASE("coupling scaling and gamma_zero re-summation") {
    std::mt19937_64 rng(7);
    auto bath = random_bath(3, rng);
    double sum = 0.0;
    for (const auto& o : bath.oscillators) sum += o.coupling * o.coupling / (o.mass * o.omega * o.omega);
    CHECK(gamma_zero(bath) == doctest::Approx(sum / bath.M).epsilon(1e-14));
    const double g = gamma_zero(bath);
    for (auto& o : bath.oscillators) o.coupling *= 2.0;
    CHECK(gamma_zero(bath) == doctest::Approx(4.0 * g).epsilon(1e-14));
}

TEST_CASE("random N = 8 bath: interlacing, rules and oracle") {
    std::mt19937_64 rng(42);
    const auto bath = random_bath(8, rng);
    const auto modes = normal_modes(bath);
    const auto& wb = modes.omega_bar;
    REQUIRE(wb.size() == 9);
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(wb[j] < bath.oscillators[j].omega);
        CHECK(bath.oscillators[j].omega < wb[j + 1]);
    }
    // Sum and product rules of the characteristic polynomial in ω².
    double sum_bar = 0.0, sum_bare = bath.omega0 * bath.omega0 + gamma_zero(bath);
    double log_prod_bar = 0.0, log_prod_bare = 2.0 * std::log(bath.omega0);
    for (double x : wb) {
        sum_bar += x * x;
        log_prod_bar += 2.0 * std::log(x);
    }
    for (const auto& o : bath.oscillators) {
        sum_bare += o.omega * o.omega;
        log_prod_bare += 2.0 * std::log(o.omega);
    }
    CHECK(sum_bar == doctest::Approx(sum_bare).epsilon(1e-12));
    CHECK(log_prod_bar == doctest::Approx(log_prod_bare).epsilon(1e-12));

    const auto oracle = exact_ground_state_oracle(bath);
    for (std::size_t k = 0; k < wb.size(); ++k) CHECK(oracle.omega_bar[k] == doctest::Approx(wb[k]).epsilon(1e-10));
    CHECK(oracle.E_s == doctest::Approx(system_energy_0(bath, modes)).epsilon(1e-10));
    const auto w = residue_weights(bath, modes);
    CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(DiscreteBath{1.0, 1.0, {{1.0, 2.0, 1.0}, {1.0, 1.0, 1.0}}}), DegenerateBath);
    CHECK_THROWS_AS(validate(DiscreteBath{1.0, 1.0, {{1.0, 2.0, 1.0}, {1.0, 2.0, 1.0}}}), DegenerateBath);
    CHECK_THROWS_AS(validate(DiscreteBath{1.0, 1.0, {{1.0, 2.0, 0.0}}}), DomainError);
    CHECK_THROWS_AS(validate(DiscreteBath{0.0, 1.0, {}}), DomainError);
    CHECK_THROWS_AS(validate(DiscreteBath{1.0, 1.0, {{-1.0, 2.0, 1.0}}}), DomainError);
}

TEST_CASE("small seeded property suite") {
    SuiteOptions opts;
    opts.count = 20;
    opts.seed = 3;
    const auto report = run_bath_suite(opts);
    CHECK(report.baths == 20);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(report.all_passed());
}

TEST_CASE("random baths are reproducible") {
    std::mt19937_64 a(11), b(11);
    const auto x = random_bath(5, a);
    const auto y = random_bath(5, b);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(x.oscillators[j].omega == y.oscillators[j].omega);
        CHECK(x.oscillators[j].coupling == y.oscillators[j].coupling);
    }
    const double r = gamma_zero(x) / (x.omega0 * x.omega0);
    CHECK(r >= 0.05);
    CHECK(r <= 5.0);
}
