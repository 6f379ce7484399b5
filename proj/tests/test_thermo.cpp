#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qbm/drude.hpp"
#include "qbm/errors.hpp"
#include "qbm/thermo.hpp"

using namespace qbm;

TEST_CASE("Ohmic K integrand vanishes pointwise") {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double w = 1e-3 * std::pow(1e7, i / 99.0);
        worst = std::max(worst, std::abs(k_integrand(Ohmic{0.8}, 1.2, w)));
    }
    CHECK(worst <= 1e-12);
    const auto K = k_cont(Ohmic{0.8}, 1.2);
    CHECK_FALSE(K.divergent);
    CHECK(K.value == 0.0);
}

TEST_CASE("Ohmic energies diverge logarithmically") {
    for (const auto& q : {system_energy_0_cont(Ohmic{1.0}, 1.0), free_energy_0_cont(Ohmic{1.0}, 1.0)}) {
        CHECK(q.divergent);
        CHECK(q.divergence.tag == DivergenceTag::LogDivergent);
        CHECK(q.divergence.sign == TailSign::Positive);
    }
}

TEST_CASE("K equals F minus E_s") {
    const SpectralModel models[] = {Drude{1.0, 3.0}, Exponential{1.0, 2.0}, ExtendedDrude{0.7, 2.0, 1}};
    for (const auto& m : models) {
        const auto Es = system_energy_0_cont(m, 1.0);
        const auto F = free_energy_0_cont(m, 1.0);
        const auto K = k_cont(m, 1.0);
        REQUIRE_FALSE(Es.divergent);
        REQUIRE_FALSE(F.divergent);
        CHECK(std::abs(F.value - Es.value - K.value) < 1e-7);
    }
    // J_{d,2} is Ohmic at large ω: finite K, divergent parts.
    CHECK(system_energy_0_cont(ExtendedDrude{0.5, 5.0, 2}, 1.0).divergence.tag == DivergenceTag::LogDivergent);
    CHECK_FALSE(k_cont(ExtendedDrude{0.5, 5.0, 2}, 1.0).divergent);
}

TEST_CASE("decoupled limit") {
    const auto Es = system_energy_0_cont(Exponential{1e-4, 2.0}, 1.5);
    const auto F = free_energy_0_cont(Exponential{1e-4, 2.0}, 1.5);
    CHECK(Es.value == doctest::Approx(0.75).epsilon(1e-4));
    CHECK(F.value == doctest::Approx(0.75).epsilon(1e-4));
    CHECK(F.value > Es.value);
    CHECK(k_exponential(1.0, 1.0, 0.0) == 0.0);
    CHECK(k_drude_lambda(1.0, 1.0, 0.0) == 0.0);
}

TEST_CASE("extended Drude n = 2 closed form against quadrature") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> logu(std::log(0.2), std::log(10.0));
    for (int i = 0; i < 20; ++i) {
        const double w0 = std::exp(logu(rng)), Omega = std::exp(logu(rng)), g = std::exp(logu(rng));
        const auto phys = drude_params_to_physical(make_drude_params(w0, Omega, g), DrudeVariant::ExtendedDrude2);
        const double closed = k_extended_drude2_closed(w0, Omega, g);
        const auto q = k_cont(ExtendedDrude{phys.gamma0, phys.omega_d, 2}, phys.omega0);
        INFO("w0=" << w0 << " Omega=" << Omega << " gamma=" << g);
        CHECK(std::abs(q.value - closed) < 1e-6);
    }
    CHECK(k_extended_drude2_closed(1.0, 5.0, 1.0) < 0.0);
}

TEST_CASE("special integrands against the generic K integral") {
    // Converged 30-digit values of the same integrals.
    CHECK(k_exponential(1.0, 1.0, 1.0) / 0.5 == doctest::Approx(0.118394935671).epsilon(1e-9));
    CHECK(k_exponential(1.0, 80.0, 2.0) / 0.5 == doctest::Approx(0.564725858036636548).epsilon(1e-8));
    CHECK(k_exponential(1.0, 5.0, 5.0) / 0.5 == doctest::Approx(0.817611450778740298).epsilon(1e-8));
    CHECK(k_extended_drude1(10.0, 10.0, 1.0) * std::numbers::pi / 5.0 ==
          doctest::Approx(0.0284581235549040831).epsilon(1e-7));
    CHECK(k_drude_lambda(0.5, 10.0, 1.0) * std::numbers::pi / 0.25 ==
          doctest::Approx(1.68704486602429288).epsilon(1e-9));

    for (double we : {0.5, 5.0, 50.0}) {
        const double special = k_exponential(1.0, we, 2.0);
        CHECK(std::abs(special - k_cont(Exponential{2.0, we}, 1.0).value) < 1e-7);
    }
    for (double wd : {0.5, 5.0}) {
        const double special = k_extended_drude1(1.0, wd, 1.0);
        CHECK(std::abs(special - k_cont(ExtendedDrude{1.0, wd, 1}, 1.0).value) < 1e-7);
    }
}

TEST_CASE("K_e integrand at large lambda") {
    for (double l : {100.0, 500.0, 700.0, 1e4}) CHECK(std::isfinite(k_exponential_integrand(1.0, 1.0, 1.0, l)));
}

TEST_CASE("divergent and invalid models") {
    for (const SpectralModel& m : {SpectralModel{ExtendedOhmic{1.0, 2}}, SpectralModel{ExtendedDrude{1.0, 1.0, 4}}}) {
        const auto K = k_cont(m, 1.0);
        CHECK(K.divergent);
        CHECK(K.divergence.tag == DivergenceTag::LogDivergent);
        CHECK(K.divergence.sign == TailSign::Negative);
    }
    CHECK_THROWS_AS(k_cont(ExtendedOhmic{1.0, 1}, 1.0), InvalidModel);
    CHECK_THROWS_AS(k_cont(ExtendedDrude{1.0, 1.0, 3}, 1.0), InvalidModel);
    CHECK_THROWS_AS(k_cont(ExtendedDrude{1.0, 1.0, 6}, 1.0), Unsupported);
    CHECK_THROWS_AS(k_cont(Drude{1.0, 1.0}, -1.0), DomainError);
}

TEST_CASE("reports pick the right method") {
    const auto d = thermo_report(Drude{1.0, 1.0}, 1.0);
    CHECK(d.method == Method::ClosedForm);
    CHECK(d.E_g == 0.5);
    CHECK(d.K.value == doctest::Approx(0.0723805906912).epsilon(1e-10));
    CHECK(d.K_pi_over_gamma_Eg == doctest::Approx(0.0723805906912 * std::numbers::pi / 0.5).epsilon(1e-10));

    const auto e = thermo_report(Exponential{1.0, 1.0}, 1.0);
    CHECK(e.method == Method::SpecialIntegrand);
    CHECK(e.K_over_Eg == doctest::Approx(0.118394935671).epsilon(1e-9));

    const auto o = thermo_report(Ohmic{1.0}, 1.0);
    CHECK(o.K.value == 0.0);
    CHECK(o.E_s0.divergent);
    CHECK(o.F0.divergent);

    const auto p2 = thermo_report(ExtendedOhmic{1.0, 2}, 1.0);
    CHECK(p2.status.tag == ModelStatus::Tag::ValidButKDivergent);
    CHECK(p2.K.divergent);
    CHECK(std::isnan(p2.K_over_Eg));

    CHECK_THROWS_AS(thermo_report(ExtendedOhmic{1.0, 1}, 1.0), InvalidModel);
}
