#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qbm/drude.hpp"
#include "qbm/errors.hpp"
#include "qbm/thermo.hpp"

using namespace qbm;

TEST_CASE("parameter maps round trip") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> logu(std::log(0.1), std::log(20.0));
    for (auto variant : {DrudeVariant::Drude, DrudeVariant::ExtendedDrude2})
        for (int i = 0; i < 50; ++i) {
            const double w0 = std::exp(logu(rng)), wd = std::exp(logu(rng)), g0 = std::exp(logu(rng));
            const auto p = drude_params_from_physical(w0, wd, g0, variant);
            const auto back = drude_params_to_physical(p, variant);
            CHECK(back.omega0 == doctest::Approx(w0).epsilon(1e-12));
            CHECK(back.omega_d == doctest::Approx(wd).epsilon(1e-12));
            CHECK(back.gamma0 == doctest::Approx(g0).epsilon(1e-12));
        }
}

TEST_CASE("decoupled parameters") {
    const auto p = drude_params_from_physical(1.3, 4.0, 0.0, DrudeVariant::Drude);
    CHECK(p.Omega == doctest::Approx(4.0));
    CHECK(p.gamma == 0.0);
    CHECK(p.w0 == doctest::Approx(1.3));
    CHECK(std::abs(drude_energies_closed(p).K) < 1e-15);
    CHECK(k_extended_drude2_closed(1.0, 3.0, 0.0) == 0.0);
}

TEST_CASE("closed forms do not depend on which root is called Omega") {
    // Roots {5, z₁, z₂} with z₁ + z₂ = 3, z₁z₂ = 1.
    const double z1 = 0.5 * (3.0 + std::sqrt(5.0)), z2 = 0.5 * (3.0 - std::sqrt(5.0));
    const auto a = drude_energies_closed(make_drude_params(1.0, 5.0, 3.0));
    const auto b = drude_energies_closed(make_drude_params(std::sqrt(5.0 * z2), z1, 5.0 + z2));
    const auto c = drude_energies_closed(make_drude_params(std::sqrt(5.0 * z1), z2, 5.0 + z1));
    CHECK(b.E_s == doctest::Approx(a.E_s).epsilon(1e-11));
    CHECK(b.F == doctest::Approx(a.F).epsilon(1e-11));
    CHECK(c.E_s == doctest::Approx(a.E_s).epsilon(1e-11));
    CHECK(c.F == doctest::Approx(a.F).epsilon(1e-11));
}

TEST_CASE("continuity across critical damping") {
    for (double Omega : {0.7, 3.0, 40.0}) {
        const double g = 2.0;
        const auto below = drude_energies_closed(make_drude_params(1.0 - 1e-6, Omega, g));
        const auto at = drude_energies_closed(make_drude_params(1.0, Omega, g));
        const auto above = drude_energies_closed(make_drude_params(1.0 + 1e-6, Omega, g));
        CHECK(std::abs(below.K - above.K) < 1e-5 * std::abs(at.K));
        const double k2b = k_extended_drude2_closed(1.0 - 1e-6, Omega, g);
        const double k2a = k_extended_drude2_closed(1.0 + 1e-6, Omega, g);
        CHECK(std::abs(k2b - k2a) < 1e-5 * std::abs(k_extended_drude2_closed(1.0, Omega, g)));
    }
}

TEST_CASE("closed forms against direct quadrature") {
    const SpectralModel m = Drude{1.0, 1.0};
    const auto closed = drude_energies_closed(drude_params_from_physical(1.0, 1.0, 1.0, DrudeVariant::Drude));
    const auto Es = system_energy_0_cont(m, 1.0);
    const auto F = free_energy_0_cont(m, 1.0);
    REQUIRE_FALSE(Es.divergent);
    REQUIRE_FALSE(F.divergent);
    CHECK(std::abs(Es.value - closed.E_s) < 1e-7);
    CHECK(std::abs(F.value - closed.F) < 1e-7);
    CHECK(closed.K == doctest::Approx(0.0723805906912).epsilon(1e-10));

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> logu(std::log(0.2), std::log(10.0));
    for (int i = 0; i < 10; ++i) {
        const double w0 = std::exp(logu(rng)), wd = std::exp(logu(rng)), g0 = std::exp(logu(rng));
        const double kc = k_drude_closed(w0, wd, g0);
        CHECK(std::abs(k_drude_lambda(w0, wd, g0) - kc) < 1e-6);
        CHECK(std::abs(k_cont(Drude{g0, wd}, w0).value - kc) < 1e-6);
    }
}

TEST_CASE("overdamped Drude energies") {
    // Roots {10, z₁, z₂} with z₁ + z₂ = 5, z₁z₂ = 0.25.
    const auto phys = drude_params_to_physical(make_drude_params(0.5, 10.0, 5.0), DrudeVariant::Drude);
    const auto p = drude_params_from_physical(phys.omega0, phys.omega_d, phys.gamma0, DrudeVariant::Drude);
    CHECK(p.regime == DampingRegime::Overdamped);
    CHECK(p.Omega == doctest::Approx(10.0).epsilon(1e-12));
    const auto e = drude_energies_closed(p);
    const SpectralModel m = Drude{phys.gamma0, phys.omega_d};
    CHECK(std::abs(system_energy_0_cont(m, phys.omega0).value - e.E_s) < 1e-7);
    CHECK(std::abs(free_energy_0_cont(m, phys.omega0).value - e.F) < 1e-7);
}

TEST_CASE("hbar scaling and domain") {
    CHECK(k_drude_closed(1.0, 2.0, 0.5, 3.0) == doctest::Approx(3.0 * k_drude_closed(1.0, 2.0, 0.5)));
    CHECK_THROWS_AS(make_drude_params(-1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(drude_params_from_physical(1.0, 0.0, 1.0, DrudeVariant::Drude), DomainError);
}
