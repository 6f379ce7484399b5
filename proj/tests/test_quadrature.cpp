#include <boost/math/special_functions/expint.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "qbm/errors.hpp"
#include "qbm/quadrature.hpp"

using namespace qbm;

TEST_CASE("finite and semi-infinite reference integrals") {
    const double pi = std::numbers::pi;
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, pi).value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }).value ==
          doctest::Approx(pi / 2).epsilon(1e-11));
    CHECK(integrate_from([](double x) { return 1.0 / (x * x); }, 2.0).value == doctest::Approx(0.5).epsilon(1e-11));
    // Integrable endpoint singularity.
    CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value ==
          doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("principal value through a simple pole") {
    const double ref = -std::exp(-1.0) * boost::math::expint(1.0);
    const auto r = principal_value_integral([](double x) { return std::exp(-x) / (x - 1.0); }, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(ref).epsilon(1e-11));

    // P∫₀^∞ dx/(x² − a²) = 0.
    for (double a : {0.3, 1.0, 7.0}) {
        const auto z = principal_value_integral([a](double x) { return 1.0 / (x * x - a * a); }, a);
        CHECK(std::abs(z.value) < 1e-9);
    }
}

TEST_CASE("double pole is rejected") {
    CHECK_THROWS_AS(principal_value_integral([](double x) { return 1.0 / ((x - 1.0) * (x - 1.0)); }, 1.0),
                    SingularityMisdeclared);
}

TEST_CASE("tail classification of power laws") {
    auto power = [](double p) { return [p](double x) { return std::pow(x, -p); }; };
    CHECK(classify_tail(power(0.5), 1e2, 1e6).tag == DivergenceTag::PowerDivergent);
    const auto log_class = classify_tail(power(1.0), 1e2, 1e6);
    CHECK(log_class.tag == DivergenceTag::LogDivergent);
    CHECK(log_class.sign == TailSign::Positive);
    CHECK(classify_tail(power(1.5), 1e2, 1e6).tag == DivergenceTag::Convergent);
    CHECK(classify_tail(power(2.0), 1e2, 1e6).tag == DivergenceTag::Convergent);
    const auto neg = classify_tail([](double x) { return -3.0 / x; }, 1e2, 1e6);
    CHECK(neg.tag == DivergenceTag::LogDivergent);
    CHECK(neg.sign == TailSign::Negative);
    CHECK(classify_tail([](double) { return 0.0; }, 1e2, 1e6).tag == DivergenceTag::Convergent);
}

TEST_CASE("extra split points do not change the value") {
    auto f = [](double x) { return std::exp(-x) * std::cos(x); };
    const double a = integrate_semi_infinite(f).value;
    const double b = integrate_semi_infinite(f, {}, {0.5, 1.0, 2.0, 4.0, 8.0}).value;
    CHECK(a == doctest::Approx(0.5).epsilon(1e-11));
    CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("budget exhaustion") {
    auto f = [](double x) { return std::sin(1e4 * x) * std::exp(-x); };
    QuadratureOptions tight;
    tight.max_evals = 100;
    CHECK_THROWS_AS(integrate(f, 0.0, 10.0, tight), NonConvergence);
    tight.throw_on_failure = false;
    const auto r = integrate(f, 0.0, 10.0, tight);
    CHECK_FALSE(r.converged);
    CHECK(r.evaluations <= 150);
    try {
        tight.throw_on_failure = true;
        integrate(f, 0.0, 10.0, tight);
    } catch (const NonConvergence& e) {
        CHECK(e.evaluations() > 0);
        CHECK(e.abs_error_estimate() > 1e-9);
    }
}

TEST_CASE("non-finite integrand") {
    CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
                    DomainError);
}
