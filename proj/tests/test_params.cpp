#include <doctest.h>

#include "dimer/errors.hpp"
#include "dimer/params.hpp"
#include "test_util.hpp"

using namespace dimer;
using testutil::rel_err;

TEST_CASE("root selection against the extended-precision oracle at t = 0.3") {
    // Frozen from a 40-digit evaluation of the defining formulas.
    const Parameters p = compute_parameters(0.3);
    CHECK(std::abs(p.eta1 - Complex(2.327088173259535976395, 0.0)) < 1e-14);
    CHECK(std::abs(p.eta2 - Complex(1.365036614186989480191, 0.0)) < 1e-14);
    CHECK(p.regime == Regime::Subcritical);
    CHECK(p.p13_residual() < 1e-12);
    CHECK(p.eta1.real() > p.eta2.real());
    CHECK(p.eta2.real() > 1.0);
}

TEST_CASE("supercritical pair at t = 0.7") {
    const Parameters p = compute_parameters(0.7);
    CHECK(std::abs(p.eta1 - Complex(2.01515569319116026813, -0.5136782456388813997986)) < 1e-14);
    CHECK(std::abs(p.eta2 - std::conj(p.eta1)) < 1e-14);
    CHECK(p.regime == Regime::Supercritical);
    CHECK(p.eta1.imag() < 0.0);
    CHECK(p.theta() > 0.0);
    CHECK(p.theta() < M_PI / 4.0);
    CHECK(p.p13_residual() < 1e-12);
}

TEST_CASE("mu values at the boundary weights") {
    CHECK(std::abs(compute_parameters_limit(0.5).mu) < 1e-15);  // 1 - 4 t^2 = 0
    const Parameters p1 = compute_parameters_limit(1.0);
    CHECK(std::abs(p1.mu - Complex(0.0, std::sqrt(3.0))) < 1e-15);
    // Correlation length of the t = 1 limit parameters: 1/(2 ln|eta1|).
    // (The published table prints 0.601344 for this entry; the value of the
    // defining formula is 0.6013642, see the acceptance suite notes.)
    CHECK(std::abs(1.0 / (2.0 * p1.s()) - 0.6013641737999131) < 1e-12);
    CHECK(std::abs(2.0 * p1.theta() - 0.74946886541748015) < 1e-12);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(compute_parameters(0.0), DomainError);
    CHECK_THROWS_AS(compute_parameters(-0.2), DomainError);
    CHECK_THROWS_AS(compute_parameters(1.2), DomainError);
    CHECK_THROWS_AS(compute_parameters(0.5), CriticalPointError);
    CHECK_THROWS_AS(compute_parameters(0.5 + 5e-7), CriticalPointError);
    CHECK_THROWS_AS(compute_parameters(1.0 - 1e-8), SingularSymbolError);
    CHECK_NOTHROW(compute_parameters(0.5 + 2e-6));
    // Wider guard via eps_crit.
    CHECK_THROWS_AS(compute_parameters(0.49, 0.02), CriticalPointError);
}

TEST_CASE("dense sweep: |eta| > 1 and the constraint residual") {
    for (int i = 1; i <= 99; ++i) {
        if (i == 50) continue;
        const double t = i / 100.0;
        const Parameters p = compute_parameters(t);
        CAPTURE(t);
        CHECK(std::abs(p.eta1) > 1.0);
        CHECK(std::abs(p.eta2) > 1.0);
        CHECK(std::abs(p.xi1) < 1.0);
        CHECK(std::abs(p.xi2) < 1.0);
        CHECK(p.p13_residual() < 1e-10);
    }
}

TEST_CASE("continuity of eta across the sweep") {
    // No jumps: |eta(t+h) - eta(t)| bounded by 10 h * local slope.
    const double h = 0.01;
    auto check_side = [&](double lo, double hi) {
        for (double t = lo; t + 2 * h <= hi + 1e-12; t += h) {
            const Parameters a = compute_parameters(t);
            const Parameters b = compute_parameters(t + h);
            const Parameters c = compute_parameters(t + 2 * h);
            const double slope = std::max(
                {std::abs(c.eta1 - a.eta1) / (2 * h), std::abs(c.eta2 - a.eta2) / (2 * h), 0.05});
            CAPTURE(t);
            CHECK(std::abs(b.eta1 - a.eta1) < 10.0 * h * slope);
            CHECK(std::abs(b.eta2 - a.eta2) < 10.0 * h * slope);
        }
    };
    check_side(0.01, 0.49);
    check_side(0.51, 0.99);
}

TEST_CASE("small-t limits of eta") {
    const Parameters p = compute_parameters(1e-3);
    CHECK(std::abs(p.eta1 - (std::sqrt(2.0) + 1.0)) < 1e-4);
    CHECK(std::abs(p.eta2 - (1.0 + 1e-3)) < 1e-4);
}

TEST_CASE("order parameter closed form") {
    CHECK(rel_err(k2_infinity(1.0), std::sqrt(6.0 - 3.0 * std::sqrt(3.0)) / 6.0) < 1e-14);
    CHECK(std::abs(k2_infinity(1.0) - 0.149429) < 5e-7);
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        CHECK(order_parameter_e(t) > 0.0);
        CHECK(k2_infinity(t) > 0.0);
        CHECK(k2_infinity(t) < 0.25);
        CHECK(k2_infinity(t) == 0.5 * std::sqrt(order_parameter_e(t)));
    }
}
