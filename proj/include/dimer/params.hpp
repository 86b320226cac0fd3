#pragma once

#include "dimer/mat2.hpp"

namespace dimer {

enum class Regime { Subcritical, Supercritical };

// All scalar parameters derived from the diagonal weight t.
//
// xi_{1,2} = 2 +- mu - 2 sqrt(1 - t^2 +- mu), mu = sqrt(1 - 4 t^2), are the
// roots with |xi| < 1 of the quartic factorization of t^2 + sin^2 x + sin^4 x;
// eta_j = 1/sqrt(xi_j) with |eta_j| > 1.  The pair satisfies
// (eta1^2 - 1)(eta2^2 - 1) = 4 eta1 eta2 / tau,  tau = 1/t.
//
// Labeling: subcritical (t < 1/2) both eta real, eta1 > eta2 > 1;
// supercritical eta2 = conj(eta1), Im(eta1) < 0, so eta1 = e^{s - i theta}
// with s > 0, theta in (0, pi/4).
struct Parameters {
    double t = 0.0;
    double tau = 0.0;
    Complex mu;
    Complex xi1, xi2;
    Complex eta1, eta2;
    Regime regime = Regime::Subcritical;

    // Decay rate of Fourier coefficients: log of the smallest |eta|.
    double s() const;
    // |arg eta1| (zero in the subcritical regime).
    double theta() const;
    // | (eta1^2-1)(eta2^2-1) - 4 eta1 eta2 / tau |
    double p13_residual() const;
};

// Throws DomainError for t outside (0,1), CriticalPointError for
// |t - 1/2| <= eps_crit, SingularSymbolError for t >= 1 - eps_crit.
Parameters compute_parameters(double t, double eps_crit = 1e-6);

// Same root selection without the critical/singular guards.  Used to evaluate
// the limiting asymptotic constants at t = 1, where the symbol itself is
// singular but the constants stay algebraic in (eta1, eta2, tau).
Parameters compute_parameters_limit(double t);

// E(psi) = t / (2t(2 + t^2) + (1 + 2t^2) sqrt(2 + t^2)).
double order_parameter_e(double t);

// K2(inf) = (1/2) sqrt(E(psi)).
double k2_infinity(double t);

}  // namespace dimer
