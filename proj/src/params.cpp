#include "dimer/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "dimer/errors.hpp"

namespace dimer {

double Parameters::s() const {
    return std::log(std::min(std::abs(eta1), std::abs(eta2)));
}

double Parameters::theta() const {
    return regime == Regime::Supercritical ? std::abs(std::arg(eta1)) : 0.0;
}

double Parameters::p13_residual() const {
    const Complex lhs = (eta1 * eta1 - 1.0) * (eta2 * eta2 - 1.0);
    return std::abs(lhs - 4.0 * eta1 * eta2 / tau);
}

namespace {

// The branch pairing of the two +- signs is not fixed a priori; evaluate all
// four combinations, keep those inside the unit disk, and select the pair that
// satisfies the constraint equation best.
Parameters select_roots(double t) {
    Parameters p;
    p.t = t;
    p.tau = 1.0 / t;
    p.mu = std::sqrt(Complex(1.0 - 4.0 * t * t));

    std::vector<Complex> candidates;
    for (double s1 : {1.0, -1.0}) {
        for (double s2 : {1.0, -1.0}) {
            const Complex xi =
                2.0 + s1 * p.mu - 2.0 * std::sqrt(Complex(1.0 - t * t) + s2 * p.mu);
            if (std::abs(xi) > 1e-14 && std::abs(xi) < 1.0 - 1e-14) candidates.push_back(xi);
        }
    }

    double best = -1.0;
    Complex bx1, bx2;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
            const Complex e1 = 1.0 / std::sqrt(candidates[a]);
            const Complex e2 = 1.0 / std::sqrt(candidates[b]);
            const double res =
                std::abs((e1 * e1 - 1.0) * (e2 * e2 - 1.0) - 4.0 * e1 * e2 / p.tau);
            if (best < 0.0 || res < best) {
                best = res;
                bx1 = candidates[a];
                bx2 = candidates[b];
            }
        }
    }
    if (best < 0.0) throw DomainError("no admissible root pair with |xi| < 1");

    p.xi1 = bx1;
    p.xi2 = bx2;
    p.eta1 = 1.0 / std::sqrt(p.xi1);
    p.eta2 = 1.0 / std::sqrt(p.xi2);
    p.regime = t < 0.5 ? Regime::Subcritical : Regime::Supercritical;

    if (p.regime == Regime::Subcritical) {
        if (p.eta1.real() < p.eta2.real()) {
            std::swap(p.eta1, p.eta2);
            std::swap(p.xi1, p.xi2);
        }
    } else {
        // eta1 = e^{s - i theta}: fix Im(eta1) < 0.
        if (p.eta1.imag() > 0.0) {
            std::swap(p.eta1, p.eta2);
            std::swap(p.xi1, p.xi2);
        }
    }
    return p;
}

}  // namespace

Parameters compute_parameters(double t, double eps_crit) {
    if (!(t > 0.0) || !(t < 1.0)) throw DomainError("weight t must lie in (0,1)");
    if (std::abs(t - 0.5) <= eps_crit)
        throw CriticalPointError("t too close to the critical point 1/2");
    if (t >= 1.0 - eps_crit) throw SingularSymbolError("t too close to 1, symbol singular");
    return select_roots(t);
}

Parameters compute_parameters_limit(double t) {
    if (!(t > 0.0) || t > 1.0) throw DomainError("weight t must lie in (0,1]");
    return select_roots(t);
}

double order_parameter_e(double t) {
    return t / (2.0 * t * (2.0 + t * t) + (1.0 + 2.0 * t * t) * std::sqrt(2.0 + t * t));
}

double k2_infinity(double t) { return 0.5 * std::sqrt(order_parameter_e(t)); }

}  // namespace dimer
