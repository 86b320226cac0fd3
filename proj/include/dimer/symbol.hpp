#pragma once

#include <functional>
#include <vector>

#include "dimer/params.hpp"

namespace dimer {

// Evaluators for the 2x2 matrix symbol and its pieces.  Everything is written
// in z with cos x = (z + 1/z)/2, sin x = (z - 1/z)/(2i), so the same code
// works on circles of radius != 1 (needed for the shifted-contour Fourier
// coefficients).

// sin^2 x weight combination: t^2 + sin^2 x + sin^4 x, continued off the unit
// circle through the factorized form; always evaluated as sqrt_f(z)*sqrt_f(1/z)
// under the square root.
Complex trig_weight(const Parameters& p, Complex z);

// f(z) = (z^2 - eta1^2)(z^2 - eta2^2) / (4 eta1 eta2)
Complex f_quartic(const Parameters& p, Complex z);

// Branch-fixed square root of f:
//   sqrt_f(z) = (sqrt(eta1 eta2)/2) sqrt(1 - z^2/eta1^2) sqrt(1 - z^2/eta2^2)
// with principal square roots.  Analytic for |z| < min |eta_p|; positive on
// the real segment of the unit disk in the subcritical regime.
Complex sqrt_f(const Parameters& p, Complex z);

// sqrt of trig_weight with the branch inherited from sqrt_f: sqrt_f(z)*sqrt_f(1/z).
Complex sqrt_trig_weight(const Parameters& p, Complex z);

// Scalar prefactor sigma: 1 / ((z-t)(1/z-t) sqrt(t^2 + sin^2 x + sin^4 x)).
Complex sigma_weight(const Parameters& p, Complex z);

// Polynomial entries p, q and the trigonometric-polynomial matrix pi(z).
Complex p_entry(const Parameters& p, Complex z);
Complex q_entry(const Parameters& p, Complex z);
Mat2 eval_pi(const Parameters& p, Complex z);

// g(z) = (z - tau)(z^2 - eta1^2)(z^2 - eta2^2) / (4 tau eta1 eta2);
// det pi(z) = g(z) g(1/z).
Complex g_poly(const Parameters& p, Complex z);

// phi(z) = sigma(z) pi(z); throws SingularSymbolError when |(z-t)(1/z-t)| is
// numerically zero.
Mat2 eval_phi(const Parameters& p, Complex z);

// psi(z) = phi(z)^{-1}
Mat2 eval_psi(const Parameters& p, Complex z);

// Uniform samples of a matrix function on the circle of a given radius.
struct MatrixFunction2 {
    double radius = 1.0;
    std::vector<Mat2> samples;  // values at z_j = radius * e^{2 pi i j / N}
    int size() const { return static_cast<int>(samples.size()); }
};

// N must be a power of two, N >= 64; samples must come out finite.
MatrixFunction2 sample(const std::function<Mat2(Complex)>& f, double radius, int n);

}  // namespace dimer
