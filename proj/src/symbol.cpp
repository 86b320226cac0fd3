#include "dimer/symbol.hpp"

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

inline Complex cos_z(Complex z) { return 0.5 * (z + 1.0 / z); }
inline Complex sin_z(Complex z) { return (z - 1.0 / z) / (2.0 * I); }

inline bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Complex trig_weight(const Parameters& p, Complex z) {
    const Complex s = sin_z(z);
    return p.t * p.t + s * s + s * s * s * s;
}

Complex f_quartic(const Parameters& p, Complex z) {
    return (z * z - p.eta1 * p.eta1) * (z * z - p.eta2 * p.eta2) / (4.0 * p.eta1 * p.eta2);
}

Complex sqrt_f(const Parameters& p, Complex z) {
    // |z/eta_p| <= 1 keeps both radicands in the right half-plane, so the
    // principal branches glue into a single analytic function there.
    const Complex r1 = 1.0 - z * z / (p.eta1 * p.eta1);
    const Complex r2 = 1.0 - z * z / (p.eta2 * p.eta2);
    return 0.5 * std::sqrt(p.eta1 * p.eta2) * std::sqrt(r1) * std::sqrt(r2);
}

Complex sqrt_trig_weight(const Parameters& p, Complex z) {
    return sqrt_f(p, z) * sqrt_f(p, 1.0 / z);
}

Complex sigma_weight(const Parameters& p, Complex z) {
    const Complex den = (z - p.t) * (1.0 / z - p.t);
    if (std::abs(den) < 1e-14) throw SingularSymbolError("1 - 2t cos x + t^2 vanishes");
    return 1.0 / (den * sqrt_trig_weight(p, z));
}

Complex p_entry(const Parameters& p, Complex z) {
    const Complex c = cos_z(z), s = sin_z(z);
    return (p.t * c + s * s) * (p.t - z);
}

Complex q_entry(const Parameters& p, Complex z) {
    const Complex c = cos_z(z), s = sin_z(z);
    return s * (1.0 - 2.0 * p.t * c + p.t * p.t);
}

Mat2 eval_pi(const Parameters& p, Complex z) {
    const Complex zi = 1.0 / z;
    Mat2 m;
    m << p_entry(p, z), q_entry(p, z), q_entry(p, zi), p_entry(p, zi);
    return m;
}

Complex g_poly(const Parameters& p, Complex z) {
    return (z - p.tau) * (z * z - p.eta1 * p.eta1) * (z * z - p.eta2 * p.eta2) /
           (4.0 * p.tau * p.eta1 * p.eta2);
}

Mat2 eval_phi(const Parameters& p, Complex z) {
    return sigma_weight(p, z) * eval_pi(p, z);
}

Mat2 eval_psi(const Parameters& p, Complex z) {
    const Mat2 phi = eval_phi(p, z);
    const Complex det = phi(0, 0) * phi(1, 1) - phi(0, 1) * phi(1, 0);
    return adjugate(phi) / det;
}

MatrixFunction2 sample(const std::function<Mat2(Complex)>& f, double radius, int n) {
    if (!power_of_two(n) || n < 64)
        throw DomainError("sample grid must be a power of two, at least 64");
    MatrixFunction2 out;
    out.radius = radius;
    out.samples.resize(n);
    const double step = 2.0 * M_PI / n;
    for (int j = 0; j < n; ++j) {
        const Complex z = std::polar(radius, step * j);
        const Mat2 v = f(z);
        if (!v.allFinite()) throw DomainError("non-finite sample in MatrixFunction2");
        out.samples[j] = v;
    }
    return out;
}

}  // namespace dimer
