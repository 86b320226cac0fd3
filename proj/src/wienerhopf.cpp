#include "dimer/wienerhopf.hpp"

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

Mat2 ElementaryFactors::triangular(int j) const {
    Mat2 m = Mat2::Identity();
    if (j == 4)
        m(1, 0) = p[3];
    else
        m(0, 1) = p[static_cast<std::size_t>(j - 1)];
    return m;
}

Mat2 ElementaryFactors::diagonal(int j, Complex z) const {
    Mat2 m = Mat2::Identity();
    switch (j) {
        case 0: m(1, 1) = z - tau; break;
        case 1: m(0, 0) = z - eta1; break;
        case 2: m(0, 0) = z + eta1; break;
        case 3: m(0, 0) = z - eta2; break;
        case 4: m(1, 1) = z + eta2; break;
        default: throw DomainError("diagonal factor index out of range");
    }
    return m;
}

Mat2 ElementaryFactors::product(Complex z) const {
    Mat2 m = diagonal(0, z);
    for (int j = 1; j <= 4; ++j) m = m * triangular(j) * diagonal(j, z);
    return m * triangular(5);
}

ElementaryFactors closed_form_factors(const Parameters& p) {
    const Complex e1 = p.eta1, e2 = p.eta2, tau = p.tau;
    ElementaryFactors ef;
    ef.tau = tau;
    ef.eta1 = e1;
    ef.eta2 = e2;
    const Complex e1sq = e1 * e1;
    ef.p[0] = I * (tau * (e1sq - 1.0) * (e1sq - 1.0) - 2.0 * e1 * (e1sq + 1.0)) /
              (2.0 * (e1sq - 1.0));
    ef.p[1] = -I * (e1sq + 1.0) / (e1sq - 1.0);
    ef.p[2] = I * tau * (e1 + 1.0) / (2.0 * e1);
    ef.p[3] = -2.0 * I * e1 * e2 / tau;
    ef.p[4] = -I * tau / (2.0 * e1);
    return ef;
}

Factorization::Factorization(const Parameters& p) : p_(p), ef_(closed_form_factors(p)) {
    const Residuals r = validate(512);
    if (r.sqrtf_jump > r.sqrtf_jump_bound)
        throw BranchError("sqrt_f branch discontinuity on the unit circle");
}

Mat2 quartic_factor_matrix(const Parameters& p, Complex z) {
    const Complex e1 = p.eta1, e2 = p.eta2, tau = p.tau;
    const Complex e12 = e1 * e2;
    Mat2 m;
    m(0, 0) = z * z * z + e12 * z * z - (e1 * e1 + e2 * e2 - 1.0 + 2.0 * e12 / tau) * z - e12;
    m(0, 1) = I * (tau * z * z * z / 2.0 + (-1.0 + tau / (2.0 * e12)) * z * z -
                   tau * z / 2.0 - tau * e12 / 2.0);
    m(1, 0) = I * (-2.0 * e12 * z / tau + 2.0 * e12);
    m(1, 1) = z * z - tau * z;
    return m;
}

Mat2 Factorization::D(Complex z) const { return quartic_factor_matrix(p_, z); }

Mat2 Factorization::Psi(Complex z) const { return D(z) / sqrt_f(z); }

Mat2 Factorization::PsiInv(Complex z) const {
    // det Psi(z) = 4 eta1 eta2 (z - tau); Psi^{-1} = sqrt_f adj(D) / det D with
    // det D = (z - tau)(z^2 - eta1^2)(z^2 - eta2^2) = 4 eta1 eta2 (z - tau) f(z).
    const Complex den = 4.0 * p_.eta1 * p_.eta2 * (z - p_.tau) * sqrt_f(z);
    return adjugate(D(z)) / den;
}

Mat2 Factorization::phi_plus(Complex z) const { return A(z) * Psi(z); }

Mat2 Factorization::phi_minus(Complex z) const { return PsiInv(1.0 / z); }

Mat2 Factorization::theta_plus(Complex z) const { return phi_plus(z).transpose() * sigma3(); }

Mat2 Factorization::theta_minus(Complex z) const { return sigma3() * phi_minus(z).transpose(); }

Factorization::Residuals Factorization::validate(int grid) const {
    Residuals r;
    const double h = 2.0 * M_PI / grid;
    Complex prev_sq{}, prev2_sq{};
    double max_deriv = 0.0, max_jump = 0.0;
    for (int j = 0; j <= grid; ++j) {
        const Complex z = std::polar(1.0, h * j);
        if (j < grid) {
            const Mat2 phi = eval_phi(p_, z);
            r.plus_minus = std::max(r.plus_minus, max_abs(phi - phi_plus(z) * phi_minus(z)));
            r.minus_plus = std::max(r.minus_plus, max_abs(phi - theta_minus(z) * theta_plus(z)));
        }
        const Complex sq = sqrt_f(z);
        if (j >= 1) max_jump = std::max(max_jump, std::abs(sq - prev_sq));
        if (j >= 2)
            max_deriv = std::max(max_deriv, std::abs(sq - prev2_sq) / (2.0 * h));
        prev2_sq = prev_sq;
        prev_sq = sq;
    }
    r.sqrtf_jump = max_jump;
    r.sqrtf_jump_bound = 10.0 * h * std::max(max_deriv, 1e-6);
    return r;
}

namespace {

// rho(z): the Laurent-polynomial core of pi(z) after splitting off
// diag(1, z - tau) on the left and diag(1/z - tau, 1) on the right.
LaurentMat2 build_rho(const Parameters& p) {
    const double tau = p.tau;
    LaurentMat2 rho;
    rho.e00 = Laurent(-1, {-tau / 4.0, 0.5, tau / 2.0, 0.5, -tau / 4.0});
    rho.e01 = Laurent(-2, {-I * tau / 2.0, I * (tau * tau + 1.0) / 2.0, Complex{},
                           -I * (tau * tau + 1.0) / 2.0, I * tau / 2.0});
    rho.e10 = Laurent(-1, {-I / 2.0, Complex{}, I / 2.0});
    rho.e11 = Laurent(-3, {-tau / 4.0, 0.5, tau / 2.0, 0.5, -tau / 4.0, Complex{}});
    return rho;
}

}  // namespace

StepwiseResult stepwise_factorize_rho(const Parameters& par) {
    LaurentMat2 rho = build_rho(par);
    StepwiseResult out;

    // Upper steps at eta1, -eta1, eta2: row1 <- (row1 - p_j row2)/(z - root).
    const std::array<Complex, 3> upper_roots{par.eta1, -par.eta1, par.eta2};
    for (int step = 0; step < 3; ++step) {
        const Complex root = upper_roots[static_cast<std::size_t>(step)];
        const Complex den = rho.e10.eval(root);
        if (std::abs(den) < 1e-12)
            throw DivisionByZeroError("rho_21 vanishes at the deflation root");
        const Complex pj = rho.e00.eval(root) / den;
        out.p[static_cast<std::size_t>(step)] = pj;
        rho.e00 = (rho.e00 - rho.e10 * pj).deflate(root);
        rho.e01 = (rho.e01 - rho.e11 * pj).deflate(root);
    }

    // Lower step at -eta2: row2 <- (row2 - p4 row1)/(z + eta2).
    {
        const Complex root = -par.eta2;
        const Complex den = rho.e00.eval(root);
        if (std::abs(den) < 1e-12)
            throw DivisionByZeroError("rho_11 vanishes at the lower deflation root");
        const Complex p4 = rho.e10.eval(root) / den;
        out.p[3] = p4;
        rho.e10 = (rho.e10 - rho.e00 * p4).deflate(root);
        rho.e11 = (rho.e11 - rho.e01 * p4).deflate(root);
    }

    out.rho4 = rho;
    out.rho4_at_infinity = rho.coeff(0);

    const ElementaryFactors ef = closed_form_factors(par);
    Mat2 v0 = ef.diagonal(0, Complex{});
    for (int j = 1; j <= 4; ++j) {
        Mat2 pj = Mat2::Identity();
        if (j == 4)
            pj(1, 0) = out.p[3];
        else
            pj(0, 1) = out.p[static_cast<std::size_t>(j - 1)];
        v0 = v0 * pj * ef.diagonal(j, Complex{});
    }
    out.v_plus_at_0 = v0;

    Mat2 right = Mat2::Identity();
    right(0, 0) = -par.tau;
    out.v_minus_at_infinity = (1.0 / (par.tau * par.tau)) * out.rho4_at_infinity * right;
    return out;
}

Mat2 liouville_constant(const Parameters& p) {
    const StepwiseResult sw = stepwise_factorize_rho(p);
    const Complex g0 = -p.eta1 * p.eta2 / 4.0;
    return sw.v_minus_at_infinity * sw.v_plus_at_0 / g0;
}

}  // namespace dimer
