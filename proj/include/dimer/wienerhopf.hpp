#pragma once

#include <array>

#include "dimer/laurent.hpp"
#include "dimer/symbol.hpp"

namespace dimer {

// Elementary factors of the explicit factorization:
//   Psi(z) = D0 P1 D1 P2 D2 P3 D3 P4 D4 P5 / sqrt(f(z)),
// P_j upper unitriangular for j = 1,2,3,5, P4 lower unitriangular,
// D0 = diag(1, z - tau), D1 = diag(z - eta1, 1), D2 = diag(z + eta1, 1),
// D3 = diag(z - eta2, 1), D4 = diag(1, z + eta2).
struct ElementaryFactors {
    std::array<Complex, 5> p{};  // p1..p5
    Complex tau, eta1, eta2;

    Mat2 triangular(int j) const;           // P_j, 1-based
    Mat2 diagonal(int j, Complex z) const;  // D_j, 0-based
    Mat2 product(Complex z) const;          // D0 P1 D1 ... D4 P5
};

ElementaryFactors closed_form_factors(const Parameters& p);

// Closed form of the quartic-factor matrix D(z) (cubic entries); equals the
// product of the elementary factors, det D = (z - tau)(z^2 - eta1^2)(z^2 - eta2^2).
Mat2 quartic_factor_matrix(const Parameters& p, Complex z);

// The Wiener-Hopf factorization phi = phi_+ phi_- (and the minus-plus version
// phi = theta_- theta_+).  All evaluators are immutable and safe to share
// across threads.
class Factorization {
  public:
    explicit Factorization(const Parameters& p);

    const Parameters& params() const { return p_; }
    const ElementaryFactors& elementary() const { return ef_; }

    Complex A(Complex z) const { return p_.tau / (z - p_.tau); }
    Complex f(Complex z) const { return f_quartic(p_, z); }
    Complex sqrt_f(Complex z) const { return dimer::sqrt_f(p_, z); }

    // Closed-form quartic-factor matrix (cubic entries); equals the product of
    // the elementary factors.
    Mat2 D(Complex z) const;
    Mat2 Psi(Complex z) const;
    Mat2 PsiInv(Complex z) const;  // via adjugate and det Psi = 4 eta1 eta2 (z - tau)
    Mat2 phi_plus(Complex z) const;
    Mat2 phi_minus(Complex z) const;
    Mat2 theta_plus(Complex z) const;
    Mat2 theta_minus(Complex z) const;

    struct Residuals {
        double plus_minus = 0.0;       // max |phi - phi_+ phi_-| on the grid
        double minus_plus = 0.0;       // max |phi - theta_- theta_+|
        double sqrtf_jump = 0.0;       // branch-continuity measure of sqrt_f
        double sqrtf_jump_bound = 0.0; // 10 * h * max |d sqrt_f / dx|
    };
    Residuals validate(int grid = 512) const;

  private:
    Parameters p_;
    ElementaryFactors ef_;
};

// Decreasing-power algorithm: peels roots of rho(z) at eta1, -eta1, eta2 via
// upper-unitriangular steps, then -eta2 via the lower-triangular one.
struct StepwiseResult {
    std::array<Complex, 4> p{};   // recovered p1..p4
    LaurentMat2 rho4;             // final invertible-at-infinity factor
    Mat2 rho4_at_infinity;        // its z^0 coefficient
    Mat2 v_plus_at_0;             // D0(0) P1 D1(0) ... P4 D4(0)
    Mat2 v_minus_at_infinity;     // tau^{-2} rho4(inf) diag(-tau, 1)
};

StepwiseResult stepwise_factorize_rho(const Parameters& p);

// Liouville constant C = v_-(inf) v_+(0) / g(0); the factorization pins C = I.
Mat2 liouville_constant(const Parameters& p);

}  // namespace dimer
