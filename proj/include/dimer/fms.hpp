#pragma once

#include <Eigen/Dense>

#include "dimer/quadrature.hpp"

namespace dimer {

// Ground-truth route through the (2n)x(2n) determinant built from the torus
// integrals R_k, Q_k:
//   K2 = (1/2) sqrt(det [[R, Q], [Q, R]])
// with n x n blocks (indices j,k = 1..n; the 1-based convention is the one
// that reproduces the block Toeplitz route, see tests)
//   R_jk = 2 (-1)^floor((k-j)/2) R_{k-j+1} + theta(j-k) t^{j-k-1},
//   Q_jk = 2 i (-1)^floor((j+k)/2) Q_{n+1-k-j}.
struct FmsMatrices {
    int n = 0;
    Eigen::MatrixXd r_block;
    Eigen::MatrixXcd q_block;  // purely imaginary entries
};

FmsMatrices build_fms(double t, int n);

// Throws NegativeDeterminantError if the determinant comes out negative
// beyond roundoff (an indexing bug, not a math fact).
double fms_k2(double t, int n);

// Same determinant through the commuting-block shortcut
// det [[R,Q],[Q,R]] = det(R+Q) det(R-Q); used as a consistency check.
double fms_k2_block_identity(double t, int n);

// floor((a)/2) for possibly negative a, and the parity sign (-1)^m.
int floor_div2(int a);
double parity_sign(int m);

}  // namespace dimer
