#pragma once

#include <Eigen/Dense>

#include "dimer/quadrature.hpp"

namespace dimer {

// log|det| and accumulated phase, kept separate so large-n sweeps never
// overflow.  value() exponentiates and is only safe at moderate magnitude.
struct LogDet {
    double log_abs = 0.0;
    double phase = 0.0;
    Complex value() const;
};

// Pivoted-LU determinant of a general complex matrix.
LogDet det_log(const Eigen::MatrixXcd& m);

// Realize T_n(phi): n x n blocks, block (j,k) = coeffs[j-k].
Eigen::MatrixXcd build_block_toeplitz(const BlockFourierSeries& c, int n);

// det T_n(phi) with phi sampled on the unit circle (grid = 0 picks the
// default 1024, auto-doubled by the alias rule).
LogDet toeplitz_logdet(const Parameters& p, int n, int grid = 0);

// K2 = (1/2) sqrt(det T_n(phi)); the determinant must be real positive.
double toeplitz_k2(const Parameters& p, int n, int grid = 0);

}  // namespace dimer
