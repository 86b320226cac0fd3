#pragma once

#include <span>
#include <vector>

#include "dimer/symbol.hpp"

namespace dimer {

// Deterministic tree reduction; bit-stable for a fixed grid regardless of
// accumulation chunking elsewhere.
double pairwise_sum(std::span<const double> v);
Complex pairwise_sum(std::span<const Complex> v);

// Laurent coefficients of a sampled matrix function, window k in [k_lo, k_hi].
// The raw DFT value is corrected by radius^{-k} so the entries are true
// Laurent coefficients of the analytic continuation.
struct BlockFourierSeries {
    int k_lo = 0;
    int k_hi = -1;
    double source_radius = 1.0;
    std::vector<Mat2> coeffs;
    const Mat2& operator[](int k) const { return coeffs[static_cast<std::size_t>(k - k_lo)]; }
    int count() const { return k_hi - k_lo + 1; }
};

// Throws AliasError when the raw spectrum has not decayed at the Nyquist edge
// (grid too small for the function being sampled).
BlockFourierSeries fourier_block(const MatrixFunction2& f, int k_lo, int k_hi);

// sample() + fourier_block(), doubling the grid from n_start until the alias
// check passes; grid capped at 2^15.
BlockFourierSeries fourier_block_auto(const std::function<Mat2(Complex)>& fn, double radius,
                                      int k_lo, int k_hi, int n_start = 256);

// The two-dimensional torus integrals.  For even k:
//   R_k = (1/8pi^2) int cos y cos(kx+y) / den,  Q_k = 0,
// for odd k:
//   R_k = (t/8pi^2) int cos(x+y) cos(kx+y) / den,
//   Q_k = (1/8pi^2) int cos x cos(kx) / den,
// with den = cos^2 x + cos^2 y + t^2 cos^2(x+y) over [-pi,pi]^2.
struct RqResult {
    double r = 0.0;
    double q = 0.0;
};

// Trapezoid rule on an M x M grid, M doubled from 256 until two consecutive
// refinements agree to 1e-10 (cap 4096, else ConvergenceError).
RqResult rq_integrals(double t, int k);

// Batch evaluation on a shared grid: R_k for every k in [k_lo, k_hi] plus
// Q_k for odd |k| in the same range (Q_{-k} = Q_k).  Much cheaper than
// repeated rq_integrals calls; same refinement rule applied to the batch.
struct RqTable {
    int k_lo = 0, k_hi = -1;
    std::vector<double> r;  // r[k - k_lo]
    std::vector<double> q;  // q[k - k_lo]; zero for even k
    double R(int k) const { return r[static_cast<std::size_t>(k - k_lo)]; }
    double Q(int k) const { return q[static_cast<std::size_t>(k - k_lo)]; }
};
RqTable rq_batch(double t, int k_lo, int k_hi);

}  // namespace dimer
