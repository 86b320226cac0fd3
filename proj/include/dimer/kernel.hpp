#pragma once

#include <Eigen/Dense>

#include "dimer/toeplitz.hpp"
#include "dimer/wienerhopf.hpp"

namespace dimer {

// alpha(z) = phi_-(z) theta_+^{-1}(z), beta(z) = theta_-^{-1}(1/z) phi_+(1/z),
// reduced to the quartic-factor matrix D:
//   alpha = adj D(1/z) s3 adj D^T(z) / (4 e1 e2 tau (1/z - tau) S(z)),
//   beta  = 4 e1 e2 tau D^T(z) s3 D(1/z) / ((1/z - tau) S(z)),
// with S(z) = 4 e1 e2 sqrt_f(z) sqrt_f(1/z) the branch-fixed square root of
// (1/z^2 - e1^2)(1/z^2 - e2^2)(z^2 - e1^2)(z^2 - e2^2).
Mat2 eval_alpha(const Factorization& f, Complex z);
Mat2 eval_beta(const Factorization& f, Complex z);

// Fourier coefficients alpha_k, beta_k for k = 1..kmax, sampled on the
// shifted contour of radius rho = (1 - delta) min |eta_p|.
struct AlphaBeta {
    Parameters params;
    int kmax = 0;
    double source_radius = 1.0;
    std::vector<Mat2> alpha, beta;  // index k-1
    const Mat2& a(int k) const { return alpha[static_cast<std::size_t>(k - 1)]; }
    const Mat2& b(int k) const { return beta[static_cast<std::size_t>(k - 1)]; }
};

AlphaBeta alpha_beta_coeffs(const Factorization& f, int kmax, double delta = 0.05);

// Truncation rule: neglected entries of Lambda fall below eps = 1e-16 once
// j, k >= K = ceil((ln(1/eps) + 2 n s) / (2 s)).
int truncation_order(const Parameters& p, int n);

// Lambda = H(z^{-n} alpha) H(z^{-n} beta) truncated to K x K blocks:
//   Lambda_{jk} = sum_a alpha_{j+n+a+1} beta_{k+n+a+1}.
struct LambdaOperator {
    int n = 0;
    int K = 0;
    Eigen::MatrixXcd matrix;    // 2K x 2K
    double trace_series = 0.0;  // sum_k k Tr(alpha_{k+n} beta_{k+n})

    double trace_of_matrix() const;
    LogDet logdet_one_minus_lu() const;  // LU on I - Lambda
    // log det(I - Lambda) = -sum_m Tr(Lambda^m)/m, full relative precision
    // even when the entries are far below machine epsilon relative to 1.
    double logdet_one_minus_series() const;
};

// Requires ab.kmax >= n + 2K + 1; throws TruncationError when the Hankel tail
// is not negligible against the running trace.
LambdaOperator build_lambda(const AlphaBeta& ab, int n);

// K2(x,y) = K2(inf) sqrt(det(I - Lambda)); determinant via LU.
double fredholm_k2(const Parameters& p, int n);

// log det(I - Lambda) through the trace series; the precise route for the
// large-n asymptotic extraction where det - 1 sits below roundoff.
double fredholm_logdet_excess(const Parameters& p, int n);

// 2n e^{2ns} (1 - K2(n)/K2(inf)) computed without cancellation.
double asymptotic_extraction(const Parameters& p, int n);

}  // namespace dimer
