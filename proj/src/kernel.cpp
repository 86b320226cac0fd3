#include "dimer/kernel.hpp"

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

Complex contour_weight(const Factorization& f, Complex z) {
    const Parameters& p = f.params();
    // (1/z - tau) * S(z), S = 4 e1 e2 sqrt_f(z) sqrt_f(1/z)
    return (1.0 / z - p.tau) * 4.0 * p.eta1 * p.eta2 * f.sqrt_f(z) * f.sqrt_f(1.0 / z);
}

}  // namespace

Mat2 eval_alpha(const Factorization& f, Complex z) {
    const Parameters& p = f.params();
    const Mat2 num = adjugate(f.D(1.0 / z)) * sigma3() * adjugate(f.D(z).transpose());
    return num / (4.0 * p.eta1 * p.eta2 * p.tau * contour_weight(f, z));
}

Mat2 eval_beta(const Factorization& f, Complex z) {
    const Parameters& p = f.params();
    const Mat2 num = f.D(z).transpose() * sigma3() * f.D(1.0 / z);
    return (4.0 * p.eta1 * p.eta2 * p.tau) * num / contour_weight(f, z);
}

AlphaBeta alpha_beta_coeffs(const Factorization& f, int kmax, double delta) {
    const Parameters& p = f.params();
    const double rho = (1.0 - delta) * std::exp(p.s());

    AlphaBeta out;
    out.params = p;
    out.kmax = kmax;
    out.source_radius = rho;

    const BlockFourierSeries ca = fourier_block_auto(
        [&](Complex z) { return eval_alpha(f, z); }, rho, 1, kmax, 1024);
    const BlockFourierSeries cb = fourier_block_auto(
        [&](Complex z) { return eval_beta(f, z); }, rho, 1, kmax, 1024);
    out.alpha.assign(ca.coeffs.begin(), ca.coeffs.end());
    out.beta.assign(cb.coeffs.begin(), cb.coeffs.end());
    return out;
}

int truncation_order(const Parameters& p, int n) {
    const double s = p.s();
    return static_cast<int>(std::ceil((std::log(1e16) + 2.0 * n * s) / (2.0 * s)));
}

double LambdaOperator::trace_of_matrix() const { return matrix.trace().real(); }

LogDet LambdaOperator::logdet_one_minus_lu() const {
    const Eigen::MatrixXcd m =
        Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols()) - matrix;
    return det_log(m);
}

double LambdaOperator::logdet_one_minus_series() const {
    // -sum_m Tr(Lambda^m)/m; geometric decay since the spectral radius is
    // well below one at every n >= 2 used here.
    Eigen::MatrixXcd power = matrix;
    Complex sum{};
    for (int m = 1; m <= 64; ++m) {
        const Complex term = power.trace() / static_cast<double>(m);
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum) || std::abs(term) < 1e-300) break;
        if (m == 64) throw ConvergenceError("trace series for log det did not converge");
        power = power * matrix;
    }
    return -sum.real();
}

LambdaOperator build_lambda(const AlphaBeta& ab, int n) {
    LambdaOperator op;
    op.n = n;
    op.K = truncation_order(ab.params, n);
    const int K = op.K;
    if (ab.kmax < n + 2 * K + 1)
        throw TruncationError("alpha/beta coefficient window too short for Lambda");

    // Hankel blocks H_a[j,a] = alpha_{j+n+a+1}, H_b[a,k] = beta_{k+n+a+1}.
    Eigen::MatrixXcd ha(2 * K, 2 * K), hb(2 * K, 2 * K);
    for (int j = 0; j < K; ++j)
        for (int a = 0; a < K; ++a) {
            const int idx = j + n + a + 1;
            ha.block<2, 2>(2 * j, 2 * a) = ab.a(idx);
            hb.block<2, 2>(2 * a, 2 * j) = ab.b(idx);
        }
    op.matrix = ha * hb;

    // Trace identity sum plus the truncation guard on its tail.
    Complex tr{};
    Complex last{};
    const int k_top = std::min(ab.kmax - n, 2 * K);
    for (int k = 1; k <= k_top; ++k) {
        last = static_cast<double>(k) * trace2(ab.a(k + n) * ab.b(k + n));
        tr += last;
    }
    if (std::abs(last) > 1e-14 * std::max(std::abs(tr), 1e-280))
        throw TruncationError("Hankel trace tail above the truncation budget");
    op.trace_series = tr.real();
    return op;
}

namespace {

LambdaOperator lambda_for(const Parameters& p, int n) {
    const Factorization f(p);
    const int K = truncation_order(p, n);
    const AlphaBeta ab = alpha_beta_coeffs(f, n + 2 * K + 2);
    return build_lambda(ab, n);
}

}  // namespace

double fredholm_k2(const Parameters& p, int n) {
    if (n < 1) throw DomainError("n must be positive");
    const LambdaOperator op = lambda_for(p, n);
    const LogDet ld = op.logdet_one_minus_lu();
    if (!std::isfinite(ld.log_abs) || std::abs(ld.phase) > 1e-9)
        throw NonPositiveDeterminantError("det(I - Lambda) is not real positive");
    return k2_infinity(p.t) * std::exp(0.5 * ld.log_abs);
}

double fredholm_logdet_excess(const Parameters& p, int n) {
    if (n < 1) throw DomainError("n must be positive");
    return lambda_for(p, n).logdet_one_minus_series();
}

double asymptotic_extraction(const Parameters& p, int n) {
    const double ld = fredholm_logdet_excess(p, n);
    // 1 - K2(n)/K2(inf) = -expm1(ld/2)
    return -2.0 * n * std::exp(2.0 * n * p.s()) * std::expm1(0.5 * ld);
}

}  // namespace dimer
