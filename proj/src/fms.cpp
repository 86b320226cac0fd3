#include "dimer/fms.hpp"

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

double parity_sign(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

FmsMatrices build_fms(double t, int n) {
    if (n < 1 || n > 16) throw DomainError("fms oracle supports 1 <= n <= 16");
    // Index sets: R_{k-j+1} with j,k in [1,n] -> [2-n, n];
    // Q_{n+1-k-j} -> [1-n, n-1], Q_{-m} = Q_m and Q vanishes for even index.
    const RqTable tab = rq_batch(t, 2 - n, n);

    FmsMatrices m;
    m.n = n;
    m.r_block.resize(n, n);
    m.q_block.resize(n, n);
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            const int dr = k - j + 1;
            double r = 2.0 * parity_sign(floor_div2(k - j)) * tab.R(dr);
            if (j > k) r += std::pow(t, j - k - 1);
            m.r_block(j - 1, k - 1) = r;

            const int dq = std::abs(n + 1 - k - j);  // cos(kx) even in k
            const double q = (dq % 2 == 1 && dq >= 2 - n && dq <= n) ? tab.Q(dq) : 0.0;
            m.q_block(j - 1, k - 1) = 2.0 * I * parity_sign(floor_div2(j + k)) * q;
        }
    }
    return m;
}

namespace {

double k2_from_det(const Complex det) {
    if (std::abs(det.imag()) > 1e-9 * std::max(1e-300, std::abs(det.real())))
        throw NegativeDeterminantError("fms determinant has a non-negligible imaginary part");
    if (det.real() < -1e-9)
        throw NegativeDeterminantError("fms determinant is negative");
    return 0.5 * std::sqrt(std::max(0.0, det.real()));
}

}  // namespace

double fms_k2(double t, int n) {
    const FmsMatrices m = build_fms(t, n);
    Eigen::MatrixXcd full(2 * n, 2 * n);
    full.topLeftCorner(n, n) = m.r_block.cast<Complex>();
    full.topRightCorner(n, n) = m.q_block;
    full.bottomLeftCorner(n, n) = m.q_block;
    full.bottomRightCorner(n, n) = m.r_block.cast<Complex>();
    return k2_from_det(Eigen::PartialPivLU<Eigen::MatrixXcd>(full).determinant());
}

double fms_k2_block_identity(double t, int n) {
    const FmsMatrices m = build_fms(t, n);
    const Eigen::MatrixXcd plus = m.r_block.cast<Complex>() + m.q_block;
    const Eigen::MatrixXcd minus = m.r_block.cast<Complex>() - m.q_block;
    const Complex det = Eigen::PartialPivLU<Eigen::MatrixXcd>(plus).determinant() *
                        Eigen::PartialPivLU<Eigen::MatrixXcd>(minus).determinant();
    return k2_from_det(det);
}

}  // namespace dimer
