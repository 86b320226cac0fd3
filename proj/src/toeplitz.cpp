#include "dimer/toeplitz.hpp"

#include <cmath>
#include <limits>

#include "dimer/errors.hpp"

namespace dimer {

Complex LogDet::value() const { return std::polar(std::exp(log_abs), phase); }

LogDet det_log(const Eigen::MatrixXcd& m) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
    LogDet out;
    const auto& u = lu.matrixLU();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        const Complex d = u(i, i);
        if (d == Complex(0.0, 0.0)) {
            out.log_abs = -std::numeric_limits<double>::infinity();
            return out;
        }
        out.log_abs += std::log(std::abs(d));
        out.phase += std::arg(d);
    }
    if (lu.permutationP().determinant() < 0) out.phase += M_PI;
    out.phase = std::remainder(out.phase, 2.0 * M_PI);
    return out;
}

Eigen::MatrixXcd build_block_toeplitz(const BlockFourierSeries& c, int n) {
    if (c.k_lo > -(n - 1) || c.k_hi < n - 1)
        throw DomainError("coefficient window too small for T_n");
    Eigen::MatrixXcd m(2 * n, 2 * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m.block<2, 2>(2 * j, 2 * k) = c[j - k];
    return m;
}

namespace {

BlockFourierSeries phi_coefficients(const Parameters& p, int n, int grid) {
    const int start = grid > 0 ? grid : 1024;
    return fourier_block_auto([&](Complex z) { return eval_phi(p, z); }, 1.0, -(n - 1), n - 1,
                              start);
}

}  // namespace

LogDet toeplitz_logdet(const Parameters& p, int n, int grid) {
    if (n < 1) throw DomainError("n must be positive");
    return det_log(build_block_toeplitz(phi_coefficients(p, n, grid), n));
}

double toeplitz_k2(const Parameters& p, int n, int grid) {
    const LogDet d = toeplitz_logdet(p, n, grid);
    if (!std::isfinite(d.log_abs) || std::abs(d.phase) > 1e-9)
        throw NonPositiveDeterminantError("det T_n(phi) is not real positive");
    return 0.5 * std::exp(0.5 * d.log_abs);
}

}  // namespace dimer
