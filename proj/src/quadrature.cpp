#include "dimer/quadrature.hpp"

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

template <typename T>
T pairwise_impl(std::span<const T> v) {
    if (v.size() <= 8) {
        T acc{};
        for (const T& x : v) acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_impl(v.subspan(0, half)) + pairwise_impl(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> v) { return pairwise_impl(v); }
Complex pairwise_sum(std::span<const Complex> v) { return pairwise_impl(v); }

BlockFourierSeries fourier_block(const MatrixFunction2& f, int k_lo, int k_hi) {
    const int n = f.size();
    if (k_hi < k_lo) throw DomainError("empty coefficient window");
    if (n < 2 * std::max(std::abs(k_lo), std::abs(k_hi)) + 2)
        throw AliasError("coefficient window exceeds the sampling grid");

    // Twiddle table: w[j] = e^{-2 pi i j / n}.
    std::vector<Complex> w(n);
    for (int j = 0; j < n; ++j) w[j] = std::polar(1.0, -2.0 * M_PI * j / n);

    auto raw_coeff = [&](int k) {
        std::vector<Complex> terms(n);
        Mat2 out;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                for (int j = 0; j < n; ++j) {
                    const long long m = (static_cast<long long>(j) * k) % n;
                    terms[j] = f.samples[j](a, b) * w[(m + n) % n];
                }
                out(a, b) = pairwise_sum(std::span<const Complex>(terms)) / static_cast<double>(n);
            }
        return out;
    };

    // Alias check on the raw spectrum: the window edges near +-n/2 must have
    // decayed relative to the overall maximum.
    double max_mag = 0.0;
    for (const Mat2& s : f.samples) max_mag = std::max(max_mag, max_abs(s));
    const double tail =
        std::max(max_abs(raw_coeff(n / 2 - 1)), max_abs(raw_coeff(n / 2)));
    if (tail > 1e-13 * max_mag)
        throw AliasError("Fourier tail has not decayed at the Nyquist edge");

    BlockFourierSeries out;
    out.k_lo = k_lo;
    out.k_hi = k_hi;
    out.source_radius = f.radius;
    out.coeffs.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (int k = k_lo; k <= k_hi; ++k) {
        const double corr = std::pow(f.radius, static_cast<double>(-k));
        out.coeffs.push_back(corr * raw_coeff(k));
    }
    return out;
}

BlockFourierSeries fourier_block_auto(const std::function<Mat2(Complex)>& fn, double radius,
                                      int k_lo, int k_hi, int n_start) {
    constexpr int kCap = 1 << 15;
    int n = std::max(n_start, 64);
    while (n < 2 * std::max(std::abs(k_lo), std::abs(k_hi)) + 2) n *= 2;
    for (; n <= kCap; n *= 2) {
        try {
            return fourier_block(sample(fn, radius, n), k_lo, k_hi);
        } catch (const AliasError&) {
            if (2 * n > kCap) throw;
        }
    }
    throw AliasError("Fourier grid cap reached");
}

namespace {

struct Grid2 {
    int m;
    std::vector<double> x;        // m angles in [-pi, pi)
    std::vector<double> inv_den;  // 1/den row-major
};

Grid2 make_grid(double t, int m) {
    Grid2 g;
    g.m = m;
    g.x.resize(m);
    for (int i = 0; i < m; ++i) g.x[i] = -M_PI + 2.0 * M_PI * i / m;
    g.inv_den.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        const double cx = std::cos(g.x[i]);
        for (int j = 0; j < m; ++j) {
            const double cy = std::cos(g.x[j]);
            const double cxy = std::cos(g.x[i] + g.x[j]);
            g.inv_den[static_cast<std::size_t>(i) * m + j] =
                1.0 / (cx * cx + cy * cy + t * t * cxy * cxy);
        }
    }
    return g;
}

// (1/8pi^2) * int num/den dx dy ~ (1/(2 M^2)) * sum, numerator chosen per parity.
RqResult rq_on_grid(double t, int k, const Grid2& g) {
    const int m = g.m;
    std::vector<double> rterms(static_cast<std::size_t>(m) * m);
    std::vector<double> qterms;
    const bool odd = (std::abs(k) % 2) == 1;
    if (odd) qterms.resize(rterms.size());
    for (int i = 0; i < m; ++i) {
        const double kx = k * g.x[i];
        const double cx = std::cos(g.x[i]);
        for (int j = 0; j < m; ++j) {
            const std::size_t id = static_cast<std::size_t>(i) * m + j;
            const double y = g.x[j];
            if (odd) {
                rterms[id] = t * std::cos(g.x[i] + y) * std::cos(kx + y) * g.inv_den[id];
                qterms[id] = cx * std::cos(kx) * g.inv_den[id];
            } else {
                rterms[id] = std::cos(y) * std::cos(kx + y) * g.inv_den[id];
            }
        }
    }
    RqResult out;
    const double scale = 0.5 / (static_cast<double>(m) * m);
    out.r = scale * pairwise_sum(std::span<const double>(rterms));
    out.q = odd ? scale * pairwise_sum(std::span<const double>(qterms)) : 0.0;
    return out;
}

}  // namespace

RqResult rq_integrals(double t, int k) {
    if (!(t > 0.0) || !(t < 1.0)) throw DomainError("weight t must lie in (0,1)");
    RqResult prev = rq_on_grid(t, k, make_grid(t, 256));
    for (int m = 512; m <= 4096; m *= 2) {
        const RqResult cur = rq_on_grid(t, k, make_grid(t, m));
        if (std::abs(cur.r - prev.r) <= 1e-10 && std::abs(cur.q - prev.q) <= 1e-10) return cur;
        prev = cur;
    }
    throw ConvergenceError("rq_integrals did not settle under grid refinement");
}

RqTable rq_batch(double t, int k_lo, int k_hi) {
    if (!(t > 0.0) || !(t < 1.0)) throw DomainError("weight t must lie in (0,1)");
    if (k_hi < k_lo) throw DomainError("empty rq window");
    auto eval_all = [&](int m) {
        const Grid2 g = make_grid(t, m);
        RqTable tab;
        tab.k_lo = k_lo;
        tab.k_hi = k_hi;
        tab.r.resize(static_cast<std::size_t>(k_hi - k_lo + 1));
        tab.q.resize(tab.r.size());
        for (int k = k_lo; k <= k_hi; ++k) {
            const RqResult v = rq_on_grid(t, k, g);
            tab.r[static_cast<std::size_t>(k - k_lo)] = v.r;
            tab.q[static_cast<std::size_t>(k - k_lo)] = v.q;
        }
        return tab;
    };
    RqTable prev = eval_all(256);
    for (int m = 512; m <= 4096; m *= 2) {
        RqTable cur = eval_all(m);
        double diff = 0.0;
        for (std::size_t i = 0; i < cur.r.size(); ++i) {
            diff = std::max(diff, std::abs(cur.r[i] - prev.r[i]));
            diff = std::max(diff, std::abs(cur.q[i] - prev.q[i]));
        }
        if (diff <= 1e-10) return cur;
        prev = std::move(cur);
    }
    throw ConvergenceError("rq_batch did not settle under grid refinement");
}

}  // namespace dimer
