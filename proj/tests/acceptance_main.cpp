// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Three subchecks are expected to fail and are reported with the measured
// values; the repo docs discuss each:
//  - criterion 1, xi slot: the published table digit 0.601344 is inconsistent
//    with the defining formula 1/(2s) = 0.6013642 evaluated from the same
//    parameters that reproduce every other slot to ~5e-7;
//  - criterion 2 at t = 0.1: the exact route at n = 48 still sits ~3e-6 away
//    from the order parameter (correlation length ~ 5), far above 1e-10;
//  - criterion 8, C1 law: the printed-formula C1 carries a ~20 t subleading
//    correction, so the law ratio is ~1.39 at t = 0.02 (and the corrected
//    non-alternating amplitude vanishes identically).

#include <Eigen/Dense>
#include <chrono>
#include <random>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

#include "dimer/asymptotics.hpp"
#include "dimer/fms.hpp"
#include "dimer/kernel.hpp"

using namespace dimer;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int id, const char* name, bool pass, double seconds, double budget,
            const std::string& detail) {
    if (seconds >= budget) pass = false;
    std::printf("[%s] criterion %d: %s (%.1fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", id,
                name, seconds, budget, detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    va_list ap;
    va_start(ap, f);
    char buf[512];
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0 ? std::abs(a - b) / s : 0.0;
}

// ---------------------------------------------------------------- criterion 1
void criterion_table() {
    Timer tm;
    const ReferenceTable t = reference_table_t1();
    struct Slot {
        const char* name;
        double got, want;
    };
    const Slot slots[] = {
        {"K2_inf", t.k2_inf, 0.149429},   {"xi", t.xi, 0.601344},
        {"omega", t.omega, 0.749469},     {"C1/2", t.c1_half, 11.769354},
        {"C2/2", t.c2_half, 2.014601},    {"C3/2", t.c3_half, 30.674027},
        {"C4/2", t.c4_half, 0.676743},    {"phi1", t.phi1, -1.556067},
        {"phi2", t.phi2, -2.282124},
    };
    bool pass = true;
    std::string detail;
    for (const Slot& s : slots) {
        if (std::abs(s.got - s.want) < 5e-6) continue;
        pass = false;
        detail += fmt("%s computed %.7f vs published %.6f; ", s.name, s.got, s.want);
    }
    if (!pass)
        detail += "remaining slots reproduce at <1e-6; published xi digit is inconsistent "
                  "with 1/(2s) from the same eta";
    report(1, "t=1 limiting constants table", pass, tm.seconds(), 1.0, detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion_order_parameter() {
    Timer tm;
    bool pass = true;
    std::string detail;
    for (int i = 1; i <= 9; ++i) {
        if (i == 5) continue;  // t = 1/2 is the critical point (CriticalPointError)
        const double t = i / 10.0;
        const Parameters p = compute_parameters(t);
        const double dev = std::abs(fredholm_k2(p, 48) / k2_infinity(t) - 1.0);
        const double tol = t < 0.5 ? 1e-10 : 1e-8;
        if (dev >= tol) {
            pass = false;
            detail += fmt("t=%.1f dev %.2e >= %.0e; ", t, dev, tol);
        }
    }
    if (!detail.empty())
        detail += "(n = 48 is ~10 correlation lengths at t = 0.1: physical gap, not roundoff)";
    report(2, "order parameter vs n=48 Fredholm route", pass, tm.seconds(), 30.0, detail);
}

// ---------------------------------------------------------------- criterion 3
void criterion_bocg() {
    Timer tm;
    bool pass = true;
    std::string detail;
    for (double t : {0.2, 0.3, 0.6, 0.8}) {
        const Parameters p = compute_parameters(t);
        const Factorization f(p);
        const int kmaxn = 32 + 2 * truncation_order(p, 32) + 2;
        const AlphaBeta ab = alpha_beta_coeffs(f, kmaxn);
        for (int n : {4, 8, 16, 32}) {
            const LambdaOperator lam = build_lambda(ab, n);
            const Complex lhs = toeplitz_logdet(p, n).value();
            const Complex rhs =
                order_parameter_e(t) * lam.logdet_one_minus_lu().value();
            const double err = std::abs(lhs / rhs - 1.0);
            if (err >= 1e-8) {
                pass = false;
                detail += fmt("t=%.1f n=%d err %.2e; ", t, n, err);
            }
        }
    }
    report(3, "det T_n = E(psi) det(I - Lambda)", pass, tm.seconds(), 60.0, detail);
}

// ---------------------------------------------------------------- criterion 4
void criterion_three_routes() {
    Timer tm;
    bool pass = true;
    std::string detail;
    double worst = 0.0;
    for (double t : {0.2, 0.3, 0.6, 0.8}) {
        const Parameters p = compute_parameters(t);
        for (int n : {4, 6, 8}) {
            const double a = fms_k2(t, n);
            const double b = toeplitz_k2(p, n);
            const double c = fredholm_k2(p, n);
            const double m = std::max({rel(a, b), rel(b, c), rel(a, c)});
            worst = std::max(worst, m);
            if (m >= 1e-7) {
                pass = false;
                detail += fmt("t=%.1f n=%d diff %.2e; ", t, n, m);
            }
        }
    }
    if (pass) detail = fmt("worst pairwise rel diff %.2e", worst);
    report(4, "FMS vs block Toeplitz vs Fredholm", pass, tm.seconds(), 120.0, detail);
}

// ---------------------------------------------------------------- criterion 5
void criterion_factorization() {
    Timer tm;
    bool pass = true;
    std::string detail;
    double worst_res = 0.0, worst_p = 0.0, worst_c = 0.0;
    for (double t : {0.1, 0.3, 0.45, 0.55, 0.7, 0.9}) {
        const Parameters p = compute_parameters(t);
        const Factorization f(p);
        const auto res = f.validate(512);
        const StepwiseResult sw = stepwise_factorize_rho(p);
        double perr = 0.0;
        for (int j = 0; j < 4; ++j)
            perr = std::max(perr, std::abs(sw.p[(std::size_t)j] - f.elementary().p[(std::size_t)j]) /
                                      std::abs(f.elementary().p[(std::size_t)j]));
        const double cerr = max_abs(liouville_constant(p) - Mat2(Mat2::Identity()));
        worst_res = std::max({worst_res, res.plus_minus, res.minus_plus});
        worst_p = std::max(worst_p, perr);
        worst_c = std::max(worst_c, cerr);
        if (res.plus_minus >= 1e-10 || res.minus_plus >= 1e-10 || perr >= 1e-10 ||
            cerr >= 1e-10) {
            pass = false;
            detail += fmt("t=%.2f res %.1e/%.1e p %.1e C %.1e; ", t, res.plus_minus,
                          res.minus_plus, perr, cerr);
        }
    }
    if (pass)
        detail = fmt("worst residual %.1e, stepwise %.1e, |C - I| %.1e", worst_res, worst_p,
                     worst_c);
    report(5, "Wiener-Hopf factorization residuals", pass, tm.seconds(), 10.0, detail);
}

// ---------------------------------------------------------------- criterion 6
void criterion_subcritical_asymptotics() {
    Timer tm;
    const Parameters p = compute_parameters(0.3);
    const AsymptoticConstants c = constants_sub(p);
    auto target = [&](int n) { return c.C1 + ((n % 2 == 0) ? -1.0 : 1.0) * c.C2; };
    const double e20 = std::abs(asymptotic_extraction(p, 20) / target(20) - 1.0);
    const double e40 = std::abs(asymptotic_extraction(p, 40) / target(40) - 1.0);
    const bool pass = e20 < 0.05 && e40 < 0.025 && e40 < e20;
    report(6, "subcritical extraction matches C1 + (-1)^{n+1} C2", pass, tm.seconds(), 60.0,
           fmt("rel err %.3f%% at n=20, %.3f%% at n=40", 100 * e20, 100 * e40));
}

// ---------------------------------------------------------------- criterion 7
struct FitResult {
    double C1, phi1, C2, phi2, C3, C4, resid;
};

FitResult fit_bracket(const std::vector<int>& ns, const std::vector<double>& ex, double omega,
                      bool with_correction) {
    const int cols = with_correction ? 12 : 6;
    Eigen::MatrixXd a(ns.size(), cols);
    Eigen::VectorXd y(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double n = ns[i];
        const double par = (ns[i] % 2 == 0) ? 1.0 : -1.0;
        const double base[6] = {std::cos(omega * n), std::sin(omega * n),
                                par * std::cos(omega * n), par * std::sin(omega * n), 1.0, par};
        for (int j = 0; j < 6; ++j) a(static_cast<Eigen::Index>(i), j) = base[j];
        if (with_correction)
            for (int j = 0; j < 6; ++j) a(static_cast<Eigen::Index>(i), 6 + j) = base[j] / n;
        y(static_cast<Eigen::Index>(i)) = ex[i];
    }
    const Eigen::VectorXd sol = a.colPivHouseholderQr().solve(y);
    FitResult r{};
    r.C1 = std::hypot(sol(0), sol(1));
    r.phi1 = std::atan2(-sol(1), sol(0));
    r.C2 = std::hypot(sol(2), sol(3));
    r.phi2 = std::atan2(-sol(3), sol(2));
    r.C3 = sol(4);
    r.C4 = sol(5);
    r.resid = (a * sol - y).norm() / y.norm();
    return r;
}

void criterion_supercritical_asymptotics() {
    Timer tm;
    const Parameters p = compute_parameters(0.7);
    const AsymptoticConstants c = constants_super(p);
    std::vector<int> ns;
    std::vector<double> ex;
    for (int n = 15; n <= 40; ++n) {
        ns.push_back(n);
        ex.push_back(asymptotic_extraction(p, n));
    }
    const FitResult plain = fit_bracket(ns, ex, c.omega, false);
    const FitResult fine = fit_bracket(ns, ex, c.omega, true);

    // Frequency recovery: residual scan over omega, then parabolic refinement.
    double best_w = c.omega, best_r = 1e300;
    for (int i = -40; i <= 40; ++i) {
        const double w = c.omega + i * 1.25e-3;
        const double r = fit_bracket(ns, ex, w, true).resid;
        if (r < best_r) {
            best_r = r;
            best_w = w;
        }
    }
    const double h = 1.25e-3;
    const double rm = fit_bracket(ns, ex, best_w - h, true).resid;
    const double rp = fit_bracket(ns, ex, best_w + h, true).resid;
    const double denom = rm - 2.0 * best_r + rp;
    const double w_star = denom > 0 ? best_w + 0.5 * h * (rm - rp) / denom : best_w;

    const bool resid_ok = plain.resid < 0.05;
    const bool omega_ok = std::abs(w_star - 2.0 * p.theta()) < 1e-3;
    const bool c1_ok = std::abs(fine.C1 - c.C1) < 0.05;  // C1 vanishes identically
    const bool c2_ok = rel(fine.C2, c.C2) < 0.05;
    const bool p2_ok = std::abs(std::remainder(fine.phi2 - c.phi2, 2.0 * M_PI)) < 0.05;
    const bool c3_ok = rel(fine.C3, c.C3) < 0.05;
    const bool c4_ok = std::abs(fine.C4 - c.C4) < std::max(0.10 * std::abs(c.C4), 0.05);
    const bool pass = resid_ok && omega_ok && c1_ok && c2_ok && p2_ok && c3_ok && c4_ok;
    report(7, "supercritical oscillatory bracket fit", pass, tm.seconds(), 120.0,
           fmt("resid %.2f%%, |omega-2theta| %.1e, C2 %.4f/%.4f, phi2 %.4f/%.4f, C3 %.4f/%.4f, "
               "C4 %.4f/%.4f, C1 %.4f (phi1 n/a: C1 = 0)",
               100 * plain.resid, std::abs(w_star - 2.0 * p.theta()), fine.C2, c.C2, fine.phi2,
               c.phi2, fine.C3, c.C3, fine.C4, c.C4, fine.C1));
}

// ---------------------------------------------------------------- criterion 8
void criterion_small_t() {
    Timer tm;
    const Parameters p = compute_parameters(0.02);
    const double lim = (3.0 - 2.0 * std::sqrt(2.0)) / (128.0 * M_PI);
    const AsymptoticConstants pub = constants_sub(p, CoeffConvention::Published);
    const AsymptoticConstants cor = constants_sub(p);
    const double c1_ratio = pub.C1 * std::pow(0.02, 5.0) / lim;
    const double xi_ratio = 2.0 * 0.02 * cor.xi;
    const bool c1_ok = std::abs(c1_ratio - 1.0) < 0.1;
    const bool xi_ok = std::abs(xi_ratio - 1.0) < 0.05;
    report(8, "small-t laws at t = 0.02", c1_ok && xi_ok, tm.seconds(), 5.0,
           fmt("C1 law ratio %.4f (want 1 +- 0.1; printed-formula C1; corrected C1 = %.1e "
               "identically), xi law ratio %.4f (want 1 +- 0.05)",
               c1_ratio, cor.C1, xi_ratio));
}

// ---------------------------------------------------------------- criterion 9
void criterion_properties() {
    Timer tm;
    bool pass = true;
    std::string detail;
    auto fail = [&](const std::string& what) {
        pass = false;
        detail += what + "; ";
    };

    // Constraint equation residual across a sweep.
    for (int i = 5; i <= 95; i += 5) {
        if (i == 50) continue;
        const Parameters p = compute_parameters(i / 100.0);
        if (p.p13_residual() >= 1e-10) fail(fmt("p13 residual at t=%.2f", i / 100.0));
    }

    for (double t : {0.3, 0.7}) {
        const Parameters p = compute_parameters(t);
        const Factorization f(p);
        // Grid symmetries of phi/psi and determinant identities.
        for (int j = 0; j < 128; ++j) {
            const double x = 2.0 * M_PI * j / 128;
            const Complex z = std::polar(1.0, x);
            const Mat2 phi = eval_phi(p, z);
            if (max_abs(eval_phi(p, 1.0 / z) - adjugate(phi)) > 1e-11) fail("sym1");
            if (max_abs(eval_psi(p, 1.0 / z) - adjugate(eval_psi(p, z))) > 1e-11) fail("sym2");
            if (max_abs(Mat2(phi.transpose()) - Mat2(sigma3() * phi * sigma3())) > 1e-11)
                fail("sym4");
            const Complex detphi = phi(0, 0) * phi(1, 1) - phi(0, 1) * phi(1, 0);
            if (std::abs(detphi - 1.0 / ((z - t) * (1.0 / z - t))) >
                1e-11 * std::abs(detphi))
                fail("det phi");
        }
        // Seeded random-point identities off the circle.
        std::mt19937_64 rng(20260811u ^ static_cast<std::uint64_t>(1000 * t));
        std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> rad(0.6, 1.6);
        std::vector<Complex> pts;
        for (int i = 0; i < 16; ++i) pts.push_back(std::polar(rad(rng), ang(rng)));
        for (const Complex z : pts) {
            const Mat2 pi_z = eval_pi(p, z);
            const Complex detpi = pi_z(0, 0) * pi_z(1, 1) - pi_z(0, 1) * pi_z(1, 0);
            if (std::abs(detpi - g_poly(p, z) * g_poly(p, 1.0 / z)) >
                1e-11 * std::max(1.0, std::abs(detpi)))
                fail("det pi = g g");
            const Mat2 d = quartic_factor_matrix(p, z);
            const Complex detd = d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0);
            const Complex want = (z - p.tau) * (z * z - p.eta1 * p.eta1) *
                                 (z * z - p.eta2 * p.eta2);
            if (std::abs(detd - want) > 1e-11 * std::abs(want)) fail("det D");
            const Mat2 psi = f.Psi(z);
            const Complex detpsi = psi(0, 0) * psi(1, 1) - psi(0, 1) * psi(1, 0);
            if (std::abs(detpsi - 4.0 * p.eta1 * p.eta2 * (z - p.tau)) >
                1e-11 * std::abs(detpsi))
                fail("det Psi");
            // sab2 / sab4 conjugation symmetries.
            if (max_abs(f.phi_plus(std::conj(z) / std::abs(z) * 0.8) -
                        Mat2(sigma3() * f.phi_plus(z / std::abs(z) * 0.8).conjugate() *
                             sigma3())) > 1e-11)
                fail("sab2");
            const Complex zc = z / std::abs(z) * 1.05;
            if (max_abs(eval_alpha(f, std::conj(zc)) -
                        Mat2(sigma3() * eval_alpha(f, zc).conjugate() * sigma3())) > 1e-11)
                fail("sab4");
        }
        // One-sided Fourier support of the factors.
        const BlockFourierSeries cp =
            fourier_block_auto([&](Complex z) { return f.phi_plus(z); }, 1.0, -8, 8, 512);
        const BlockFourierSeries cm =
            fourier_block_auto([&](Complex z) { return f.phi_minus(z); }, 1.0, -8, 8, 512);
        double sp = 0.0, sm = 0.0;
        for (int k = -8; k <= 8; ++k) {
            sp = std::max(sp, max_abs(cp[k]));
            sm = std::max(sm, max_abs(cm[k]));
        }
        for (int k = 1; k <= 8; ++k) {
            if (max_abs(cp[-k]) > 1e-10 * sp) fail("phi_+ one-sided");
            if (max_abs(cm[k]) > 1e-10 * sm) fail("phi_- one-sided");
        }
    }
    report(9, "property suite (symmetries, determinants, support)", pass, tm.seconds(), 30.0, detail);
}

}  // namespace

int main() {
    criterion_table();
    criterion_order_parameter();
    criterion_bocg();
    criterion_three_routes();
    criterion_factorization();
    criterion_subcritical_asymptotics();
    criterion_supercritical_asymptotics();
    criterion_small_t();
    criterion_properties();
    if (g_failures > 0)
        std::printf("%d criterion(s) failed; see the repo docs for the analysis of the "
                    "expected discrepancies.\n",
                    g_failures);
    return g_failures == 0 ? 0 : 1;
}
