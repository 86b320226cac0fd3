#include "dimer/asymptotics.hpp"

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

Mat2 adjT(const Mat2& m) { return adjugate(Mat2(m.transpose())); }

Complex eta_of(const Parameters& par, int p) { return p == 1 ? par.eta1 : par.eta2; }

// Branch constant L_p of the corrected convention.
Complex branch_constant(const Parameters& par, int p) {
    const Complex ep = eta_of(par, p);
    const Complex epp = eta_of(par, 3 - p);
    return 4.0 * par.eta1 * par.eta2 * (0.5 * std::sqrt(par.eta1 * par.eta2)) *
           std::sqrt(1.0 - ep * ep / (epp * epp)) * std::sqrt(Complex(2.0)) *
           sqrt_f(par, 1.0 / ep);
}

LeadingCoefficients corrected_coeffs(const Parameters& par) {
    LeadingCoefficients lc;
    for (int p : {1, 2}) {
        const Complex lam = branch_constant(par, p);
        for (int sg : {1, -1}) {
            const Complex z0 = static_cast<double>(sg) * eta_of(par, p);
            const Complex w = (1.0 / z0 - par.tau) * lam * kSqrtPi;
            lc.a0[{p, sg}] = adjugate(quartic_factor_matrix(par, 1.0 / z0)) * sigma3() * adjT(quartic_factor_matrix(par, z0)) /
                             (4.0 * par.eta1 * par.eta2 * par.tau * w);
            lc.b0[{p, sg}] =
                (4.0 * par.eta1 * par.eta2 * par.tau) *
                (quartic_factor_matrix(par, z0).transpose() * sigma3() * quartic_factor_matrix(par, 1.0 / z0)) / w;
        }
    }
    return lc;
}

LeadingCoefficients published_coeffs(const Parameters& par) {
    LeadingCoefficients lc;
    for (int p : {1, 2}) {
        const Complex ep = eta_of(par, p);
        const Complex epp = eta_of(par, 3 - p);
        const Complex rad =
            (par.eta1 * par.eta1 - 1.0 / (ep * ep)) * (par.eta2 * par.eta2 - 1.0 / (ep * ep)) *
            (epp * epp - ep * ep);
        const Complex gp = 1.0 / (8.0 * std::sqrt(2.0 * M_PI) * par.eta1 * par.eta2 * par.tau *
                                  (par.tau * ep - 1.0) * std::sqrt(rad));
        const Complex epsp = std::sqrt(2.0) * par.eta1 * par.eta2 * par.tau /
                             (kSqrtPi * (par.tau * ep - 1.0) * std::sqrt(rad));
        for (int sg : {1, -1}) {
            const Complex z0 = static_cast<double>(sg) * ep;
            lc.a0[{p, sg}] = gp * adjugate(quartic_factor_matrix(par, 1.0 / z0)) * sigma3() * adjT(quartic_factor_matrix(par, z0));
            lc.b0[{p, sg}] = epsp * quartic_factor_matrix(par, 1.0 / z0) * sigma3() * quartic_factor_matrix(par, z0).transpose();
        }
    }
    return lc;
}

double real_checked(Complex v, const char* what) {
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real())))
        throw Error(std::string(what) + ": imaginary residue above tolerance");
    return v.real();
}

struct DValues {
    Complex d11, d12, d21, d22, d31, d32;
};

// Combination layer shared by both conventions.  The k-sums over products of
// p = 1 components are geometric in e^{-2 k ln eta1}, so their closed factor
// is eta1^2/(eta1^2 -+ 1)^2; mixed products decay like e^{-2ks} and carry
// eta1 eta2 = e^{2s}.  The published convention instead pairs the p = 1
// products with the conjugate frequency (eta2^2 factors), which is what the
// published limiting table was evaluated with.
DValues combine(const Parameters& par, const LeadingCoefficients& lc, bool published_pairing) {
    auto A = [&](int p, int sg) { return lc.a0.at({p, sg}); };
    auto B = [&](int p, int sg) { return lc.b0.at({p, sg}); };
    const Mat2 c11 = A(1, 1) * B(1, 1) + A(1, -1) * B(1, -1);
    const Mat2 c12 = A(1, 1) * B(1, -1) + A(1, -1) * B(1, 1);
    const Mat2 c21 = A(1, 1) * B(2, 1) + A(2, 1) * B(1, 1) + A(1, -1) * B(2, -1) +
                     A(2, -1) * B(1, -1);
    const Mat2 c22 = A(1, 1) * B(2, -1) + A(2, -1) * B(1, 1) + A(2, 1) * B(1, -1) +
                     A(1, -1) * B(2, 1);
    const Mat2 c31 = A(2, 1) * B(2, 1) + A(2, -1) * B(2, -1);
    const Mat2 c32 = A(2, 1) * B(2, -1) + A(2, -1) * B(2, 1);

    const Complex q1 = published_pairing ? par.eta2 * par.eta2 : par.eta1 * par.eta1;
    const Complex q3 = published_pairing ? par.eta1 * par.eta1 : par.eta2 * par.eta2;
    const Complex qm = par.eta1 * par.eta2;  // e^{2s}

    auto even_sum = [](Complex q, Complex tr) { return q * tr / ((q - 1.0) * (q - 1.0)); };
    auto odd_sum = [](Complex q, Complex tr) { return -q * tr / ((q + 1.0) * (q + 1.0)); };

    DValues d;
    d.d11 = even_sum(q1, trace2(c11));
    d.d12 = odd_sum(q1, trace2(c12));
    d.d21 = even_sum(qm, trace2(c21));
    d.d22 = odd_sum(qm, trace2(c22));
    d.d31 = even_sum(q3, trace2(c31));
    d.d32 = odd_sum(q3, trace2(c32));

    if (std::abs(d.d31 - std::conj(d.d11)) > 1e-10 * std::max(1.0, std::abs(d.d11)))
        throw Error("conjugacy d31 = conj(d11) violated");
    if (std::abs(d.d32 - std::conj(d.d12)) > 1e-10 * std::max(1.0, std::abs(d.d12)))
        throw Error("conjugacy d32 = conj(d12) violated");
    return d;
}

}  // namespace

LeadingCoefficients leading_coeffs(const Parameters& p, CoeffConvention conv) {
    return conv == CoeffConvention::Corrected ? corrected_coeffs(p) : published_coeffs(p);
}

LeadingCoefficients leading_coeffs_sub(const Parameters& p, CoeffConvention conv) {
    if (p.regime != Regime::Subcritical) throw DomainError("subcritical parameters expected");
    return leading_coeffs(p, conv);
}

LeadingCoefficients leading_coeffs_super(const Parameters& p, CoeffConvention conv) {
    if (p.regime != Regime::Supercritical) throw DomainError("supercritical parameters expected");
    return leading_coeffs(p, conv);
}

AsymptoticConstants constants_sub(const Parameters& p, CoeffConvention conv) {
    const LeadingCoefficients lc = leading_coeffs_sub(p, conv);
    // The channel of the smaller eta dominates; the canonical labeling puts it
    // at p = 2, but the constants stay well-defined under a label swap.
    const int pd = std::abs(p.eta2) <= std::abs(p.eta1) ? 2 : 1;
    const double e2 = pd == 2 ? p.eta2.real() : p.eta1.real();
    const Complex tr_same =
        trace2(lc.a0.at({pd, 1}) * lc.b0.at({pd, 1}) + lc.a0.at({pd, -1}) * lc.b0.at({pd, -1}));
    const Complex tr_cross =
        trace2(lc.a0.at({pd, 1}) * lc.b0.at({pd, -1}) + lc.a0.at({pd, -1}) * lc.b0.at({pd, 1}));
    AsymptoticConstants c;
    c.regime = Regime::Subcritical;
    c.k2_inf = k2_infinity(p.t);
    c.xi = 1.0 / (2.0 * std::log(e2));
    const double d = e2 * e2;
    c.C1 = real_checked(tr_same, "C1") * d / ((d - 1.0) * (d - 1.0));
    c.C2 = real_checked(tr_cross, "C2") * d / ((d + 1.0) * (d + 1.0));
    return c;
}

AsymptoticConstants constants_super(const Parameters& p, CoeffConvention conv) {
    const LeadingCoefficients lc = leading_coeffs_super(p, conv);
    const DValues d = combine(p, lc, conv == CoeffConvention::Published);
    AsymptoticConstants c;
    c.regime = Regime::Supercritical;
    c.k2_inf = k2_infinity(p.t);
    c.xi = 1.0 / (2.0 * p.s());
    c.omega = 2.0 * p.theta();
    c.C1 = 2.0 * std::abs(d.d11);
    c.C2 = 2.0 * std::abs(d.d12);
    // Bracket term 2 Re[d11 e^{-2 n ln eta1}] e^{2ns} = C1 cos(omega n + phi1);
    // the e^{+i omega n} direction belongs to d11 when Im eta1 < 0.
    const double sign = p.eta1.imag() <= 0.0 ? 1.0 : -1.0;
    c.phi1 = sign * std::arg(d.d11);
    c.phi2 = sign * std::arg(d.d12);
    c.C3 = real_checked(d.d21, "C3");
    c.C4 = real_checked(d.d22, "C4");
    return c;
}

AsymptoticConstants constants(const Parameters& p, CoeffConvention conv) {
    return p.regime == Regime::Subcritical ? constants_sub(p, conv) : constants_super(p, conv);
}

double k2_asymptotic(const AsymptoticConstants& c, const Parameters& p, int n) {
    if (n < 1) throw DomainError("n must be positive");
    const double damp = std::exp(-2.0 * n * p.s()) / (2.0 * n);
    double bracket;
    if (c.regime == Regime::Subcritical) {
        bracket = c.C1 + ((n % 2 == 0) ? -1.0 : 1.0) * c.C2;
    } else {
        const double par = (n % 2 == 0) ? 1.0 : -1.0;
        bracket = c.C1 * std::cos(c.omega * n + c.phi1) +
                  c.C2 * par * std::cos(c.omega * n + c.phi2) + c.C3 + c.C4 * par;
    }
    return c.k2_inf * (1.0 - damp * bracket);
}

ReferenceTable reference_table_t1() {
    const Parameters p = compute_parameters_limit(1.0);
    const LeadingCoefficients lc = leading_coeffs(p, CoeffConvention::Published);
    const DValues d = combine(p, lc, /*published_pairing=*/true);
    ReferenceTable t;
    t.k2_inf = k2_infinity(1.0);
    t.xi = 1.0 / (2.0 * p.s());
    t.omega = 2.0 * p.theta();
    t.c1_half = std::abs(d.d11);
    t.c2_half = std::abs(d.d12);
    t.c3_half = d.d21.real();
    t.c4_half = d.d22.real();
    t.phi1 = std::arg(d.d11);
    t.phi2 = std::arg(d.d12);
    return t;
}

}  // namespace dimer
