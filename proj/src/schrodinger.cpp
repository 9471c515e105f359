#include "morsewig/schrodinger.hpp"

#include <cmath>
#include <vector>

#include "morsewig/errors.hpp"
#include "morsewig/quadrature.hpp"
#include "morsewig/specfun.hpp"

namespace morsewig {

cplx psi_scattering(const MorseSystem& sys, double k, double x) {
    double v = sys.v_of_x(x);
    if (v > 1400.0) return 0.0;  // |psi| < 1e-300 deep inside the wall
    cplx mu = cplx(0.0, k / sys.alpha);
    return std::exp(0.5 * sys.alpha * x) * whittaker_w(sys.b() / 2.0, mu, v);
}

cplx psi_scattering_kummer(const MorseSystem& sys, double k, double x) {
    double a = sys.alpha, b = sys.b();
    double v = sys.v_of_x(x);
    cplx ik = cplx(0.0, k / a);
    cplx chi = 0.5 - 0.5 * b + ik, vs = 1.0 + 2.0 * ik;
    cplx A = gamma_c(-2.0 * ik) / gamma_c(0.5 - 0.5 * b - ik);
    cplx up = A * std::pow(cplx(v), ik) * kummer_m(chi, vs, v);
    cplx dn = std::conj(A) * std::pow(cplx(v), -ik) *
              kummer_m(std::conj(chi), std::conj(vs), v);
    return std::sqrt(2.0 * sys.kappa / a) * std::exp(-0.5 * v) * (up + dn);
}

static double binom_real(double r, int j) {
    double v = 1.0;
    for (int i = 0; i < j; ++i) v *= (r - i) / (j - i);
    return v;
}

static double psi_bound_unnorm(const MorseSystem& sys, int nu, double v) {
    double b = sys.b();
    double chi = b / 2.0 - nu - 0.5;
    if (v <= 0.0) return 0.0;
    double lg = -0.5 * v + chi * std::log(0.5 * v);
    if (lg < -700.0) return 0.0;
    return std::exp(lg) * laguerre_assoc(nu, b - 2.0 * nu - 1.0, v);
}

double psi_bound_norm(const MorseSystem& sys, int nu) {
    double b = sys.b();
    double chi = b / 2.0 - nu - 0.5;
    if (nu < 0 || !(chi > 0.0))
        throw DomainError("psi_bound: level index beyond the bound spectrum");
    // integral of psi^2 dx via v = v(x), dx = -dv/(alpha v); log substitution
    auto g = [&](double w) {
        double v = std::exp(w);
        double f = psi_bound_unnorm(sys, nu, v);
        return f * f / sys.alpha;
    };
    double hi = std::log(60.0 + 20.0 * (chi + nu));
    double norm2 = composite_gl(g, -40.0, hi, int((hi + 40.0) / 0.5) + 1, 12);
    return std::sqrt(norm2);
}

double psi_bound(const MorseSystem& sys, int nu, double x) {
    return psi_bound_unnorm(sys, nu, sys.v_of_x(x)) / psi_bound_norm(sys, nu);
}

double schrodinger_residual(const MorseSystem& sys,
                            const std::function<cplx(double)>& psi, double E,
                            double x, double h) {
    cplx d2 = (-psi(x - 2.0 * h) + 16.0 * psi(x - h) - 30.0 * psi(x) +
               16.0 * psi(x + h) - psi(x + 2.0 * h)) /
              (12.0 * h * h);
    cplx kin = -sys.hbar * sys.hbar / (2.0 * sys.mass) * d2;
    cplx pot = sys.potential(x) * psi(x);
    cplx en = E * psi(x);
    double scale = std::max({std::abs(kin), std::abs(pot), std::abs(en)});
    if (scale == 0.0) return 0.0;
    return std::abs(kin + pot - en) / scale;
}

cplx wigner_transform_numeric(const MorseSystem& sys,
                              const std::function<cplx(double)>& psiL,
                              const std::function<cplx(double)>& psiR,
                              double x, double p, double rel_tol) {
    auto windowed = [&](double Y) {
        auto f = [&](double y) {
            double w = 1.0;
            double ay = std::abs(y);
            if (ay > 0.75 * Y) {
                double s = (ay - 0.75 * Y) / (0.25 * Y);
                w = 0.5 * (1.0 + std::cos(3.14159265358979323846 * s));
            }
            cplx ph = std::exp(cplx(0.0, -y * p));
            return w * ph * psiL(x + 0.5 * sys.hbar * y) *
                   std::conj(psiR(x - 0.5 * sys.hbar * y));
        };
        int panels = int(std::ceil(2.0 * Y / 0.5));
        return composite_gl(f, -Y, Y, panels, 10);
    };
    double Y = 10.0;
    cplx prev = windowed(Y);
    for (int it = 0; it < 14; ++it) {
        Y *= 1.4;
        cplx cur = windowed(Y);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + 1e-300)
            return cur;
        prev = cur;
    }
    throw ConvergenceError("wigner_transform_numeric: window growth failed");
}

SeriesResult wigner_series(const MorseSystem& sys, double x, double p,
                           double kL, double kR, double tol) {
    double a = sys.alpha, hb = sys.hbar, b = sys.b();
    double v = sys.v_of_x(x);
    if (!(v > 0.0)) throw DomainError("wigner_series: v(x) must be positive");
    double lam = std::max(12.0, std::log(1.0 / tol) + 4.0);
    double T = std::acosh(1.0 + lam / v);

    // shared kernel quadrature nodes on [-T, T]
    const int nodes = 12;
    const double pw = 0.25;
    int panels = int(std::ceil(2.0 * T / pw));
    const GaussLegendre& rule = gauss_legendre(nodes);
    std::vector<double> qt, qw, qch;
    for (int pa = 0; pa < panels; ++pa) {
        double lo = -T + pa * (2.0 * T / panels);
        double hw = T / panels;
        for (int i = 0; i < nodes; ++i) {
            double t = lo + hw * (rule.x[i] + 1.0);
            qt.push_back(t);
            qw.push_back(hw * rule.w[i]);
            qch.push_back(std::cosh(t));
        }
    }

    // per-side Kummer parameters; index 0 = plain, 1 = conjugated
    cplx chi[2][2], vsg[2][2], logA[2][2];
    double kk[2] = {kL, kR};
    for (int side = 0; side < 2; ++side) {
        cplx ik = cplx(0.0, kk[side] / a);
        cplx c0 = 0.5 - 0.5 * b + ik, s0 = 1.0 + 2.0 * ik;
        cplx A = gamma_c(-2.0 * ik) / gamma_c(0.5 - 0.5 * b - ik);
        chi[side][0] = c0;
        vsg[side][0] = s0;
        logA[side][0] = std::log(A);
        chi[side][1] = std::conj(c0);
        vsg[side][1] = std::conj(s0);
        logA[side][1] = std::log(std::conj(A));
    }

    const int Mcap = 200;
    // log of a_m = (chi)_m v^m / ((vsg)_m m!) per side and conjugation flag
    std::vector<cplx> lam_tab[2][2];
    for (int side = 0; side < 2; ++side)
        for (int cj = 0; cj < 2; ++cj) {
            auto& tab = lam_tab[side][cj];
            tab.assign(Mcap + 1, 0.0);
            for (int m = 1; m <= Mcap; ++m)
                tab[m] = tab[m - 1] +
                         std::log((chi[side][cj] + (m - 1.0)) * v /
                                  ((vsg[side][cj] + (m - 1.0)) * double(m)));
        }

    double lv = std::log(v);
    cplx tot = 0.0;
    int consec = 0;
    for (int M = 0; M <= Mcap; ++M) {
        cplx shell = 0.0;
        for (int m = 0; m <= M; ++m) {
            int n = M - m;
            for (int eL : {+1, -1}) {
                for (int eR : {+1, -1}) {
                    int cl = eL > 0 ? 0 : 1, cr = eR > 0 ? 0 : 1;
                    cplx logC = logA[0][cl] + logA[1][cr] +
                                cplx(0.0, (eL * kL + eR * kR) / a) * lv +
                                lam_tab[0][cl][m] + lam_tab[1][cr][n];
                    cplx E = double(m - n) +
                             cplx(0.0, (eL * kL - eR * kR) / a) +
                             cplx(0.0, 2.0 * p / (a * hb));
                    cplx acc = 0.0;
                    for (size_t i = 0; i < qt.size(); ++i)
                        acc += qw[i] * std::exp(logC - v * qch[i] - E * qt[i]);
                    shell += 0.5 * acc;
                }
            }
        }
        tot += shell;
        if (M > 4 && std::abs(shell) <= tol * std::abs(tot)) {
            if (++consec >= 3)
                return {tot, M, std::abs(shell) / std::abs(tot)};
        } else {
            consec = 0;
        }
    }
    throw ConvergenceError("wigner_series: shell sum did not settle");
}

cplx bound_wigner_closed(const MorseSystem& sys, int nu, double x, double p) {
    double b = sys.b();
    if (nu < 0 || !(nu - b / 2.0 + 0.5 < 0.0))
        throw DomainError("bound_wigner_closed: level beyond the bound spectrum");
    double z = sys.v_of_x(x);
    cplx q = cplx(0.0, -2.0 * p / (sys.alpha * sys.hbar));
    double fact[64];
    fact[0] = 1.0;
    for (int i = 1; i <= nu; ++i) fact[i] = fact[i - 1] * i;
    cplx tot = 0.0;
    for (int l1 = 0; l1 <= nu; ++l1) {
        for (int l2 = 0; l2 <= nu; ++l2) {
            double c = binom_real(b - nu - 1.0, nu - l1) *
                       binom_real(b - nu - 1.0, nu - l2) /
                       (fact[l1] * fact[l2]);
            double zp = std::pow(-z, l1 + l2);
            tot += c * zp * bessel_k(double(l1 - l2) + q, z);
        }
    }
    return std::pow(z, b - 2.0 * nu - 1.0) * tot;
}

}  // namespace morsewig
