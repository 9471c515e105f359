#include "morsewig/specfun.hpp"

#include <cmath>
#include <string>

#include "morsewig/errors.hpp"
#include "morsewig/quadrature.hpp"

namespace morsewig {

static const double PI = 3.14159265358979323846;

static bool near_int(cplx z, double tol, long* out) {
    double r = std::round(z.real());
    if (std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol) {
        if (out) *out = static_cast<long>(r);
        return true;
    }
    return false;
}

static bool near_nonpos_int(cplx z, double tol, long* out) {
    long n;
    if (near_int(z, tol, &n) && n <= 0) {
        if (out) *out = n;
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// gamma

// Lanczos coefficients, g = 7, 9 terms.
static const double lanczos_c[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

static cplx gamma_lanczos(cplx z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    cplx x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return std::sqrt(2.0 * PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx gamma_c(cplx z) {
    long n;
    if (near_nonpos_int(z, 1e-12, &n))
        throw PoleError("gamma_c: argument at pole " + std::to_string(n), n);
    if (z.real() < 0.5)
        return PI / (std::sin(PI * z) * gamma_lanczos(1.0 - z));
    return gamma_lanczos(z);
}

cplx inv_gamma_c(cplx z) {
    if (near_nonpos_int(z, 1e-12, nullptr)) return 0.0;
    return 1.0 / gamma_c(z);
}

static cplx inv_gamma(cplx z) { return inv_gamma_c(z); }

// ---------------------------------------------------------------------------

cplx pochhammer(cplx mu, int n) {
    if (n < 0) throw DomainError("pochhammer: negative order");
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= mu + static_cast<double>(i);
    return r;
}

cplx kummer_m(cplx mu, cplx nu, cplx z, const SeriesControl& ctl) {
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        cplx den = nu + static_cast<double>(n);
        if (std::abs(den) < 1e-12) {
            if (std::abs(mu + static_cast<double>(n)) < 1e-12)
                throw DegenerateParameterError(
                    "kummer_m: coincident non-positive integer parameters");
            throw PoleError("kummer_m: second parameter at pole", -n);
        }
        term *= (mu + static_cast<double>(n)) * z / (den * (n + 1.0));
        sum += term;
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) return sum;
    }
    throw ConvergenceError("kummer_m: series did not converge");
}

// Large-argument asymptotic series for U, truncated at its smallest term.
static cplx tricomi_u_asym(cplx mu, cplx nu, cplx z) {
    cplx term = 1.0, sum = 1.0;
    double best = 1.0;
    for (int n = 0; n < 60; ++n) {
        term *= -(mu + static_cast<double>(n)) *
                (mu - nu + 1.0 + static_cast<double>(n)) / ((n + 1.0) * z);
        double m = std::abs(term);
        if (m > best) break;  // divergent tail reached
        sum += term;
        best = m;
        if (m <= 1e-17 * std::abs(sum)) break;
    }
    return std::pow(z, -mu) * sum;
}

static cplx tricomi_u_core(cplx mu, cplx nu, cplx z) {
    cplx t1 = gamma_c(1.0 - nu) * inv_gamma(mu - nu + 1.0) * kummer_m(mu, nu, z);
    cplx t2 = gamma_c(nu - 1.0) * inv_gamma(mu) * std::pow(z, 1.0 - nu) *
              kummer_m(mu - nu + 1.0, 2.0 - nu, z);
    return t1 + t2;
}

cplx tricomi_u(cplx mu, cplx nu, cplx z) {
    if (std::abs(z) > 30.0) return tricomi_u_asym(mu, nu, z);
    if (std::abs(z) == 0.0) throw DomainError("tricomi_u: z = 0");
    if (near_int(nu, 1e-6, nullptr)) {
        const double eps = 1e-6;
        return 0.5 * (tricomi_u_core(mu, nu + eps, z) +
                      tricomi_u_core(mu, nu - eps, z));
    }
    return tricomi_u_core(mu, nu, z);
}

// ---------------------------------------------------------------------------
// Gauss hypergeometric

static cplx gauss_series(cplx a, cplx b, cplx c, cplx z,
                         const SeriesControl& ctl) {
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        cplx den = c + static_cast<double>(n);
        if (std::abs(den) < 1e-12)
            throw PoleError("gauss_2f1: lower parameter at pole", -n);
        term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) * z /
                (den * (n + 1.0));
        sum += term;
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) return sum;
    }
    throw ConvergenceError("gauss_2f1: series did not converge");
}

static cplx gauss_polynomial(long deg, cplx a, cplx b, cplx c, cplx z) {
    // a = -deg exactly terminates the series after deg+1 terms
    cplx term = 1.0, sum = 1.0;
    for (long j = 0; j < deg; ++j) {
        cplx den = (c + static_cast<double>(j)) * (j + 1.0);
        if (std::abs(den) < 1e-12)
            throw PoleError("gauss_2f1: lower parameter at pole", -j);
        term *= (a + static_cast<double>(j)) * (b + static_cast<double>(j)) * z / den;
        sum += term;
    }
    return sum;
}

static cplx gauss_connection_half(cplx a, cplx b, cplx c, cplx z, cplx lz,
                                  const SeriesControl& ctl) {
    cplx coef = gamma_c(c) * gamma_c(b - a) * inv_gamma(b) * inv_gamma(c - a);
    return coef * std::exp(-a * lz) *
           gauss_series(a, a - c + 1.0, a - b + 1.0, 1.0 / z, ctl);
}

static cplx gauss_connection(cplx a, cplx b, cplx c, cplx z,
                             const SeriesControl& ctl) {
    cplx lz;
    if (z.imag() == 0.0 && z.real() > 1.0)
        lz = cplx(std::log(z.real()), -PI);
    else
        lz = std::log(-z);
    cplx d = a - b;
    if (near_int(d, 1e-5, nullptr)) {
        // removable degeneracy: symmetric average just off the integer
        const double eps = 1e-5;
        return 0.5 * (gauss_connection_half(a + eps, b, c, z, lz, ctl) +
                       gauss_connection_half(b, a + eps, c, z, lz, ctl) +
                      gauss_connection_half(a - eps, b, c, z, lz, ctl) +
                      gauss_connection_half(b, a - eps, c, z, lz, ctl));
    }
    return gauss_connection_half(a, b, c, z, lz, ctl) +
           gauss_connection_half(b, a, c, z, lz, ctl);
}

cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl) {
    long n;
    if (near_nonpos_int(a, 1e-9, &n)) return gauss_polynomial(-n, cplx(double(n)), b, c, z);
    if (near_nonpos_int(b, 1e-9, &n)) return gauss_polynomial(-n, cplx(double(n)), a, c, z);
    double az = std::abs(z);
    if (az <= 0.95) return gauss_series(a, b, c, z, ctl);
    if (az >= 1.05) return gauss_connection(a, b, c, z, ctl);
    throw DomainError("gauss_2f1: argument too close to the unit circle");
}

// ---------------------------------------------------------------------------
// Bessel K by quadrature of the cosh integral

cplx bessel_k(cplx nu, cplx z, const QuadratureControl& ctl) {
    if (z.real() <= 0.0) throw DomainError("bessel_k: Re z must be positive");
    double target = -std::log(ctl.abs_tol);
    double T = 1.0;
    while (z.real() * (std::cosh(T) - 1.0) - std::abs(nu.real()) * T < target) {
        T += 0.5;
        if (T > 80.0) throw ConvergenceError("bessel_k: truncation failed");
    }
    int panels = static_cast<int>(std::ceil(2.0 * T / 0.5));
    auto integrand = [&](double t) { return std::exp(-z * std::cosh(t) - nu * t); };
    int n = 8;
    cplx prev = 0.5 * composite_gl(integrand, -T, T, panels, n);
    for (int r = 0; r < ctl.max_refinements; ++r) {
        n *= 2;
        cplx cur = 0.5 * composite_gl(integrand, -T, T, panels, n);
        if (std::abs(cur - prev) <=
            ctl.rel_tol * std::abs(cur) + ctl.abs_tol)
            return cur;
        prev = cur;
    }
    throw ConvergenceError("bessel_k: quadrature did not converge");
}

// ---------------------------------------------------------------------------

double laguerre_assoc(int n, double lambda, double x) {
    if (n < 0) throw DomainError("laguerre_assoc: negative degree");
    double l0 = 1.0;
    if (n == 0) return l0;
    double l1 = 1.0 + lambda - x;
    for (int k = 1; k < n; ++k) {
        double l2 = ((2.0 * k + 1.0 + lambda - x) * l1 - (k + lambda) * l0) /
                    (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

cplx whittaker_m(cplx kap, cplx mu, cplx z) {
    return std::exp(-0.5 * z) * std::pow(z, mu + 0.5) *
           kummer_m(mu - kap + 0.5, 1.0 + 2.0 * mu, z);
}

cplx whittaker_w(cplx kap, cplx mu, cplx z) {
    return std::exp(-0.5 * z) * std::pow(z, mu + 0.5) *
           tricomi_u(mu - kap + 0.5, 1.0 + 2.0 * mu, z);
}

cplx whittaker_w_bessel_sum(int n, cplx mu, double y) {
    if (n < 0) throw DomainError("whittaker_w_bessel_sum: negative index");
    cplx pref = std::pow(y, 0.5 * (n + 1.0)) / std::sqrt(PI) *
                pochhammer(0.5 * (1.0 - n) + mu, n);
    cplx sum = 0.0;
    double fact = 1.0;  // (n-k)! built downward from k = n
    for (int k = n; k >= 0; --k) {
        double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
        cplx num = (2.0 * k - n + 2.0 * mu) * pochhammer(cplx(-double(n)), n - k);
        cplx den = fact * pochhammer(cplx(double(k - n)) + 2.0 * mu, n + 1);
        sum += sign * num / den * bessel_k(-k + 0.5 * n - mu, 0.5 * y);
        fact *= (n - k + 1.0);
    }
    return pref * sum;
}

}  // namespace morsewig
