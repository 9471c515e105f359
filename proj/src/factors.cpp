#include "morsewig/factors.hpp"

#include <cmath>
#include <string>

#include "morsewig/errors.hpp"
#include "morsewig/specfun.hpp"

namespace morsewig {

// Gamma with the stricter pole-proximity guard used throughout this module:
// within 1e-8 of a non-positive integer counts as "on the pole ladder".
static cplx gam(cplx z) {
    double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z - r) < 1e-8)
        throw PoleError("factor evaluation at pole ladder, offset " +
                            std::to_string(static_cast<long>(r)),
                        static_cast<long>(r));
    return gamma_c(z);
}

cplx w_liouville(cplx t, cplx k, double alpha) {
    cplx ik = cplx(0, 1) * k / (2.0 * alpha);
    return gam(-t + ik) * gam(-t - ik);
}

cplx w_b1(cplx t, cplx k, double alpha) {
    cplx ik = cplx(0, 1) * k / (2.0 * alpha);
    return gam(-t + ik) * gam(-t + 0.5 - ik) + gam(-t + 0.5 + ik) * gam(-t - ik);
}

cplx w_b2(cplx t, cplx k, double alpha) {
    cplx ik = cplx(0, 1) * k / (2.0 * alpha);
    return (t + 0.25) * gam(-t + ik) * gam(-t - ik) -
           gam(-t + 0.5 + ik) * gam(-t + 0.5 - ik);
}

cplx w_b2_alt(cplx t, cplx k, double alpha) {
    cplx ika = 2.0 * cplx(0, 1) * k / alpha;
    cplx ik = cplx(0, 1) * k / (2.0 * alpha);
    return (ika + 1.0) * gam(-t + ik) * gam(-t + 1.0 - ik) +
           2.0 * ika * gam(-t + 0.5 + ik) * gam(-t + 0.5 - ik) +
           (ika - 1.0) * gam(-t + 1.0 + ik) * gam(-t - ik);
}

static double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

cplx coeff_cnb(int n, int b, cplx k, double alpha) {
    if (n < 0 || n > b) throw DomainError("coeff_cnb: index out of range");
    cplx ika = 2.0 * cplx(0, 1) * k / alpha;
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    cplx num = (2.0 * n - b + ika) * pochhammer(cplx(-double(b)), b - n);
    cplx den = factorial(b - n) * pochhammer(double(n - b) + ika, b + 1);
    if (std::abs(den) < 1e-12)
        throw ResonanceError("coeff_cnb: 2ik/alpha collides with an integer");
    return sign * num / den;
}

cplx w_integer(cplx t, cplx k, int b, double alpha) {
    if (b < 0) throw DomainError("w_integer: b must be non-negative");
    cplx ik = cplx(0, 1) * k / (2.0 * alpha);
    cplx sum = 0.0;
    for (int n = 0; n <= b; ++n) {
        sum += coeff_cnb(n, b, k, alpha) * gam(-t + 0.5 * n + ik) *
               gam(-t - 0.5 * n + 0.5 * b - ik);
    }
    return sum;
}

static void check_resonance(cplx k, double alpha) {
    cplx ika = 2.0 * cplx(0, 1) * k / alpha;
    double r = std::round(ika.real());
    if (std::abs(ika - r) < 1e-8)
        throw ResonanceError("w_real: 2ik/alpha within 1e-8 of an integer");
}

cplx w_real(cplx t, cplx k, double b, double alpha) {
    check_resonance(k, alpha);
    cplx out = 0.0;
    for (int sgn : {+1, -1}) {
        cplx ik = double(sgn) * cplx(0, 1) * k / alpha;
        // 1/Gamma vanishing kills this branch at the bound-level k values
        cplx ig = inv_gamma_c(0.5 - 0.5 * b - ik);
        if (ig == cplx(0.0)) continue;
        cplx pref = std::pow(cplx(4.0), t + 0.5 * ik) * gam(-2.0 * ik) * ig *
                    gam(-2.0 * t + ik);
        out += pref * gauss_2f1(0.5 - 0.5 * b + ik, -2.0 * t + ik,
                                1.0 + 2.0 * ik, 2.0);
    }
    return out;
}

// binomial(r, j) for real upper argument
static double binom_real(double r, int j) {
    double v = 1.0;
    for (int i = 0; i < j; ++i) v *= (r - i) / (j - i);
    return v;
}

cplx w_bound(cplx t, int nu, double b, double alpha) {
    (void)alpha;  // ladder structure is alpha-independent once k is fixed
    if (nu < 0 || !(nu - b / 2.0 + 0.5 < 0.0))
        throw DomainError("w_bound: level index beyond the bound spectrum");
    cplx sum = 0.0;
    double chi = b / 2.0 - nu - 0.5;  // positive for a genuine bound level
    for (int l = 0; l <= nu; ++l) {
        double c = std::pow(-2.0, l) / factorial(l) * binom_real(b - nu - 1.0, nu - l);
        sum += c * std::pow(cplx(4.0), t) * gam(-2.0 * t + double(l) + chi);
    }
    return sum;
}

// ---------------------------------------------------------------------------

cplx FactorSolution::operator()(cplx t) const {
    switch (family) {
        case FactorFamily::LiouvilleB0: return w_liouville(t, k, alpha);
        case FactorFamily::ExplicitB1: return w_b1(t, k, alpha);
        case FactorFamily::ExplicitB2: return w_b2(t, k, alpha);
        case FactorFamily::IntegerB: return w_integer(t, k, int(std::lround(b)), alpha);
        case FactorFamily::RealB: return w_real(t, k, b, alpha);
        case FactorFamily::Bound: return w_bound(t, nu, b, alpha);
    }
    throw DomainError("FactorSolution: unknown family");
}

std::vector<double> FactorSolution::pole_ladder_origins() const {
    // gamma(-t + a) has poles at t = a + n, n >= 0: ladder origin Re a.
    double s = k.imag() / (2.0 * alpha);  // Re(ik/2alpha) = -Im(k)/2alpha
    std::vector<double> o;
    switch (family) {
        case FactorFamily::LiouvilleB0:
            o = {-s, s};
            break;
        case FactorFamily::ExplicitB1:
            o = {-s, 0.5 + s, 0.5 - s, s};
            break;
        case FactorFamily::ExplicitB2:
            o = {-s, s, 0.5 - s, 0.5 + s, 1.0 - s, 1.0 + s};
            break;
        case FactorFamily::IntegerB: {
            int bi = int(std::lround(b));
            for (int n = 0; n <= bi; ++n) {
                o.push_back(0.5 * n - s);
                o.push_back(0.5 * b - 0.5 * n + s);
            }
            break;
        }
        case FactorFamily::RealB:
            // gamma(-2t + sgn*ik/alpha): t = (n + sgn*ik/alpha)/2
            o = {-k.imag() / (2.0 * alpha), k.imag() / (2.0 * alpha)};
            break;
        case FactorFamily::Bound: {
            double chi = b / 2.0 - nu - 0.5;
            for (int l = 0; l <= nu; ++l) o.push_back(0.5 * (l + chi));
            break;
        }
    }
    return o;
}

double FactorSolution::leftmost_pole_re() const {
    double m = 1e300;
    for (double v : pole_ladder_origins()) m = std::min(m, v);
    return m;
}

FactorSolution FactorSolution::liouville(cplx k, double alpha) {
    return {FactorFamily::LiouvilleB0, 0.0, k, 0, alpha};
}
FactorSolution FactorSolution::explicit_b1(cplx k, double alpha) {
    return {FactorFamily::ExplicitB1, 1.0, k, 0, alpha};
}
FactorSolution FactorSolution::explicit_b2(cplx k, double alpha) {
    return {FactorFamily::ExplicitB2, 2.0, k, 0, alpha};
}
FactorSolution FactorSolution::integer_b(int b, cplx k, double alpha) {
    if (b < 0) throw DomainError("integer_b: b must be non-negative");
    return {FactorFamily::IntegerB, double(b), k, 0, alpha};
}
FactorSolution FactorSolution::real_b(double b, cplx k, double alpha) {
    check_resonance(k, alpha);
    return {FactorFamily::RealB, b, k, 0, alpha};
}
FactorSolution FactorSolution::bound(double b, int nu, double alpha) {
    if (nu < 0 || !(nu - b / 2.0 + 0.5 < 0.0))
        throw DomainError("bound factor: level index beyond the bound spectrum");
    cplx k = cplx(0.0, alpha * (nu - b / 2.0 + 0.5));
    return {FactorFamily::Bound, b, k, nu, alpha};
}

double difference_residual(const FactorSolution& w, cplx t) {
    cplx wa = w(t - 1.0);
    cplx wb = 0.5 * w.b * w(t - 0.5);
    cplx rhs = (t * t + w.k * w.k / (4.0 * w.alpha * w.alpha)) * w(t);
    double scale = std::max({std::abs(wa), std::abs(wb), std::abs(rhs)});
    if (scale == 0.0) return 0.0;
    return std::abs(wa - wb - rhs) / scale;
}

DifferenceReport difference_report(const FactorSolution& w,
                                   const std::vector<cplx>& points) {
    DifferenceReport rep;
    rep.points = points;
    for (cplx t : points) {
        double r = difference_residual(w, t);
        rep.residuals.push_back(r);
        rep.max_residual = std::max(rep.max_residual, r);
    }
    return rep;
}

}  // namespace morsewig
