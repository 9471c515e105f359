#ifndef MORSEWIG_SPECFUN_HPP
#define MORSEWIG_SPECFUN_HPP

#include <complex>

namespace morsewig {

using cplx = std::complex<double>;

struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 10000;
};

struct QuadratureControl {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_refinements = 12;
};

// Complex gamma function (Lanczos approximation, reflection for Re z < 1/2).
// Throws PoleError if z is within 1e-12 of a non-positive integer.
cplx gamma_c(cplx z);

// 1/Gamma(z), entire: returns exactly 0 at the poles of Gamma.
cplx inv_gamma_c(cplx z);

// Rising factorial (mu)_n = mu (mu+1) ... (mu+n-1), direct product; n >= 0.
cplx pochhammer(cplx mu, int n);

// Confluent hypergeometric M(mu, nu, z) by its power series.
cplx kummer_m(cplx mu, cplx nu, cplx z, const SeriesControl& ctl = {});

// Tricomi U(mu, nu, z) via the two-term Kummer combination; when nu sits
// within 1e-6 of an integer the combination degenerates and the value is
// taken as the average over nu +- 1e-6. For |z| > 30 the large-argument
// asymptotic series (truncated at its smallest term) is used instead, which
// is also the only usable route there in double precision.
cplx tricomi_u(cplx mu, cplx nu, cplx z);

// Gauss hypergeometric 2F1(a, b; c; z). Inside the unit disk (|z| <= 0.95)
// the defining series is used. For |z| >= 1.05 the 1/z connection formula is
// applied; on the branch cut z > 1 the logarithm is taken as
// log z - i pi. Non-positive-integer a or b short-circuits to the exact
// terminating polynomial. Nearly integer a - b (a removable degeneracy of
// the connection formula) is handled by averaging over a +- 1e-5.
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl = {});

// Modified Bessel K_nu(z) for Re z > 0 and complex order, from the real-line
// integral K_nu(z) = 1/2 \int e^{-z cosh t - nu t} dt truncated at +-T with
// e^{-Re z cosh T + |Re nu| T} < abs_tol * e^{-Re z}.
cplx bessel_k(cplx nu, cplx z, const QuadratureControl& ctl = {});

// Associated Laguerre polynomial L_n^lambda(x) by the three-term recurrence.
double laguerre_assoc(int n, double lambda, double x);

// Whittaker functions, principal branch of z^{mu+1/2}.
cplx whittaker_m(cplx kap, cplx mu, cplx z);
cplx whittaker_w(cplx kap, cplx mu, cplx z);

// Finite Bessel-K expansion of W_{n/2, mu}(y) valid for integer n >= 0:
//   y^{(n+1)/2}/sqrt(pi) ((1-n)/2 + mu)_n
//     Sum_{k=0}^{n} (-1)^{n+k} (2k-n+2mu) (-n)_{n-k}
//                   / ((n-k)! (k-n+2mu)_{n+1}) K_{-k+n/2-mu}(y/2).
cplx whittaker_w_bessel_sum(int n, cplx mu, double y);

}  // namespace morsewig

#endif
