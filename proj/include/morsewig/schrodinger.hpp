#ifndef MORSEWIG_SCHRODINGER_HPP
#define MORSEWIG_SCHRODINGER_HPP

#include <functional>

#include "morsewig/model.hpp"

namespace morsewig {

// Scattering eigenfunction at energy hbar^2 k^2/2m (unnormalized):
//   psi_k(x) = e^{alpha x/2} W_{b/2, ik/alpha}( v(x) ),  v = 2 kappa e^{-ax}/a.
cplx psi_scattering(const MorseSystem& sys, double k, double x);

// The same state written as the two-term Kummer (incoming/outgoing)
// combination; equals psi_scattering exactly by the Whittaker connection
// formula. Numerically useful only at moderate v: the two terms cancel
// against a factor e^{v} deep inside the wall.
cplx psi_scattering_kummer(const MorseSystem& sys, double k, double x);

// Normalized bound eigenfunction (real, decaying on both sides):
//   psi_nu(x) ∝ e^{-v/2} (v/2)^{b/2 - nu - 1/2} L_nu^{b-2nu-1}(v).
double psi_bound(const MorseSystem& sys, int nu, double x);

// L2 norm of the unnormalized bound form above (used by psi_bound).
double psi_bound_norm(const MorseSystem& sys, int nu);

// Relative residual of the stationary wave equation at x, with the second
// derivative from a 5-point finite-difference stencil of step h.
double schrodinger_residual(const MorseSystem& sys,
                            const std::function<cplx(double)>& psi, double E,
                            double x, double h = 5e-3);

// Direct transform rho_LR(x,p) = \int e^{-iyp} psiL(x + hbar y/2)
// conj(psiR(x - hbar y/2)) dy. The half-length grows geometrically, with a
// cosine taper on the outer quarter of the window, until two successive
// windows agree to rel_tol.
cplx wigner_transform_numeric(const MorseSystem& sys,
                              const std::function<cplx(double)>& psiL,
                              const std::function<cplx(double)>& psiR,
                              double x, double p, double rel_tol = 1e-8);

struct SeriesResult {
    cplx value{};
    int shells = 0;          // anti-diagonal shells m+n summed
    double last_shell = 0.0; // magnitude of the final shell relative to the sum
};

// Four-block double series for a scattering matrix element, with every
// Bessel kernel replaced by its window-truncated integral
//   K^T_A(v) = 1/2 \int_{-T}^{T} e^{-v cosh t - A t} dt.
// The untruncated series diverges term-by-term; with the fixed window the
// shells converge absolutely and tend to the transform as T grows. T is
// chosen from the requested tolerance as acosh(1 + (log(1/tol)+4)/v).
SeriesResult wigner_series(const MorseSystem& sys, double x, double p,
                           double kL, double kR, double tol = 1e-7);

// Closed form for a diagonal bound matrix element: a finite double sum of
// Bessel K of complex order against powers of v, with overall prefactor
// v^{b - 2 nu - 1}. (Unnormalized; proportional to the transform of psi_nu.)
cplx bound_wigner_closed(const MorseSystem& sys, int nu, double x, double p);

}  // namespace morsewig

#endif
