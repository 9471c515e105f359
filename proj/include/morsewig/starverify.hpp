#ifndef MORSEWIG_STARVERIFY_HPP
#define MORSEWIG_STARVERIFY_HPP

#include <functional>
#include <vector>

#include "morsewig/mellin.hpp"
#include "morsewig/model.hpp"

namespace morsewig {

// Relative residuals of the two stationary eigenvalue equations acting on a
// matrix element rho_LR in translation form: exponentials of the potential
// become imaginary momentum shifts,
//   H * rho : (hbar^2/8m) dxx rho + (i hbar p/2m) dx rho
//             = (hbar^2 kappa^2/2m) [ e^{-2ax} rho(x, p - i hbar a)
//               - beta e^{-ax} rho(x, p - i hbar a/2) ]
//               + (p^2/2m - E_L) rho,
// and the mirror equation (p-shifts and the dx sign reversed) with E_R.
// Residuals are normalized by the largest participating term magnitude.
struct StarResidual {
    double left = 0.0;
    double right = 0.0;
};

// Energies default to energy_of(left/right); overriding them provides the
// negative control (a perturbed eigenvalue must make the residual blow up).
StarResidual star_residual(const MorseSystem& sys, const SpectralLabel& left,
                           const SpectralLabel& right, double x, double p,
                           const std::optional<ContourSpec>& spec = std::nullopt);

StarResidual star_residual_energies(const MorseSystem& sys,
                                    const SpectralLabel& left,
                                    const SpectralLabel& right, double x,
                                    double p, double EL, double ER,
                                    const std::optional<ContourSpec>& spec = std::nullopt);

struct StarSample {
    double x = 0.0, p = 0.0;
    StarResidual residual;
};

struct StarReport {
    std::vector<StarSample> samples;
    double max_left = 0.0, max_right = 0.0;
    double max_residual = 0.0;
};

StarReport star_report(const MorseSystem& sys, const SpectralLabel& left,
                       const SpectralLabel& right,
                       const std::vector<double>& xs,
                       const std::vector<double>& ps,
                       double energy_perturbation = 0.0,
                       const std::optional<ContourSpec>& spec = std::nullopt);

// Trapezoidal phase-space average of Q against a normalized field.
// Throws FieldError if the field is not marked normalized.
double expectation(const WignerField& field,
                   const std::function<double(double, double)>& Q);

// Rescale so the trapezoidal integral of Re(rho) over the grid equals 1.
WignerField normalized(const WignerField& field);

// Time-dependent mixture of stationary matrix elements:
//   rho(t) = sum_{j,l} c_j conj(c_l) e^{-i (E_j - E_l) t / hbar} rho_{jl}.
// `elements[j][l]` must all share the grid of elements[0][0].
WignerField compose_stationary(const std::vector<cplx>& coeff,
                               const std::vector<double>& energies,
                               const std::vector<std::vector<const WignerField*>>& elements,
                               double t, double hbar);

}  // namespace morsewig

#endif
