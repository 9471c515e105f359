#ifndef MORSEWIG_MELLIN_HPP
#define MORSEWIG_MELLIN_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "morsewig/factors.hpp"
#include "morsewig/model.hpp"

namespace morsewig {

// Vertical-contour inverse Mellin transform
//   f(u) = (1/2 pi i) \int_{c-iT}^{c+iT} u^{-s} F(s) ds
// evaluated by composite Gauss-Legendre panels of width 1/2. In automatic
// mode (half_length = 0) symmetric panel pairs are appended until the last
// pair drops below rel_tol of the running peak; a stagnating tail at a small
// relative level is treated as the double-precision noise floor and the
// integration stops there rather than accumulating roundoff.
struct ContourSpec {
    double c = 0.0;              // abscissa; NaN/auto handled by callers
    double half_length = 0.0;    // fixed T; 0 selects automatic truncation
    int nodes_per_unit = 16;
    double rel_tol = 1e-10;
    double max_half_length = 40.0;
};

struct MellinResult {
    cplx value{};
    double tail = 0.0;           // last-pair magnitude relative to the peak
    double used_half_length = 0.0;
};

MellinResult inverse_mellin(const std::function<cplx(cplx)>& F, double u,
                            const ContourSpec& spec);

// Which closed-form factor to use for a scattering label.
enum class FactorForm { Auto, IntegerGammaSum };

// Product integrand for one matrix element: the two Mellin factors evaluated
// at s -/+ ip/(2 alpha hbar), with the s-plane pole inventory (ladder
// origins; complex p shifts the real parts by +/- Im p / (2 alpha hbar)).
struct MellinIntegrand {
    std::function<cplx(cplx)> F;
    double u = 0.0;
    std::vector<double> pole_origins;
    double leftmost_pole_re = 0.0;
};

MellinIntegrand assemble_integrand(const MorseSystem& sys,
                                   const SpectralLabel& left,
                                   const SpectralLabel& right, double x,
                                   cplx p, FactorForm form = FactorForm::Auto);

// Meijer G^{4,0}_{0,4}(z | a1..a4): contour integral of prod_j Gamma(a_j + s)
// against z^{-s}; all parameter ladders kept left of the contour.
cplx meijer_g4004(double z, const std::array<cplx, 4>& a,
                  const ContourSpec& spec = {});

struct PointResult {
    cplx value{};
    double err = 0.0;
};

// One stationary Wigner matrix element rho_LR(x, p) from the contour
// representation. p may be complex (needed by the translation-form
// eigenvalue equations). If spec is absent, the abscissa defaults to
// min(leftmost pole - 1/2, -1/4).
PointResult wigner_point(const MorseSystem& sys, const SpectralLabel& left,
                         const SpectralLabel& right, double x, cplx p,
                         const std::optional<ContourSpec>& spec = std::nullopt,
                         FactorForm form = FactorForm::Auto);

// x-derivative of given order via the integrand weight (-4 alpha s)^order.
PointResult wigner_x_derivative(const MorseSystem& sys,
                                const SpectralLabel& left,
                                const SpectralLabel& right, double x, cplx p,
                                int order,
                                const std::optional<ContourSpec>& spec = std::nullopt,
                                FactorForm form = FactorForm::Auto);

// Grid of matrix-element values. Failed points are recorded in `ok` and the
// corresponding value is zero; evaluation order is deterministic and the
// output is identical whether computed serially or with `threads` workers.
struct WignerField {
    std::vector<double> x;  // nx
    std::vector<double> p;  // np
    std::vector<cplx> values;  // row-major [ix * np + ip]
    std::vector<double> err;
    std::vector<uint8_t> ok;
    bool normalized = false;
    cplx at(int ix, int ip) const { return values[ix * p.size() + ip]; }
};

WignerField wigner_field(const MorseSystem& sys, const SpectralLabel& left,
                         const SpectralLabel& right,
                         const std::vector<double>& xs,
                         const std::vector<double>& ps,
                         const std::optional<ContourSpec>& spec = std::nullopt,
                         int threads = 0, FactorForm form = FactorForm::Auto);

}  // namespace morsewig

#endif
