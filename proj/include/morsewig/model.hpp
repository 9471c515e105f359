#ifndef MORSEWIG_MODEL_HPP
#define MORSEWIG_MODEL_HPP

#include <complex>
#include <string>

#include "json.hpp"

namespace morsewig {

using cplx = std::complex<double>;

// Physical parameters of the exponential well
//   V(x) = (hbar^2 kappa^2 / 2m) (e^{-2 alpha x} - beta e^{-alpha x}).
// The dimensionless shape parameter b = beta*kappa/alpha controls the number
// of bound states; beta = 0 is the purely repulsive (Liouville) wall.
struct MorseSystem {
    double hbar = 1.0;
    double mass = 1.0;
    double alpha = 1.0;
    double kappa = 1.0;
    double beta = 0.0;

    double b() const { return beta * kappa / alpha; }

    // Throws DomainError unless hbar, mass, alpha, kappa > 0 and beta >= 0.
    void validate() const;

    double potential(double x) const;

    // u(x) = 16 e^{4 alpha x} alpha^4 / kappa^4  (Mellin conjugate variable)
    double u_of_x(double x) const;
    // v(x) = 2 kappa e^{-alpha x} / alpha        (wavefunction argument)
    double v_of_x(double x) const;

    // Unit-parameter system (hbar = m = alpha = kappa = 1) with beta chosen
    // so that the shape parameter equals b.
    static MorseSystem from_b(double b);
};

void to_json(nlohmann::json& j, const MorseSystem& sys);
void from_json(const nlohmann::json& j, MorseSystem& sys);

// Label for a stationary state: either a scattering state with real momentum
// parameter k > 0, or a bound level nu in {0, ..., bound_count-1}.
struct SpectralLabel {
    enum class Kind { Scattering, Bound };
    Kind kind = Kind::Scattering;
    double k = 1.0;  // scattering momentum parameter
    int nu = 0;      // bound level index

    static SpectralLabel scattering(double k);
    static SpectralLabel bound(int nu);
    bool is_bound() const { return kind == Kind::Bound; }
};

// Energy of the labelled state. Scattering: hbar^2 k^2 / 2m.
// Bound: -(hbar^2 alpha^2 / 2m) (nu - b/2 + 1/2)^2, valid only while
// nu - b/2 + 1/2 < 0 (strictly); otherwise throws DomainError.
double energy_of(const MorseSystem& sys, const SpectralLabel& label);

// Number of square-integrable bound levels: #{nu >= 0 : nu - b/2 + 1/2 < 0}.
int bound_count(const MorseSystem& sys);

// Imaginary momentum parameter of bound level nu:
// k_nu = i alpha (nu - b/2 + 1/2); energy_of is the analytic continuation
// of the scattering energy to this k.
cplx bound_k(const MorseSystem& sys, int nu);

}  // namespace morsewig

#endif
