#include "morsewig/model.hpp"

#include <cmath>

#include "morsewig/errors.hpp"

namespace morsewig {

void MorseSystem::validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(alpha > 0.0) || !(kappa > 0.0))
        throw DomainError("MorseSystem: hbar, mass, alpha, kappa must be positive");
    if (!(beta >= 0.0))
        throw DomainError("MorseSystem: beta must be non-negative");
}

double MorseSystem::potential(double x) const {
    double e = std::exp(-alpha * x);
    return (hbar * hbar * kappa * kappa / (2.0 * mass)) * (e * e - beta * e);
}

double MorseSystem::u_of_x(double x) const {
    double r = alpha / kappa;
    return 16.0 * std::exp(4.0 * alpha * x) * r * r * r * r;
}

double MorseSystem::v_of_x(double x) const {
    return 2.0 * kappa * std::exp(-alpha * x) / alpha;
}

MorseSystem MorseSystem::from_b(double b) {
    MorseSystem sys;
    sys.beta = b;  // with alpha = kappa = 1 the shape parameter equals beta
    sys.validate();
    return sys;
}

void to_json(nlohmann::json& j, const MorseSystem& sys) {
    j = nlohmann::json{{"hbar", sys.hbar},
                       {"mass", sys.mass},
                       {"alpha", sys.alpha},
                       {"kappa", sys.kappa},
                       {"beta", sys.beta}};
}

void from_json(const nlohmann::json& j, MorseSystem& sys) {
    sys.hbar = j.value("hbar", 1.0);
    sys.mass = j.value("mass", 1.0);
    sys.alpha = j.value("alpha", 1.0);
    sys.kappa = j.value("kappa", 1.0);
    sys.beta = j.value("beta", 0.0);
    sys.validate();
}

SpectralLabel SpectralLabel::scattering(double k) {
    if (!(k > 0.0)) throw DomainError("SpectralLabel: scattering k must be positive");
    SpectralLabel l;
    l.kind = Kind::Scattering;
    l.k = k;
    return l;
}

SpectralLabel SpectralLabel::bound(int nu) {
    if (nu < 0) throw DomainError("SpectralLabel: bound index must be non-negative");
    SpectralLabel l;
    l.kind = Kind::Bound;
    l.nu = nu;
    return l;
}

double energy_of(const MorseSystem& sys, const SpectralLabel& label) {
    if (label.kind == SpectralLabel::Kind::Scattering) {
        return sys.hbar * sys.hbar * label.k * label.k / (2.0 * sys.mass);
    }
    double s = label.nu - sys.b() / 2.0 + 0.5;
    if (!(s < 0.0))
        throw DomainError("energy_of: level index beyond the bound spectrum");
    return -(sys.hbar * sys.hbar * sys.alpha * sys.alpha / (2.0 * sys.mass)) * s * s;
}

int bound_count(const MorseSystem& sys) {
    // nu - b/2 + 1/2 < 0  <=>  nu < (b - 1)/2
    double lim = (sys.b() - 1.0) / 2.0;
    if (lim <= 0.0) return 0;
    int n = static_cast<int>(std::ceil(lim));
    // strict inequality: an exact half-integer boundary state is excluded
    if (static_cast<double>(n) == lim) return n;  // ceil(lim) == lim means nu = lim fails anyway
    return n;
}

cplx bound_k(const MorseSystem& sys, int nu) {
    double s = nu - sys.b() / 2.0 + 0.5;
    if (!(s < 0.0))
        throw DomainError("bound_k: level index beyond the bound spectrum");
    return cplx(0.0, sys.alpha * s);
}

}  // namespace morsewig
