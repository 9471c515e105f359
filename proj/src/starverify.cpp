#include "morsewig/starverify.hpp"

#include <algorithm>
#include <cmath>

#include "morsewig/errors.hpp"

namespace morsewig {

StarResidual star_residual_energies(const MorseSystem& sys,
                                    const SpectralLabel& left,
                                    const SpectralLabel& right, double x,
                                    double p, double EL, double ER,
                                    const std::optional<ContourSpec>& spec) {
    double hb = sys.hbar, m = sys.mass, a = sys.alpha, kp = sys.kappa;
    // Verification mode may use the exact gamma-sum factors at integer b:
    // their roundoff floor is ~1e-15 instead of the ~1e-12 carried by the
    // hypergeometric form, which matters at strongly cancelling grid corners.
    FactorForm form = FactorForm::Auto;
    double b = sys.b();
    if (!left.is_bound() && !right.is_bound() &&
        std::abs(b - std::lround(b)) < 1e-9)
        form = FactorForm::IntegerGammaSum;
    auto rho = [&](cplx pp) {
        return wigner_point(sys, left, right, x, pp, spec, form).value;
    };
    cplx r0 = rho(p);
    cplx rx = wigner_x_derivative(sys, left, right, x, p, 1, spec, form).value;
    cplx rxx = wigner_x_derivative(sys, left, right, x, p, 2, spec, form).value;
    double vcoef = hb * hb * kp * kp / (2.0 * m);

    auto one_side = [&](double sgn, double E) {
        // sgn = +1: H acting from the left; sgn = -1: from the right
        cplx lhs = hb * hb / (8.0 * m) * rxx + sgn * cplx(0, 1) * hb * p / (2.0 * m) * rx;
        cplx t_deep = vcoef * std::exp(-2.0 * a * x) * rho(cplx(p, -sgn * hb * a));
        cplx t_mid = sys.beta * vcoef * std::exp(-a * x) * rho(cplx(p, -sgn * hb * a / 2.0));
        cplx t_en = (p * p / (2.0 * m) - E) * r0;
        cplx rhs = t_deep - t_mid + t_en;
        double scale = std::max({std::abs(hb * hb / (8.0 * m) * rxx),
                                 std::abs(hb * p / (2.0 * m) * rx),
                                 std::abs(t_deep), std::abs(t_mid),
                                 std::abs(t_en)});
        if (scale == 0.0) return 0.0;
        return std::abs(lhs - rhs) / scale;
    };
    return {one_side(+1.0, EL), one_side(-1.0, ER)};
}

StarResidual star_residual(const MorseSystem& sys, const SpectralLabel& left,
                           const SpectralLabel& right, double x, double p,
                           const std::optional<ContourSpec>& spec) {
    return star_residual_energies(sys, left, right, x, p,
                                  energy_of(sys, left), energy_of(sys, right),
                                  spec);
}

StarReport star_report(const MorseSystem& sys, const SpectralLabel& left,
                       const SpectralLabel& right,
                       const std::vector<double>& xs,
                       const std::vector<double>& ps,
                       double energy_perturbation,
                       const std::optional<ContourSpec>& spec) {
    StarReport rep;
    double EL = energy_of(sys, left) + energy_perturbation;
    double ER = energy_of(sys, right) + energy_perturbation;
    for (double x : xs) {
        for (double p : ps) {
            StarSample s;
            s.x = x;
            s.p = p;
            s.residual = star_residual_energies(sys, left, right, x, p, EL, ER, spec);
            rep.max_left = std::max(rep.max_left, s.residual.left);
            rep.max_right = std::max(rep.max_right, s.residual.right);
            rep.samples.push_back(s);
        }
    }
    rep.max_residual = std::max(rep.max_left, rep.max_right);
    return rep;
}

// trapezoid weights for a (possibly non-uniform) 1-d grid
static std::vector<double> trap_weights(const std::vector<double>& g) {
    size_t n = g.size();
    std::vector<double> w(n, 0.0);
    if (n < 2) throw FieldError("expectation: grid needs at least two points");
    for (size_t i = 0; i + 1 < n; ++i) {
        double h = 0.5 * (g[i + 1] - g[i]);
        w[i] += h;
        w[i + 1] += h;
    }
    return w;
}

static double trap_integral(const WignerField& f,
                            const std::function<double(double, double)>& Q) {
    auto wx = trap_weights(f.x);
    auto wp = trap_weights(f.p);
    double tot = 0.0;
    for (size_t i = 0; i < f.x.size(); ++i)
        for (size_t j = 0; j < f.p.size(); ++j)
            tot += wx[i] * wp[j] * Q(f.x[i], f.p[j]) *
                   f.values[i * f.p.size() + j].real();
    return tot;
}

double expectation(const WignerField& field,
                   const std::function<double(double, double)>& Q) {
    if (!field.normalized)
        throw FieldError("expectation: field must be normalized first");
    return trap_integral(field, Q);
}

WignerField normalized(const WignerField& field) {
    double z = trap_integral(field, [](double, double) { return 1.0; });
    if (std::abs(z) < 1e-300)
        throw FieldError("normalized: field integrates to zero");
    WignerField out = field;
    for (auto& v : out.values) v /= z;
    for (auto& e : out.err) e /= std::abs(z);
    out.normalized = true;
    return out;
}

WignerField compose_stationary(const std::vector<cplx>& coeff,
                               const std::vector<double>& energies,
                               const std::vector<std::vector<const WignerField*>>& elements,
                               double t, double hbar) {
    size_t n = coeff.size();
    if (energies.size() != n || elements.size() != n)
        throw FieldError("compose_stationary: size mismatch");
    const WignerField* base = elements.at(0).at(0);
    WignerField out;
    out.x = base->x;
    out.p = base->p;
    out.values.assign(base->values.size(), cplx(0.0));
    out.err.assign(base->values.size(), 0.0);
    out.ok.assign(base->values.size(), 1);
    for (size_t j = 0; j < n; ++j) {
        if (elements[j].size() != n)
            throw FieldError("compose_stationary: ragged element matrix");
        for (size_t l = 0; l < n; ++l) {
            const WignerField* e = elements[j][l];
            if (e->values.size() != out.values.size())
                throw FieldError("compose_stationary: grid mismatch");
            cplx phase = coeff[j] * std::conj(coeff[l]) *
                         std::exp(cplx(0.0, -(energies[j] - energies[l]) * t / hbar));
            for (size_t i = 0; i < out.values.size(); ++i) {
                out.values[i] += phase * e->values[i];
                out.err[i] += std::abs(phase) * e->err[i];
                if (!e->ok[i]) out.ok[i] = 0;
            }
        }
    }
    return out;
}

}  // namespace morsewig
