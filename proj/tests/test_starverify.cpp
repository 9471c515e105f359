#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "morsewig/errors.hpp"
#include "morsewig/starverify.hpp"

using namespace morsewig;

static std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / double(n - 1));
    return v;
}

TEST_CASE("eigenvalue equations hold for closed-form elements") {
    // purely repulsive wall, diagonal
    {
        MorseSystem sys = MorseSystem::from_b(0.0);
        SpectralLabel lab = SpectralLabel::scattering(1.0);
        StarResidual r = star_residual(sys, lab, lab, 0.2, 0.8);
        CHECK(r.left < 1e-6);
        CHECK(r.right < 1e-6);
    }
    // off-diagonal element between two scattering energies
    {
        MorseSystem sys = MorseSystem::from_b(2.5);
        SpectralLabel L = SpectralLabel::scattering(0.7);
        SpectralLabel R = SpectralLabel::scattering(1.3);
        StarResidual r = star_residual(sys, L, R, -0.1, 0.6);
        CHECK(r.left < 1e-6);
        CHECK(r.right < 1e-6);
    }
    // bound level
    {
        MorseSystem sys = MorseSystem::from_b(4.0);
        SpectralLabel lab = SpectralLabel::bound(0);
        StarResidual r = star_residual(sys, lab, lab, 0.3, 0.5);
        CHECK(r.left < 1e-6);
        CHECK(r.right < 1e-6);
    }
}

TEST_CASE("negative control: perturbed energies fail loudly") {
    MorseSystem sys = MorseSystem::from_b(0.0);
    SpectralLabel lab = SpectralLabel::scattering(1.0);
    double E = energy_of(sys, lab);
    StarResidual r = star_residual_energies(sys, lab, lab, 0.2, 0.8, E + 0.1, E + 0.1);
    CHECK(r.left > 1e-2);
    CHECK(r.right > 1e-2);

    StarReport rep = star_report(sys, lab, lab, {0.0, 0.4}, {0.5, 1.0}, 0.05);
    CHECK(rep.max_residual > 1e-2);
    CHECK(rep.samples.size() == 4);
}

TEST_CASE("grid report aggregates cleanly") {
    MorseSystem sys = MorseSystem::from_b(2.5);
    SpectralLabel lab = SpectralLabel::scattering(1.0);
    StarReport rep = star_report(sys, lab, lab, {-0.2, 0.3}, {0.4, 1.1});
    CHECK(rep.max_residual < 1e-6);
    CHECK(rep.max_residual == std::max(rep.max_left, rep.max_right));
    double mx = 0.0;
    for (const StarSample& s : rep.samples)
        mx = std::max({mx, s.residual.left, s.residual.right});
    CHECK(mx == rep.max_residual);
}

TEST_CASE("normalization and phase-space averages") {
    MorseSystem sys = MorseSystem::from_b(4.0);
    SpectralLabel lab = SpectralLabel::bound(0);
    WignerField f = wigner_field(sys, lab, lab, linspace(-2.5, 3.0, 56),
                                 linspace(-4.0, 4.0, 41));
    CHECK_THROWS_AS(expectation(f, [](double, double) { return 1.0; }), FieldError);

    WignerField n = normalized(f);
    CHECK(n.normalized);
    CHECK(expectation(n, [](double, double) { return 1.0; }) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // the average of the Hamiltonian symbol recovers the eigenvalue
    double E0 = energy_of(sys, lab);
    double H = expectation(n, [&](double x, double p) {
        return p * p / (2.0 * sys.mass) + sys.potential(x);
    });
    CHECK(H == doctest::Approx(E0).epsilon(0.03));

    // a field that integrates to zero cannot be normalized
    WignerField z;
    z.x = {0.0, 1.0};
    z.p = {0.0, 1.0};
    z.values = {cplx(1.0), cplx(-1.0), cplx(-1.0), cplx(1.0)};
    z.err.assign(4, 0.0);
    z.ok.assign(4, 1);
    CHECK_THROWS_AS(normalized(z), FieldError);
}

TEST_CASE("stationary mixtures evolve with pure phases") {
    MorseSystem sys = MorseSystem::from_b(4.0);
    SpectralLabel b0 = SpectralLabel::bound(0), b1 = SpectralLabel::bound(1);
    std::vector<double> xs = linspace(-1.0, 2.0, 5), ps = linspace(-1.5, 1.5, 5);
    WignerField r00 = wigner_field(sys, b0, b0, xs, ps);
    WignerField r01 = wigner_field(sys, b0, b1, xs, ps);
    WignerField r10 = wigner_field(sys, b1, b0, xs, ps);
    WignerField r11 = wigner_field(sys, b1, b1, xs, ps);
    std::vector<std::vector<const WignerField*>> el = {{&r00, &r01}, {&r10, &r11}};
    std::vector<double> E = {energy_of(sys, b0), energy_of(sys, b1)};
    double c = 1.0 / std::sqrt(2.0);
    std::vector<cplx> coeff = {c, c};

    WignerField a = compose_stationary(coeff, E, el, 0.7, sys.hbar);
    // the density stays real along the evolution
    double scale = 0.0;
    for (const cplx& v : a.values) scale = std::max(scale, std::abs(v));
    for (const cplx& v : a.values) CHECK(std::abs(v.imag()) < 1e-7 * scale);

    // periodic with period 2 pi hbar / (E1 - E0)
    double T = 2.0 * 3.14159265358979323846 * sys.hbar / (E[1] - E[0]);
    WignerField b = compose_stationary(coeff, E, el, 0.7 + T, sys.hbar);
    for (size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-10 * scale);

    // a pure coefficient vector reduces to the single diagonal element
    WignerField pure = compose_stationary({1.0, 0.0}, E, el, 3.0, sys.hbar);
    for (size_t i = 0; i < pure.values.size(); ++i)
        CHECK(pure.values[i] == r00.values[i]);

    CHECK_THROWS_AS(compose_stationary({1.0}, E, el, 0.0, sys.hbar), FieldError);
}
