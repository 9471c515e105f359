#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "morsewig/errors.hpp"
#include "morsewig/mellin.hpp"
#include "morsewig/specfun.hpp"

using namespace morsewig;

static double relerr(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

TEST_CASE("inverse Mellin: classical transform pairs") {
    // Gamma(s) against u^{-s} recovers e^{-u}
    ContourSpec spec;
    spec.c = 1.0;
    for (double u : {0.7, 2.3}) {
        MellinResult r = inverse_mellin([](cplx s) { return gamma_c(s); }, u, spec);
        CHECK(relerr(r.value, std::exp(-u)) < 1e-10);
        CHECK(std::abs(r.value.imag()) < 1e-12);
    }
    // fixed-window mode reproduces the automatic result
    ContourSpec fixed = spec;
    fixed.half_length = 25.0;
    MellinResult rf = inverse_mellin([](cplx s) { return gamma_c(s); }, 0.7, fixed);
    CHECK(relerr(rf.value, std::exp(-0.7)) < 1e-9);

    // Gamma(s) Gamma(s - nu) at u = (z/2)^2 gives 2 (z/2)^{-nu} K_nu(z)
    double nu = 0.3, z = 1.7;
    ContourSpec spec2;
    spec2.c = 1.5;
    MellinResult r2 = inverse_mellin(
        [&](cplx s) { return gamma_c(s) * gamma_c(s - nu); }, 0.25 * z * z, spec2);
    cplx want = 2.0 * std::pow(0.5 * z, -nu) * bessel_k(nu, z);
    CHECK(relerr(r2.value, want) < 1e-9);

    CHECK_THROWS_AS(inverse_mellin([](cplx s) { return gamma_c(s); }, -1.0, spec),
                    DomainError);
}

TEST_CASE("Meijer G shift identity") {
    // G(z | a + mu) = z^mu G(z | a)
    std::array<cplx, 4> a = {cplx(0.2, 0.5), cplx(0.2, -0.5), cplx(0.35, 0.1),
                             cplx(0.6, -0.3)};
    double mu = 0.3, z = 1.8;
    std::array<cplx, 4> ash = a;
    for (auto& v : ash) v += mu;
    cplx lhs = meijer_g4004(z, ash);
    cplx rhs = std::pow(z, mu) * meijer_g4004(z, a);
    CHECK(relerr(lhs, rhs) < 1e-8);
    CHECK_THROWS_AS(meijer_g4004(-2.0, a), DomainError);
}

TEST_CASE("pure-exponential diagonal equals a Meijer G value") {
    // with b = 0 the one-term gamma-sum factors make the contour integrand
    // exactly a product of four gammas; after s -> -s it is G^{4,0}_{0,4}(1/u)
    // with parameters i(+-p +- k)/2 (unit constants)
    MorseSystem sys = MorseSystem::from_b(0.0);
    double k = 1.1;
    SpectralLabel lab = SpectralLabel::scattering(k);
    for (auto [x, p] : {std::pair{0.3, 0.7}, std::pair{-0.4, 1.6}}) {
        PointResult lhs =
            wigner_point(sys, lab, lab, x, p, std::nullopt, FactorForm::IntegerGammaSum);
        std::array<cplx, 4> a = {cplx(0.0, 0.5 * (p + k)), cplx(0.0, 0.5 * (p - k)),
                                 cplx(0.0, 0.5 * (k - p)), cplx(0.0, 0.5 * (-p - k))};
        cplx rhs = meijer_g4004(1.0 / sys.u_of_x(x), a);
        CHECK(relerr(lhs.value, rhs) < 1e-7);
        // the diagonal element is real
        CHECK(std::abs(lhs.value.imag()) < 1e-9 * std::abs(lhs.value));
    }
}

TEST_CASE("factor-form consistency up to a constant") {
    // the general-b and gamma-sum factor presentations differ by a
    // t-independent factor per side, so the two point values keep a fixed ratio
    MorseSystem sys = MorseSystem::from_b(0.0);
    SpectralLabel lab = SpectralLabel::scattering(0.9);
    cplx r0;
    bool first = true;
    for (double x : {-0.3, 0.2, 0.6}) {
        for (double p : {0.4, 1.3}) {
            cplx va = wigner_point(sys, lab, lab, x, p).value;
            cplx vi = wigner_point(sys, lab, lab, x, p, std::nullopt,
                                   FactorForm::IntegerGammaSum)
                          .value;
            cplx r = va / vi;
            if (first) {
                r0 = r;
                first = false;
            }
            CHECK(relerr(r, r0) < 1e-7);
        }
    }
}

TEST_CASE("hermiticity of matrix elements") {
    // rho_LR(x, p) = conj(rho_RL(x, p)) for real p
    MorseSystem sys = MorseSystem::from_b(2.5);
    SpectralLabel L = SpectralLabel::scattering(0.7);
    SpectralLabel R = SpectralLabel::scattering(1.3);
    for (auto [x, p] : {std::pair{0.1, 0.8}, std::pair{-0.5, -1.2}, std::pair{0.6, 0.0}}) {
        cplx lr = wigner_point(sys, L, R, x, p).value;
        cplx rl = wigner_point(sys, R, L, x, p).value;
        CHECK(relerr(lr, std::conj(rl)) < 1e-7);
    }
}

TEST_CASE("contour hygiene: offset independence and node doubling") {
    MorseSystem sys = MorseSystem::from_b(2.5);
    SpectralLabel lab = SpectralLabel::scattering(1.0);
    double x = 0.2, p = 0.9;
    cplx base = wigner_point(sys, lab, lab, x, p).value;

    MellinIntegrand ig = assemble_integrand(sys, lab, lab, x, p);
    ContourSpec off;
    off.c = ig.leftmost_pole_re - 1.2;
    cplx shifted = wigner_point(sys, lab, lab, x, p, off).value;
    CHECK(relerr(shifted, base) < 1e-8);

    ContourSpec dense;
    dense.c = ig.leftmost_pole_re - 0.5;
    dense.nodes_per_unit = 32;
    cplx fine = wigner_point(sys, lab, lab, x, p, dense).value;
    CHECK(relerr(fine, base) < 1e-9);

    // an abscissa that would touch the pole ladders is replaced by the default
    ContourSpec bad;
    bad.c = ig.leftmost_pole_re + 0.25;
    cplx guarded = wigner_point(sys, lab, lab, x, p, bad).value;
    CHECK(relerr(guarded, base) < 1e-8);
}

TEST_CASE("analytic x-derivative vs finite differences") {
    MorseSystem sys = MorseSystem::from_b(2.5);
    SpectralLabel L = SpectralLabel::scattering(0.7);
    SpectralLabel R = SpectralLabel::scattering(1.3);
    double x = 0.15, p = 0.6, h = 0.01;
    auto f = [&](double xx) { return wigner_point(sys, L, R, xx, p).value; };
    cplx d1 = wigner_x_derivative(sys, L, R, x, p, 1).value;
    cplx fd1 = (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) /
               (12.0 * h);
    CHECK(relerr(d1, fd1) < 1e-5);
    cplx d2 = wigner_x_derivative(sys, L, R, x, p, 2).value;
    cplx fd2 = (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) -
                f(x - 2 * h)) /
               (12.0 * h * h);
    CHECK(relerr(d2, fd2) < 1e-5);
}

TEST_CASE("complex momentum shifts the pole inventory") {
    MorseSystem sys = MorseSystem::from_b(2.5);
    SpectralLabel lab = SpectralLabel::scattering(1.0);
    // Im p = -1: the two ladders split by +-1/2 in Re s
    MellinIntegrand ig = assemble_integrand(sys, lab, lab, 0.0, cplx(0.6, -1.0));
    CHECK(ig.leftmost_pole_re == doctest::Approx(-0.5).epsilon(1e-12));
    double mx = -1e300;
    for (double o : ig.pole_origins) mx = std::max(mx, o);
    CHECK(mx == doctest::Approx(0.5).epsilon(1e-12));
    // real p: ladders coincide at the origin
    MellinIntegrand ig0 = assemble_integrand(sys, lab, lab, 0.0, 0.6);
    CHECK(ig0.leftmost_pole_re == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("field evaluation: determinism and failure mask") {
    MorseSystem sys = MorseSystem::from_b(2.5);
    SpectralLabel lab = SpectralLabel::scattering(1.0);
    std::vector<double> xs = {-0.4, 0.0, 0.3, 0.7};
    std::vector<double> ps = {-1.0, 0.2, 1.1};
    WignerField serial = wigner_field(sys, lab, lab, xs, ps, std::nullopt, 1);
    WignerField parallel = wigner_field(sys, lab, lab, xs, ps, std::nullopt, 4);
    REQUIRE(serial.values.size() == parallel.values.size());
    for (size_t i = 0; i < serial.values.size(); ++i) {
        CHECK(serial.values[i] == parallel.values[i]);  // bit identical
        CHECK(serial.ok[i] == 1);
    }
    CHECK(serial.at(1, 1) == serial.values[1 * ps.size() + 1]);

    // an impossible contour budget marks every point failed instead of throwing
    ContourSpec tiny;
    tiny.c = -2.0;
    tiny.rel_tol = 1e-14;
    tiny.max_half_length = 1.0;
    WignerField broken = wigner_field(sys, lab, lab, {0.0}, {0.5}, tiny, 1);
    CHECK(broken.ok[0] == 0);
    CHECK(broken.values[0] == cplx(0.0));

    CHECK_THROWS_AS(wigner_field(sys, lab, lab, {}, ps), FieldError);
}
