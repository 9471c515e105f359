#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "morsewig/errors.hpp"
#include "morsewig/model.hpp"

using namespace morsewig;

TEST_CASE("parameter validation") {
    MorseSystem s;
    CHECK_NOTHROW(s.validate());
    s.alpha = -1.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.alpha = 1.0;
    s.beta = -0.5;
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("shape parameter and coordinate maps") {
    MorseSystem s = MorseSystem::from_b(2.5);
    CHECK(s.b() == doctest::Approx(2.5).epsilon(1e-15));
    // u v^4 = 256 identically
    for (double x : {-1.0, -0.3, 0.0, 0.7, 2.0}) {
        double u = s.u_of_x(x), v = s.v_of_x(x);
        CHECK(u * v * v * v * v == doctest::Approx(256.0).epsilon(1e-12));
    }
    // u increasing, v decreasing
    CHECK(s.u_of_x(0.5) > s.u_of_x(0.4));
    CHECK(s.v_of_x(0.5) < s.v_of_x(0.4));

    MorseSystem g{2.0, 3.0, 0.7, 1.3, 0.9};
    CHECK(g.b() == doctest::Approx(0.9 * 1.3 / 0.7).epsilon(1e-15));
    double x = 0.21;
    CHECK(g.u_of_x(x) ==
          doctest::Approx(16.0 * std::exp(4 * 0.7 * x) * std::pow(0.7 / 1.3, 4))
              .epsilon(1e-13));
    CHECK(g.v_of_x(x) ==
          doctest::Approx(2.0 * 1.3 * std::exp(-0.7 * x) / 0.7).epsilon(1e-13));
}

TEST_CASE("potential shape") {
    MorseSystem s = MorseSystem::from_b(4.0);
    // minimum of e^{-2x} - beta e^{-x} at e^{-x} = beta/2, depth -beta^2/4 * hk/2m
    double xmin = -std::log(s.beta / 2.0);
    CHECK(s.potential(xmin) == doctest::Approx(-0.5 * s.beta * s.beta / 4.0).epsilon(1e-12));
    CHECK(s.potential(xmin - 0.1) > s.potential(xmin));
    CHECK(s.potential(xmin + 0.1) > s.potential(xmin));
    CHECK(s.potential(-3.0) > 1.0);           // repulsive wall
    CHECK(std::abs(s.potential(20.0)) < 1e-7); // flat tail
}

TEST_CASE("bound spectrum") {
    // strict inequality nu - b/2 + 1/2 < 0
    CHECK(bound_count(MorseSystem::from_b(0.0)) == 0);
    CHECK(bound_count(MorseSystem::from_b(1.0)) == 0);
    CHECK(bound_count(MorseSystem::from_b(1.2)) == 1);
    CHECK(bound_count(MorseSystem::from_b(2.5)) == 1);
    CHECK(bound_count(MorseSystem::from_b(3.0)) == 1);  // nu = 1 sits exactly on the edge
    CHECK(bound_count(MorseSystem::from_b(4.0)) == 2);
    CHECK(bound_count(MorseSystem::from_b(5.0)) == 2);

    MorseSystem s = MorseSystem::from_b(4.0);
    CHECK(energy_of(s, SpectralLabel::bound(0)) == doctest::Approx(-0.5 * 1.5 * 1.5).epsilon(1e-15));
    CHECK(energy_of(s, SpectralLabel::bound(1)) == doctest::Approx(-0.5 * 0.25).epsilon(1e-15));
    CHECK_THROWS_AS(energy_of(s, SpectralLabel::bound(2)), DomainError);
    CHECK(energy_of(s, SpectralLabel::scattering(1.3)) ==
          doctest::Approx(0.5 * 1.69).epsilon(1e-15));

    cplx k0 = bound_k(s, 0);
    CHECK(k0.real() == 0.0);
    CHECK(k0.imag() == doctest::Approx(-1.5).epsilon(1e-15));
    // continuation of the scattering energy to the bound k
    cplx e = 0.5 * k0 * k0;
    CHECK(e.real() == doctest::Approx(energy_of(s, SpectralLabel::bound(0))).epsilon(1e-14));
    CHECK(e.imag() == 0.0);
}

TEST_CASE("config round trip") {
    MorseSystem s{1.5, 2.0, 0.8, 1.1, 3.0};
    nlohmann::json j;
    to_json(j, s);
    MorseSystem r;
    from_json(j, r);
    CHECK(r.hbar == s.hbar);
    CHECK(r.mass == s.mass);
    CHECK(r.alpha == s.alpha);
    CHECK(r.kappa == s.kappa);
    CHECK(r.beta == s.beta);

    nlohmann::json partial = {{"alpha", 2.0}};
    MorseSystem d;
    from_json(partial, d);
    CHECK(d.alpha == 2.0);
    CHECK(d.hbar == 1.0);  // defaults fill the rest

    nlohmann::json bad = {{"mass", -1.0}};
    MorseSystem m;
    CHECK_THROWS_AS(from_json(bad, m), DomainError);
}

TEST_CASE("label invariants") {
    CHECK_THROWS_AS(SpectralLabel::scattering(0.0), DomainError);
    CHECK_THROWS_AS(SpectralLabel::scattering(-1.0), DomainError);
    CHECK_THROWS_AS(SpectralLabel::bound(-1), DomainError);
}
