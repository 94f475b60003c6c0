#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <specalg/model.hpp>

using namespace specalg;
using Catch::Approx;

TEST_CASE("family names round-trip")
{
    for (Family f : all_families) {
        const auto back = family_from_name(family_name(f));
        REQUIRE(back);
        CHECK(*back == f);
    }
    CHECK_FALSE(family_from_name("euclidean"));
}

TEST_CASE("parameter validation")
{
    CHECK_NOTHROW(ModelParams(Family::flat_kepler, 1.5, 2.0));
    CHECK_NOTHROW(ModelParams(Family::flat_kepler, 0.2, 0.0));
    CHECK_THROWS_AS(ModelParams(Family::flat_kepler, 1.0, -0.5), invalid_input_error);
    CHECK_THROWS_AS(ModelParams(Family::flat_kepler,
                                std::numeric_limits<double>::quiet_NaN(), 1.0),
                    invalid_input_error);
    CHECK_THROWS_AS(ModelParams(Family::flat_kepler, 1.0,
                                std::numeric_limits<double>::infinity()),
                    invalid_input_error);

    SECTION("exact backing is attached automatically")
    {
        const ModelParams p(Family::flat_kepler, 1.5, 2.0);
        REQUIRE(p.j_exact);
        CHECK(p.j_exact->twice() == 3);
        const ModelParams q(Family::flat_kepler, 1.7, 2.0);
        CHECK_FALSE(q.j_exact);
    }
    SECTION("bound-state computations demand g > 0")
    {
        const ModelParams p(Family::flat_kepler, 1.5, 0.0);
        CHECK_THROWS_AS(p.require_bound_state_g(), invalid_input_error);
    }
}

TEST_CASE("domains are open; singular endpoints are errors")
{
    const ModelParams flat(Family::flat_kepler, 1.5, 2.0);
    CHECK_THROWS_AS(potential(flat, 0.0), domain_violation_error);
    CHECK_THROWS_AS(potential(flat, -1.0), domain_violation_error);
    CHECK_NOTHROW(potential(flat, 1e-8));

    const ModelParams sph(Family::spherical_kepler, 1.5, 2.0);
    CHECK_THROWS_AS(potential(sph, 0.0), domain_violation_error);
    CHECK_THROWS_AS(potential(sph, pi_v), domain_violation_error);
    CHECK_NOTHROW(potential(sph, pi_v - 1e-8));

    const ModelParams rm(Family::rosen_morse, 4.0, 1.0);
    CHECK_NOTHROW(potential(rm, -50.0));
    CHECK_THROWS_AS(potential(rm, std::numeric_limits<double>::infinity()),
                    domain_violation_error);

    CHECK_THROWS_AS(superpotential_profile(Family::hyperbolic_kepler, 0.0),
                    domain_violation_error);
}

TEST_CASE("superpotential profiles")
{
    CHECK(superpotential_profile(Family::flat_kepler, 2.0) == Approx(0.5));
    CHECK(superpotential_profile(Family::spherical_kepler, pi_v / 4.0) == Approx(1.0));
    CHECK(superpotential_profile(Family::hyperbolic_kepler, 1.0)
          == Approx(std::cosh(1.0) / std::sinh(1.0)));
    CHECK(superpotential_profile(Family::rosen_morse, 0.0) == Approx(0.0).margin(1e-15));
    CHECK(superpotential_profile(Family::rosen_morse, 100.0) == Approx(1.0));
}

TEST_CASE("potential values")
{
    // flat, j=3/2, g=2 at x=1: (3/4)/1 - 4/1 = -3.25
    CHECK(potential(ModelParams(Family::flat_kepler, 1.5, 2.0), 1.0) == Approx(-3.25));

    // spherical, j=1/2, g=1 at x=pi/2: -1/4 csc^2 - 2 cot = -0.25
    CHECK(potential(ModelParams(Family::spherical_kepler, 0.5, 1.0), pi_v / 2.0)
          == Approx(-0.25));

    // hyperbolic, j=3/2, g=9 at x=1: 0.75/sinh^2(1) - 18 coth(1)
    const double sh = std::sinh(1.0);
    const double expect_hyp = 0.75 / (sh * sh) - 18.0 * std::cosh(1.0) / sh;
    CHECK(potential(ModelParams(Family::hyperbolic_kepler, 1.5, 9.0), 1.0)
          == Approx(expect_hyp));
    CHECK(expect_hyp == Approx(-23.0915883858297));

    // Rosen-Morse, j=4, g=1 at x=0: -12/1 - 0 = -12
    CHECK(potential(ModelParams(Family::rosen_morse, 4.0, 1.0), 0.0) == Approx(-12.0));
}

TEST_CASE("potential is invariant under j -> 1-j")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> jdist(-3.0, 4.0);
    std::uniform_real_distribution<double> gdist(0.0, 10.0);
    for (Family f : all_families) {
        for (int trial = 0; trial < 50; ++trial) {
            const double j = jdist(rng);
            const double g = gdist(rng);
            const double x = (f == Family::spherical_kepler) ? 0.3 + 2.5 * trial / 50.0
                             : (f == Family::rosen_morse)    ? -3.0 + 6.0 * trial / 50.0
                                                             : 0.2 + 3.0 * trial / 50.0;
            const double v1 = potential(ModelParams(f, j, g), x);
            const double v2 = potential(ModelParams(f, 1.0 - j, g), x);
            CHECK(v1 == Approx(v2).epsilon(1e-12).margin(1e-12));
        }
    }
}

TEST_CASE("asymptotics of the potentials")
{
    // flat -> 0 from below; hyperbolic -> -2g; Rosen-Morse -> -2g (right), +2g (left)
    CHECK(potential(ModelParams(Family::flat_kepler, 1.5, 2.0), 1e6) == Approx(0.0).margin(1e-5));
    CHECK(potential(ModelParams(Family::hyperbolic_kepler, 1.5, 9.0), 40.0)
          == Approx(-18.0).epsilon(1e-12));
    CHECK(potential(ModelParams(Family::rosen_morse, 4.0, 1.0), 40.0)
          == Approx(-2.0).epsilon(1e-12));
    CHECK(potential(ModelParams(Family::rosen_morse, 4.0, 1.0), -40.0)
          == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("factorization energies")
{
    // flat: -g^2/j^2
    CHECK(factorization_energy(ModelParams(Family::flat_kepler, 1.5, 2.0))
          == Approx(-16.0 / 9.0));
    // spherical: j^2 - g^2/j^2
    CHECK(factorization_energy(ModelParams(Family::spherical_kepler, 0.5, 1.0))
          == Approx(0.25 - 4.0));
    // hyperbolic and Rosen-Morse share -j^2 - g^2/j^2
    for (double j : {0.7, 1.5, 2.5, 4.0, -1.3}) {
        for (double g : {0.16, 1.0, 9.0}) {
            CHECK(factorization_energy(ModelParams(Family::hyperbolic_kepler, j, g))
                  == Approx(factorization_energy(ModelParams(Family::rosen_morse, j, g)))
                         .epsilon(1e-15));
        }
    }
    CHECK(factorization_energy(ModelParams(Family::hyperbolic_kepler, 1.5, 9.0))
          == Approx(-2.25 - 36.0));

    CHECK_THROWS_AS(factorization_energy(ModelParams(Family::flat_kepler, 0.0, 1.0)),
                    singular_parameter_error);
}

TEST_CASE("commutator constants")
{
    // flat, j=3/2, g=2: -16/9 + 16 = 128/9
    CHECK(commutator_constant(ModelParams(Family::flat_kepler, 1.5, 2.0))
          == Approx(128.0 / 9.0));
    // the constant is eps(j) - eps(j-1) in every family: lowering then raising
    // sees the Hamiltonian through the factorization one label down
    for (Family f : all_families) {
        for (double j : {0.6, 1.5, 2.3, 4.0}) {
            const ModelParams p(f, j, 1.7);
            const ModelParams down(f, j - 1.0, 1.7);
            CHECK(commutator_constant(p)
                  == Approx(factorization_energy(p) - factorization_energy(down))
                         .epsilon(1e-12).margin(1e-12));
        }
    }
    CHECK_THROWS_AS(commutator_constant(ModelParams(Family::spherical_kepler, 0.0, 1.0)),
                    singular_parameter_error);
    CHECK_THROWS_AS(commutator_constant(ModelParams(Family::spherical_kepler, 1.0, 1.0)),
                    singular_parameter_error);
}

TEST_CASE("g = 0 reduces the Kepler tails to the free cases")
{
    // With g = 0 the flat potential is the pure centrifugal barrier.
    const ModelParams p(Family::flat_kepler, 1.5, 0.0);
    CHECK(potential(p, 2.0) == Approx(0.75 / 4.0));
    // and the spherical one the Poschl-Teller-like csc^2 well.
    const ModelParams q(Family::spherical_kepler, 2.0, 0.0);
    CHECK(potential(q, pi_v / 2.0) == Approx(2.0));
}

TEST_CASE("continuum thresholds")
{
    CHECK(continuum_threshold(ModelParams(Family::flat_kepler, 1.5, 2.0)) == 0.0);
    CHECK(std::isinf(continuum_threshold(ModelParams(Family::spherical_kepler, 0.5, 1.0))));
    CHECK(continuum_threshold(ModelParams(Family::hyperbolic_kepler, 1.5, 9.0)) == -18.0);
    CHECK(continuum_threshold(ModelParams(Family::rosen_morse, 4.0, 1.0)) == -2.0);
}
