#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include <specalg/oracle.hpp>

using namespace specalg;
using Catch::Approx;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// The particle-in-a-box configuration: the spherical-family potential
/// vanishes identically at j=1, g=0, leaving -u'' on (0, pi) with exact
/// eigenvalues k^2.
ModelParams box() { return ModelParams(Family::spherical_kepler, 1.0, 0.0); }

} // namespace

TEST_CASE("grid construction")
{
    const Grid g = Grid::make(0.0, 40.0, 100);
    CHECK(g.h == Approx(40.0 / 101.0));
    CHECK(g.x(0) == 0.0);
    CHECK(g.x(1) == Approx(g.h));
    CHECK(g.x(101) == Approx(40.0));

    CHECK_THROWS_AS(Grid::make(1.0, 1.0, 100), grid_error);
    CHECK_THROWS_AS(Grid::make(2.0, 1.0, 100), grid_error);
    CHECK_THROWS_AS(Grid::make(0.0, 1.0, 15), grid_error);
    CHECK_THROWS_AS(Grid::make(0.0, kInf, 100), grid_error);
    CHECK_THROWS_AS(Grid::make(std::nan(""), 1.0, 100), grid_error);
}

TEST_CASE("plain discretization structure")
{
    const ModelParams p(Family::flat_kepler, 1.5, 2.0);
    const Grid g = Grid::make(0.0, 40.0, 100);
    const Tridiagonal t = discretize(p, g);
    REQUIRE(t.size() == 100);
    REQUIRE(t.off.size() == 99);
    const double inv_h2 = 1.0 / (g.h * g.h);
    for (double o : t.off) {
        CHECK(o == -inv_h2);
    }
    for (int i : {1, 17, 50, 100}) {
        CHECK(t.diag[static_cast<std::size_t>(i - 1)]
              == Approx(2.0 * inv_h2 + potential(p, g.x(i))));
    }
}

TEST_CASE("plain discretization of the symmetric Rosen-Morse well at g=0")
{
    // V = -12 / cosh^2 is even, and the symmetric grid must see that.
    const ModelParams p(Family::rosen_morse, 4.0, 0.0);
    const Grid g = Grid::make(-10.0, 10.0, 99);
    const Tridiagonal t = discretize(p, g);
    REQUIRE(t.size() == 99);
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(t.diag[i] == Approx(t.diag[t.size() - 1 - i]).epsilon(1e-14));
    }
}

TEST_CASE("plain discretization rejects grids off the family domain")
{
    CHECK_THROWS_AS(discretize(ModelParams(Family::flat_kepler, 1.5, 2.0),
                               Grid::make(-2.0, -1.0, 50)),
                    grid_error);
    CHECK_THROWS_AS(discretize(ModelParams(Family::spherical_kepler, 1.5, 2.0),
                               Grid::make(0.0, 4.0, 50)),
                    grid_error);
}

TEST_CASE("box eigenvalues close to k^2 (plain scheme)")
{
    const Grid g = Grid::make(0.0, pi_v, 2000);
    const Tridiagonal t = discretize(box(), g);
    const std::vector<double> eigs = eigenvalues_below(t, 10.5, 10);
    REQUIRE(eigs.size() == 3);
    CHECK(eigs[0] == Approx(1.0).epsilon(1e-5));
    CHECK(eigs[1] == Approx(4.0).epsilon(1e-5));
    CHECK(eigs[2] == Approx(9.0).epsilon(1e-5));

    // The matrix eigenvalues are known in closed form; the lowest one is
    // (4/h^2) sin^2(h/2), strictly below 1.
    const double exact0 = 4.0 / (g.h * g.h) * std::pow(std::sin(g.h / 2.0), 2);
    CHECK(eigs[0] == Approx(exact0).epsilon(1e-9));
}

TEST_CASE("sturm counts on the box")
{
    const Tridiagonal t = discretize(box(), Grid::make(0.0, pi_v, 2000));
    CHECK(sturm_count(t, 0.0) == 0);
    CHECK(sturm_count(t, 4.5) == 2);
    CHECK(sturm_count(t, -kInf) == 0);
    CHECK(sturm_count(t, kInf) == 2000);

    SECTION("monotone in lambda")
    {
        long long prev = -1;
        for (double lam : {-5.0, 0.5, 2.0, 4.5, 9.5, 20.0, 1000.0}) {
            const long long c = sturm_count(t, lam);
            CHECK(c >= prev);
            prev = c;
        }
        CHECK(sturm_count(t, 2.0) == 1);
        CHECK(sturm_count(t, 9.5) == 3);
    }
}

TEST_CASE("eigenvalue extraction edge cases")
{
    const Tridiagonal t = discretize(box(), Grid::make(0.0, pi_v, 500));

    SECTION("k_max caps the list")
    {
        const std::vector<double> two = eigenvalues_below(t, 10.5, 2);
        REQUIRE(two.size() == 2);
        CHECK(two[0] == Approx(1.0).epsilon(1e-4));
        CHECK(two[1] == Approx(4.0).epsilon(1e-4));
    }
    SECTION("nothing below the ground state")
    {
        CHECK(eigenvalues_below(t, 0.5, 5).empty());
        CHECK(eigenvalues_below(t, -kInf, 5).empty());
    }
    SECTION("infinite threshold returns the lowest k_max outright")
    {
        const std::vector<double> eigs = eigenvalues_below(t, kInf, 3);
        REQUIRE(eigs.size() == 3);
        CHECK(eigs[2] == Approx(9.0).epsilon(1e-3));
    }
    SECTION("validation")
    {
        CHECK_THROWS_AS(eigenvalues_below(t, 10.0, 0), invalid_input_error);
        Tridiagonal bad;
        bad.diag.assign(5, 1.0);
        bad.off.assign(5, -1.0);
        CHECK_THROWS_AS(eigenvalues_below(bad, 10.0, 1), invalid_input_error);
        CHECK_THROWS_AS(sturm_count(bad, 0.0), invalid_input_error);
        Tridiagonal empty;
        CHECK_THROWS_AS(sturm_count(empty, 0.0), invalid_input_error);
    }
}

TEST_CASE("boundary-aware discretization")
{
    SECTION("works on the closed family domain, one unknown per cell")
    {
        const ModelParams p(Family::flat_kepler, 1.5, 2.0);
        const Tridiagonal t = discretize_adapted(p, Grid::make(0.0, 40.0, 100));
        CHECK(t.size() == 101);
        CHECK(t.off.size() == 100);
    }
    SECTION("rejects grids leaving the closed domain")
    {
        CHECK_THROWS_AS(discretize_adapted(ModelParams(Family::flat_kepler, 1.5, 2.0),
                                           Grid::make(-1.0, 40.0, 100)),
                        grid_error);
        CHECK_THROWS_AS(discretize_adapted(ModelParams(Family::spherical_kepler, 0.5, 1.0),
                                           Grid::make(0.0, 3.2, 100)),
                        grid_error);
    }
    SECTION("box eigenvalues again")
    {
        const Tridiagonal t = discretize_adapted(box(), Grid::make(0.0, pi_v, 2000));
        const std::vector<double> eigs = eigenvalues_below(t, 10.5, 10);
        REQUIRE(eigs.size() == 3);
        CHECK(eigs[0] == Approx(1.0).epsilon(1e-5));
        CHECK(eigs[1] == Approx(4.0).epsilon(1e-5));
        CHECK(eigs[2] == Approx(9.0).epsilon(1e-5));
    }
}

TEST_CASE("second-order convergence on the box ground state")
{
    // n -> 2n + 1 halves h exactly; the error against the continuum value 1
    // must fall by about 4.
    const Tridiagonal coarse = discretize(box(), Grid::make(0.0, pi_v, 500));
    const Tridiagonal fine = discretize(box(), Grid::make(0.0, pi_v, 1001));
    const double e_coarse = eigenvalues_below(coarse, 2.0, 1).at(0);
    const double e_fine = eigenvalues_below(fine, 2.0, 1).at(0);
    const double ratio = (e_coarse - 1.0) / (e_fine - 1.0);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("default verification grids")
{
    SECTION("flat grows with the outermost level's turning point")
    {
        const Grid g = default_grid(ModelParams(Family::flat_kepler, 1.5, 2.0), 3);
        CHECK(g.a == 0.0);
        CHECK(g.b == Approx(121.5));
        CHECK(g.n == 4000);
        const Grid tight = default_grid(ModelParams(Family::flat_kepler, 0.5, 1.0), 0);
        CHECK(tight.b == Approx(40.0));
    }
    SECTION("spherical is the full open interval")
    {
        const Grid g = default_grid(ModelParams(Family::spherical_kepler, 0.5, 1.0), 2);
        CHECK(g.a == 0.0);
        CHECK(g.b == Approx(pi_v));
        CHECK(g.n == 4000);
    }
    SECTION("hyperbolic sizes by the decay margin")
    {
        const Grid g = default_grid(ModelParams(Family::hyperbolic_kepler, 1.5, 9.0), 1);
        CHECK(g.b == Approx(40.0));
        CHECK(g.n == 6000);
        const Grid slow = default_grid(ModelParams(Family::hyperbolic_kepler, 2.9, 9.0), 0);
        CHECK(slow.b == Approx(12.0 * 2.9 / (9.0 / 2.9 - 2.9)));
    }
    SECTION("Rosen-Morse is symmetric and capped")
    {
        const Grid g = default_grid(ModelParams(Family::rosen_morse, 4.0, 1.0), 1);
        CHECK(g.a == Approx(-30.0));
        CHECK(g.b == Approx(30.0));
        CHECK(g.n == 6000);
        const Grid wide = default_grid(ModelParams(Family::rosen_morse, 2.05, 1.0), 0);
        CHECK(wide.b == Approx(200.0));
    }
    SECTION("window and input violations")
    {
        CHECK_THROWS_AS(default_grid(ModelParams(Family::flat_kepler, 1.5, 0.0), 0),
                        invalid_input_error);
        CHECK_THROWS_AS(default_grid(ModelParams(Family::hyperbolic_kepler, 2.5, 4.0), 0),
                        no_bound_state_error);
        CHECK_THROWS_AS(default_grid(ModelParams(Family::rosen_morse, 2.0, 1.0), 0),
                        no_bound_state_error);
        CHECK_THROWS_AS(default_grid(ModelParams(Family::flat_kepler, 1.5, 2.0), -1),
                        invalid_input_error);
    }
}

TEST_CASE("energies are insensitive to the domain size at fixed spacing")
{
    // Doubling L while keeping h (n -> 2n + 1) moves the ground energy by
    // far less than the level tolerance: truncation is not the error driver.
    const ModelParams p(Family::flat_kepler, 1.5, 2.0);
    const double e40 =
        eigenvalues_below(discretize_adapted(p, Grid::make(0.0, 40.0, 2000)), 0.0, 1).at(0);
    const double e80 =
        eigenvalues_below(discretize_adapted(p, Grid::make(0.0, 80.0, 4001)), 0.0, 1).at(0);
    CHECK(std::abs(e40 - e80) <= 1e-8);
}

TEST_CASE("verify: closed forms against the matrix oracle")
{
    SECTION("flat Kepler two levels")
    {
        const VerificationReport r = verify(ModelParams(Family::flat_kepler, 1.5, 2.0), 2);
        CHECK(r.pass);
        REQUIRE(r.levels.size() == 2);
        CHECK(r.levels[0].e_algebraic == Approx(-16.0 / 9.0));
        REQUIRE(r.levels[0].rel_delta);
        CHECK(*r.levels[0].rel_delta <= 1e-3);
        REQUIRE(r.levels[1].rel_delta);
        CHECK(*r.levels[1].rel_delta <= 1e-3);
        CHECK(r.grid.b == Approx(40.0));
        CHECK(r.richardson.assessed);
        CHECK(r.richardson.pass);
        CHECK(r.richardson.expected_ratio == Approx(4.0));
        // flat/spherical towers are infinite: no count check is possible
        CHECK_FALSE(r.count_pass.has_value());
        CHECK(r.note == "all checks passed");
    }
    SECTION("Rosen-Morse with a full count check")
    {
        const VerificationReport r = verify(ModelParams(Family::rosen_morse, 4.0, 1.0), 2);
        CHECK(r.pass);
        REQUIRE(r.count_pass.has_value());
        CHECK(*r.count_pass);
        REQUIRE(r.algebraic_count);
        CHECK(*r.algebraic_count == 2);
        REQUIRE(r.numeric_count);
        CHECK(*r.numeric_count == 2);
        CHECK(r.threshold == Approx(-2.0));
    }
    SECTION("custom grid and tolerance")
    {
        VerifyOptions opt;
        opt.grid = Grid::make(0.0, pi_v, 1200);
        const ModelParams p(Family::spherical_kepler, 0.5, 1.0);
        const VerificationReport ok = verify(p, 1, opt);
        CHECK(ok.pass);
        CHECK(ok.grid.n == 1200);

        opt.tol_rel = 1e-9;  // beyond what n=1200 can deliver
        const VerificationReport fail = verify(p, 1, opt);
        CHECK_FALSE(fail.pass);
        REQUIRE(fail.levels.size() == 1);
        CHECK_FALSE(fail.levels[0].pass);
        CHECK(fail.note.find("mismatch") != std::string::npos);
    }
    SECTION("refinement check can be disabled")
    {
        VerifyOptions opt;
        opt.grid = Grid::make(0.0, pi_v, 1200);
        opt.richardson = false;
        const VerificationReport r = verify(ModelParams(Family::spherical_kepler, 0.5, 1.0), 1,
                                            opt);
        CHECK(r.pass);
        CHECK_FALSE(r.richardson.assessed);
    }
    SECTION("extended mode")
    {
        VerifyOptions opt;
        opt.mode = SpectrumMode::extended;
        const VerificationReport r = verify(ModelParams(Family::flat_kepler, 1.7, 1.0), 2, opt);
        CHECK(r.pass);
        CHECK(r.mode_used == SpectrumMode::extended);
        CHECK(r.levels[0].e_algebraic == Approx(-1.0 / (1.7 * 1.7)));
    }
    SECTION("n_levels must be positive")
    {
        CHECK_THROWS_AS(verify(ModelParams(Family::flat_kepler, 1.5, 2.0), 0),
                        invalid_input_error);
    }
}

TEST_CASE("verify: excluded-region probe")
{
    VerifyOptions opt;
    opt.probe_excluded = true;

    SECTION("a label in the dead band has no numeric bound state")
    {
        const VerificationReport r = verify(ModelParams(Family::hyperbolic_kepler, 2.5, 4.0), 0,
                                            opt);
        CHECK(r.probe);
        CHECK(r.pass);
        REQUIRE(r.numeric_count);
        CHECK(*r.numeric_count == 0);
        CHECK(r.note.find("no numeric bound state") != std::string::npos);
    }
    SECTION("needs a finite continuum threshold")
    {
        CHECK_THROWS_AS(verify(ModelParams(Family::spherical_kepler, 2.0, 1.0), 0, opt),
                        invalid_input_error);
    }
}

TEST_CASE("verify: one-dimensional special representation")
{
    const VerificationReport r = verify(ModelParams(Family::hyperbolic_kepler, 0.2, 0.16), 1);
    CHECK(r.special_representation);
    CHECK(r.pass);
    REQUIRE(r.levels.size() == 1);
    CHECK(r.levels[0].e_algebraic == Approx(-0.68).epsilon(1e-13));
    REQUIRE(r.levels[0].rel_delta);
    CHECK(*r.levels[0].rel_delta <= 1e-3);
    REQUIRE(r.count_pass.has_value());
    CHECK(*r.count_pass);

    SECTION("the mirror root verifies identically")
    {
        const VerificationReport m = verify(ModelParams(Family::hyperbolic_kepler, 0.8, 0.16), 1);
        CHECK(m.special_representation);
        CHECK(m.pass);
        CHECK(m.levels[0].e_algebraic == Approx(-0.68).epsilon(1e-13));
    }
}
