#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "half_integer.hpp"

namespace specalg {

/// The four shape-invariant one-body problems sharing the ladder structure:
/// Coulomb-like wells on flat, spherical and hyperbolic geometry, and the
/// Rosen-Morse well on the line.
enum class Family {
    flat_kepler,
    spherical_kepler,
    hyperbolic_kepler,
    rosen_morse,
};

inline constexpr std::array<Family, 4> all_families = {
    Family::flat_kepler,
    Family::spherical_kepler,
    Family::hyperbolic_kepler,
    Family::rosen_morse,
};

inline std::string_view family_name(Family f)
{
    switch (f) {
        case Family::flat_kepler: return "flat";
        case Family::spherical_kepler: return "spherical";
        case Family::hyperbolic_kepler: return "hyperbolic";
        case Family::rosen_morse: return "rosen-morse";
    }
    return "?";
}

inline std::optional<Family> family_from_name(std::string_view s)
{
    for (Family f : all_families) {
        if (s == family_name(f)) {
            return f;
        }
    }
    return std::nullopt;
}

/// Open interval (lo, hi); infinite endpoints allowed.
struct Interval {
    double lo;
    double hi;

    bool contains(double x) const { return x > lo && x < hi; }
};

inline constexpr double pi_v = 3.14159265358979323846264338327950288;

/// The natural open domain on which the family's potential is smooth.
inline Interval family_domain(Family f)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (f) {
        case Family::flat_kepler: return {0.0, inf};
        case Family::spherical_kepler: return {0.0, pi_v};
        case Family::hyperbolic_kepler: return {0.0, inf};
        case Family::rosen_morse: return {-inf, inf};
    }
    return {0.0, 0.0};
}

inline std::string_view family_domain_str(Family f)
{
    switch (f) {
        case Family::flat_kepler: return "x > 0";
        case Family::spherical_kepler: return "0 < x < pi";
        case Family::hyperbolic_kepler: return "x > 0";
        case Family::rosen_morse: return "all real x";
    }
    return "?";
}

namespace detail {

inline void check_domain(Family f, double x, const char* what)
{
    if (!std::isfinite(x) || !family_domain(f).contains(x)) {
        std::ostringstream os;
        os << what << ": x = " << x << " is outside the " << family_name(f)
           << " domain (" << family_domain_str(f) << ")";
        throw domain_violation_error(os.str());
    }
}

} // namespace detail

/// Parameter pair (j, g) for one family.
///
/// j is stored as a real with an optional exact half-integer backing; the
/// backing is attached automatically whenever the double is bit-exactly a
/// half-integer.  Operations that demand genuine quantization (strict-mode
/// spectra, finite towers) require the backing with an odd doubled value.
///
/// g >= 0 is enforced at construction; negative couplings describe a
/// different physical problem and are rejected rather than remapped.
/// Bound-state computations additionally require g > 0.
struct ModelParams {
    Family family;
    double j;
    double g;
    std::optional<HalfInteger> j_exact;

    ModelParams(Family family_, double j_, double g_)
        : family(family_)
        , j(j_)
        , g(g_)
        , j_exact(HalfInteger::from_double(j_))
    {
        validate();
    }

    ModelParams(Family family_, HalfInteger j_, double g_)
        : family(family_)
        , j(j_.value())
        , g(g_)
        , j_exact(j_)
    {
        validate();
    }

    /// Throws unless g > 0 (required by every bound-state computation).
    void require_bound_state_g() const
    {
        if (!(g > 0.0)) {
            throw invalid_input_error("coupling g must be > 0 for bound-state computations (got " +
                                      std::to_string(g) + ")");
        }
    }

  private:
    void validate() const
    {
        if (!std::isfinite(j)) {
            throw invalid_input_error("parameter j must be finite");
        }
        if (!std::isfinite(g) || g < 0.0) {
            throw invalid_input_error("coupling g must be finite and >= 0 (got " +
                                      std::to_string(g) + "); attractive-tail problems only");
        }
    }
};

/// The shared first-order-operator profile f(x) in A(+/-, j) = +/-d/dx - j f(x) + g/j:
/// 1/x, cot x, coth x, tanh x for the four families respectively.
inline double superpotential_profile(Family family, double x)
{
    detail::check_domain(family, x, "superpotential_profile");
    switch (family) {
        case Family::flat_kepler: return 1.0 / x;
        case Family::spherical_kepler: return std::cos(x) / std::sin(x);
        case Family::hyperbolic_kepler: return std::cosh(x) / std::sinh(x);
        case Family::rosen_morse: return std::tanh(x);
    }
    return 0.0;
}

/// The potential V(x).  Invariant under j -> 1-j for every family.
inline double potential(const ModelParams& p, double x)
{
    detail::check_domain(p.family, x, "potential");
    const double cj = p.j * (p.j - 1.0);
    switch (p.family) {
        case Family::flat_kepler:
            return cj / (x * x) - 2.0 * p.g / x;
        case Family::spherical_kepler: {
            const double s = std::sin(x);
            return cj / (s * s) - 2.0 * p.g * std::cos(x) / s;
        }
        case Family::hyperbolic_kepler: {
            const double s = std::sinh(x);
            return cj / (s * s) - 2.0 * p.g * std::cosh(x) / s;
        }
        case Family::rosen_morse: {
            const double c = std::cosh(x);
            return -cj / (c * c) - 2.0 * p.g * std::tanh(x);
        }
    }
    return 0.0;
}

/// The constant eps(j) in the factorization H = A(-,j) A(+,j) + eps(j).
/// Note the hyperbolic and Rosen-Morse families share the same eps.
inline double factorization_energy(const ModelParams& p)
{
    if (p.j == 0.0) {
        throw singular_parameter_error("factorization_energy: j = 0 makes g/j ill-defined");
    }
    const double over = p.g * p.g / (p.j * p.j);
    switch (p.family) {
        case Family::flat_kepler: return -over;
        case Family::spherical_kepler: return p.j * p.j - over;
        case Family::hyperbolic_kepler:
        case Family::rosen_morse: return -p.j * p.j - over;
    }
    return 0.0;
}

/// The scalar c(j,g) with [J+, J-] acting as c(j,g) * identity on a
/// J3 = j eigenspace.  Hyperbolic and Rosen-Morse share one expression.
inline double commutator_constant(const ModelParams& p)
{
    if (p.j == 0.0 || p.j == 1.0) {
        throw singular_parameter_error(
            "commutator_constant: j in {0, 1} makes 1/J3 or 1/(J3-1) ill-defined");
    }
    const double a = p.g * p.g / (p.j * p.j);
    const double b = p.g * p.g / ((p.j - 1.0) * (p.j - 1.0));
    switch (p.family) {
        case Family::flat_kepler:
            return -a + b;
        case Family::spherical_kepler:
            return p.j * p.j - a - (p.j - 1.0) * (p.j - 1.0) + b;
        case Family::hyperbolic_kepler:
        case Family::rosen_morse:
            return -p.j * p.j - a + (p.j - 1.0) * (p.j - 1.0) + b;
    }
    return 0.0;
}

/// Asymptotic potential value below which discrete bound states live.
/// +infinity for the spherical family (compact domain, purely discrete).
inline double continuum_threshold(const ModelParams& p)
{
    switch (p.family) {
        case Family::flat_kepler: return 0.0;
        case Family::spherical_kepler: return std::numeric_limits<double>::infinity();
        case Family::hyperbolic_kepler: return -2.0 * p.g;
        case Family::rosen_morse: return -2.0 * p.g; // the smaller of -/+2g for g > 0
    }
    return 0.0;
}

} // namespace specalg
