#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "half_integer.hpp"
#include "model.hpp"

namespace specalg {

// ---------------------------------------------------------------------------
// Ladder norms
// ---------------------------------------------------------------------------

enum class LadderDirection { up, down };

/// Squared norm of the raised (up) or lowered (down) state built from a
/// normalized state with invariant eigenvalue E and label j.  May be negative;
/// classification uses the sign.  Closed forms per family:
///   flat:       E + g^2/j^2                    (up),  E + g^2/(j-1)^2                  (down)
///   spherical:  E - j^2 + g^2/j^2              (up),  E - (j-1)^2 + g^2/(j-1)^2        (down)
///   hyperbolic / Rosen-Morse:
///               E + j^2 + g^2/j^2              (up),  E + (j-1)^2 + g^2/(j-1)^2        (down)
inline double ladder_norm_sq(const ModelParams& p, double E, LadderDirection dir)
{
    const double t = (dir == LadderDirection::up) ? p.j : p.j - 1.0;
    if (t == 0.0) {
        throw singular_parameter_error(dir == LadderDirection::up
                                           ? "ladder_norm_sq(up): j = 0 makes 1/j^2 ill-defined"
                                           : "ladder_norm_sq(down): j = 1 makes 1/(j-1)^2 ill-defined");
    }
    const double gg = p.g * p.g / (t * t);
    switch (p.family) {
        case Family::flat_kepler: return E + gg;
        case Family::spherical_kepler: return E - t * t + gg;
        case Family::hyperbolic_kepler:
        case Family::rosen_morse: return E + t * t + gg;
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Representation classes
// ---------------------------------------------------------------------------

enum class RepKind {
    finite_dim,
    infinite_lowering,
    infinite_raising,
    one_dim_special,
    excluded,
};

inline std::string_view rep_kind_name(RepKind k)
{
    switch (k) {
        case RepKind::finite_dim: return "finite";
        case RepKind::infinite_lowering: return "infinite-lowering";
        case RepKind::infinite_raising: return "infinite-raising";
        case RepKind::one_dim_special: return "one-dim-special";
        case RepKind::excluded: return "excluded";
    }
    return "?";
}

/// One representation of the ladder algebra at fixed invariant eigenvalue.
struct RepClass {
    RepKind kind;
    double nu;                             ///< top-of-orbit (or sole) J3 label
    std::optional<HalfInteger> nu_exact;   ///< exact backing when available
    std::optional<std::int64_t> dim;       ///< 2*nu for finite towers; empty otherwise
    std::vector<double> orbit;             ///< full orbit for finite; leading labels otherwise
    bool orbit_unbounded_below = false;
    bool orbit_unbounded_above = false;
    std::optional<double> energy;          ///< invariant eigenvalue; empty for excluded
    std::string note;
};

/// Number of half-integer steps of the infinite-orbit preview list.
inline constexpr int orbit_preview_length = 6;

/// j of the one-dimensional special representation, defined for g in (0, 1/4):
/// j = 1/2 - sqrt(1/4 - g).  Both ladder norms vanish there; the mirror root
/// 1/2 + sqrt(1/4 - g) is the j -> 1-j partner of the same state.
inline std::optional<double> one_dim_special_j(double g)
{
    if (!(g > 0.0) || !(g < 0.25)) {
        return std::nullopt;
    }
    return 0.5 - std::sqrt(0.25 - g);
}

/// Largest half-odd-integer strictly below sqrt(g), or nullopt when none
/// exists (g <= 1/4).  Comparison via (2*nu)^2 < 4g which is exact for
/// integer 2*nu within double range.
inline std::optional<HalfInteger> nu_max_below_sqrt_g(double g)
{
    if (!(g > 0.0)) {
        return std::nullopt;
    }
    const double fourg = 4.0 * g;
    // Largest integer t >= 1 with t*t < 4g, then step down to odd.
    auto below = [fourg](std::int64_t t) {
        return static_cast<double>(t) * static_cast<double>(t) < fourg;
    };
    std::int64_t t = static_cast<std::int64_t>(std::floor(std::sqrt(fourg))) + 2;
    while (t >= 1 && !below(t)) {
        --t;
    }
    if (t >= 1 && t % 2 == 0) {
        --t;
    }
    if (t < 1) {
        return std::nullopt;
    }
    return HalfInteger::from_twice(t);
}

namespace detail {

inline double finite_tower_energy(Family f, double nu, double g)
{
    const double over = g * g / (nu * nu);
    switch (f) {
        case Family::flat_kepler: return -over;
        case Family::spherical_kepler: return nu * nu - over;
        case Family::hyperbolic_kepler:
        case Family::rosen_morse: return -nu * nu - over;
    }
    return 0.0;
}

inline std::vector<double> finite_orbit(HalfInteger nu)
{
    // {nu, nu-1, ..., 1-nu}: exactly 2*nu labels, none of them zero.
    std::vector<double> orbit;
    const std::int64_t d = nu.twice();
    orbit.reserve(static_cast<std::size_t>(d));
    for (std::int64_t k = 0; k < d; ++k) {
        orbit.push_back((nu - k).value());
    }
    return orbit;
}

inline RepClass excluded(double nu, std::optional<HalfInteger> nu_exact, std::string note)
{
    RepClass r;
    r.kind = RepKind::excluded;
    r.nu = nu;
    r.nu_exact = nu_exact;
    r.note = std::move(note);
    return r;
}

} // namespace detail

/// Classify the representation with top (or sole) label nu for the family and
/// coupling in `p` (p.j is not consulted).  Flat/spherical: terminating
/// towers exist exactly at half-odd nu >= 1/2.  Hyperbolic/Rosen-Morse share
/// one algebra: infinite one-sided towers outside [-sqrt(g), 1+sqrt(g)],
/// finite towers at half-odd nu in (1-sqrt(g), sqrt(g)) for g > 1/4, a
/// one-dimensional representation at nu = 1/2 - sqrt(1/4-g) for g in (0,1/4),
/// and an excluded band [-sqrt(g), 1-sqrt(g)] U [sqrt(g), 1+sqrt(g)] where no
/// normalizable bound state exists (probed numerically, not assumed).
inline RepClass classify(const ModelParams& p, double nu)
{
    p.require_bound_state_g();
    if (!std::isfinite(nu)) {
        throw invalid_input_error("classify: nu must be finite");
    }
    const std::optional<HalfInteger> exact = HalfInteger::from_double(nu);

    if (p.family == Family::flat_kepler || p.family == Family::spherical_kepler) {
        if (exact && exact->is_half_odd() && exact->twice() >= 1) {
            RepClass r;
            r.kind = RepKind::finite_dim;
            r.nu = nu;
            r.nu_exact = exact;
            r.dim = exact->twice();
            r.orbit = detail::finite_orbit(*exact);
            r.energy = detail::finite_tower_energy(p.family, nu, p.g);
            return r;
        }
        if (exact && exact->is_integer()) {
            return detail::excluded(nu, exact,
                                    "orbit would contain j = 0, where 1/J3 is ill-defined");
        }
        if (exact && exact->is_half_odd()) {
            return detail::excluded(nu, exact, "top label must be >= 1/2");
        }
        return detail::excluded(nu, exact, "nu is not a half-odd integer: the ladder does not terminate");
    }

    // Hyperbolic Kepler and Rosen-Morse share the classification verbatim.
    const double s = std::sqrt(p.g);

    if (nu < -s) {
        RepClass r;
        r.kind = RepKind::infinite_lowering;
        r.nu = nu;
        r.nu_exact = exact;
        r.orbit_unbounded_below = true;
        for (int k = 0; k < orbit_preview_length; ++k) {
            r.orbit.push_back(nu - k);
        }
        r.energy = -nu * nu - p.g * p.g / (nu * nu);
        return r;
    }
    if (nu > 1.0 + s) {
        RepClass r;
        r.kind = RepKind::infinite_raising;
        r.nu = nu;
        r.nu_exact = exact;
        r.orbit_unbounded_above = true;
        for (int k = 0; k < orbit_preview_length; ++k) {
            r.orbit.push_back(nu + k);
        }
        const double t = nu - 1.0;
        r.energy = -t * t - p.g * p.g / (t * t);
        return r;
    }
    if (auto js = one_dim_special_j(p.g)) {
        if (std::abs(nu - *js) <= 1e-12 * std::max(1.0, std::abs(*js))) {
            RepClass r;
            r.kind = RepKind::one_dim_special;
            r.nu = *js;
            r.nu_exact = std::nullopt;
            r.dim = 1;
            r.orbit = {*js};
            r.energy = detail::finite_tower_energy(p.family, *js, p.g);
            r.note = "both ladder norms vanish; j -> 1-j partner at " +
                     std::to_string(1.0 - *js);
            return r;
        }
    }
    if (p.g > 0.25 && exact && exact->is_half_odd() && nu > 1.0 - s && nu < s) {
        if (exact->twice() < 1) {
            return detail::excluded(nu, exact, "top label must be >= 1/2");
        }
        RepClass r;
        r.kind = RepKind::finite_dim;
        r.nu = nu;
        r.nu_exact = exact;
        r.dim = exact->twice();
        r.orbit = detail::finite_orbit(*exact);
        r.energy = detail::finite_tower_energy(p.family, nu, p.g);
        return r;
    }
    if ((nu >= -s && nu <= 1.0 - s) || (nu >= s && nu <= 1.0 + s)) {
        if (exact && exact->is_half_odd() && nu >= s) {
            return detail::excluded(
                nu, exact,
                "no bound state in this region: the terminating chain's top state is not "
                "normalizable (nu >= sqrt(g))");
        }
        return detail::excluded(nu, exact, "no bound state in this region");
    }
    // Remaining gap: nu in (1-sqrt(g), sqrt(g)) without a valid half-odd label.
    return detail::excluded(nu, exact,
                            "nu is not a half-odd integer: the ladder does not terminate");
}

inline RepClass classify(const ModelParams& p, HalfInteger nu)
{
    return classify(p, nu.value());
}

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

enum class SpectrumMode { strict, extended };

inline std::string_view spectrum_mode_name(SpectrumMode m)
{
    return m == SpectrumMode::strict ? "strict" : "extended";
}

/// One bound level.  j_top_or_base is the J3 label of the annihilated end of
/// the chain that builds the eigenfunction: j+n for the lowering families
/// (flat/spherical/hyperbolic), j-n for Rosen-Morse.
struct SpectrumLine {
    int n;
    double energy;
    double j_top_or_base;
};

struct SpectrumReport {
    ModelParams params;
    SpectrumMode mode;
    std::vector<SpectrumLine> lines;
    /// Natural truncation N (levels n = 0..N) for hyperbolic/Rosen-Morse;
    /// empty for the infinite flat/spherical towers.
    std::optional<int> natural_cutoff;
    /// True when the caller's n_max removed admissible levels.
    bool capped_by_caller = false;
};

namespace detail {

inline double level_energy(Family f, double j, double g, int n)
{
    switch (f) {
        case Family::flat_kepler: {
            const double t = j + n;
            return -g * g / (t * t);
        }
        case Family::spherical_kepler: {
            const double t = j + n;
            return t * t - g * g / (t * t);
        }
        case Family::hyperbolic_kepler: {
            const double t = j + n;
            return -t * t - g * g / (t * t);
        }
        case Family::rosen_morse: {
            const double t = j - n - 1.0;
            return -t * t - g * g / (t * t);
        }
    }
    return 0.0;
}

inline void require_strict_half_odd(const ModelParams& p)
{
    if (!p.j_exact || !p.j_exact->is_half_odd()) {
        std::ostringstream os;
        os << "strict mode requires an exact half-odd-integer j (1/2, 3/2, ...) for the "
           << family_name(p.family) << " family; got j = " << p.j
           << ". Use --mode extended to apply the closed forms beyond the quantization.";
        throw quantization_error(os.str());
    }
}

} // namespace detail

/// Closed-form bound spectrum.
///
/// strict mode follows the terminating-ladder quantization: exact half-odd
/// j >= 1/2 for flat/spherical/hyperbolic, real j > 1+sqrt(g) for
/// Rosen-Morse.  extended mode applies the same closed forms at any real
/// j >= 1/2 (flat/spherical) or 1/2 <= j < sqrt(g) (hyperbolic); the energy
/// formulas remain exact there even though the ladder argument does not.
///
/// n_max caps the emitted levels and is mandatory for the infinite
/// flat/spherical towers.
inline SpectrumReport spectrum(const ModelParams& p,
                               std::optional<int> n_max,
                               SpectrumMode mode = SpectrumMode::strict)
{
    p.require_bound_state_g();
    if (n_max && *n_max < 0) {
        throw invalid_input_error("spectrum: n_max must be >= 0");
    }

    SpectrumReport rep{p, mode, {}, std::nullopt, false};
    int last = -1; // highest level index to emit

    switch (p.family) {
        case Family::flat_kepler:
        case Family::spherical_kepler: {
            if (mode == SpectrumMode::strict) {
                detail::require_strict_half_odd(p);
                if (p.j_exact->twice() < 1) {
                    throw no_bound_state_error("strict mode requires j >= 1/2; got j = " +
                                               std::to_string(p.j));
                }
            } else if (!(p.j >= 0.5)) {
                throw no_bound_state_error("extended mode requires j >= 1/2 for the " +
                                           std::string(family_name(p.family)) +
                                           " family; got j = " + std::to_string(p.j));
            }
            if (!n_max) {
                throw invalid_input_error(
                    "spectrum: the " + std::string(family_name(p.family)) +
                    " tower is infinite; an explicit n_max is required");
            }
            last = *n_max;
            break;
        }
        case Family::hyperbolic_kepler: {
            const double s = std::sqrt(p.g);
            int natural = -1;
            if (mode == SpectrumMode::strict) {
                detail::require_strict_half_odd(p);
                const auto numax = nu_max_below_sqrt_g(p.g);
                if (!numax) {
                    throw no_bound_state_error(
                        "no terminating tower exists: requires sqrt(g) > 1/2 (g > 1/4); for g in "
                        "(0, 1/4) only the one-dimensional representation at j = 1/2 - "
                        "sqrt(1/4 - g) remains");
                }
                if (p.j_exact->twice() < 1 || *p.j_exact > *numax) {
                    std::ostringstream os;
                    os << "no bound state: hyperbolic strict mode requires half-odd j with 1/2 <= "
                          "j <= "
                       << numax->str() << " (the largest half-odd integer < sqrt(g) = " << s << ")";
                    throw no_bound_state_error(os.str());
                }
                natural = static_cast<int>((numax->twice() - p.j_exact->twice()) / 2);
            } else {
                if (!(p.j >= 0.5) || !(p.j < s)) {
                    std::ostringstream os;
                    os << "no bound state: hyperbolic extended mode requires 1/2 <= j < sqrt(g) = "
                       << s << "; got j = " << p.j;
                    throw no_bound_state_error(os.str());
                }
                // Largest n with j + n < sqrt(g).
                natural = static_cast<int>(std::ceil(s - p.j)) - 1;
                while (natural > 0 && !(p.j + natural < s)) {
                    --natural;
                }
            }
            rep.natural_cutoff = natural;
            last = natural;
            if (n_max && *n_max < last) {
                last = *n_max;
                rep.capped_by_caller = true;
            }
            break;
        }
        case Family::rosen_morse: {
            const double s = std::sqrt(p.g);
            if (!(p.j > 1.0 + s)) {
                std::ostringstream os;
                os << "no bound state: Rosen-Morse requires j > 1 + sqrt(g) = " << 1.0 + s
                   << "; got j = " << p.j;
                throw no_bound_state_error(os.str());
            }
            // Largest n >= 0 with j - n > 1 + sqrt(g).
            int natural = static_cast<int>(std::ceil(p.j - 1.0 - s)) - 1;
            while (natural > 0 && !(p.j - natural > 1.0 + s)) {
                --natural;
            }
            rep.natural_cutoff = natural;
            last = natural;
            if (n_max && *n_max < last) {
                last = *n_max;
                rep.capped_by_caller = true;
            }
            break;
        }
    }

    rep.lines.reserve(static_cast<std::size_t>(last + 1));
    for (int n = 0; n <= last; ++n) {
        const double e = detail::level_energy(p.family, p.j, p.g, n);
        const double jend = (p.family == Family::rosen_morse) ? p.j - n : p.j + n;
        rep.lines.push_back({n, e, jend});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Bound-state windows
// ---------------------------------------------------------------------------

/// Open j-interval in which the family's potential supports bound states.
struct JWindow {
    double lo;
    double hi;
    std::string note;
};

/// For hyperbolic/Rosen-Morse this is the window in which V has an interior
/// minimum; for flat/spherical every j admits bound states and the window is
/// the whole line (with the actual constraint noted).
inline JWindow bound_state_window(const ModelParams& p)
{
    p.require_bound_state_g();
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double r = std::sqrt(p.g + 0.25);
    switch (p.family) {
        case Family::flat_kepler:
            return {-inf, inf,
                    "normalizability, not a potential minimum, is the binding constraint"};
        case Family::spherical_kepler:
            return {-inf, inf, "compact domain: the spectrum is always discrete"};
        case Family::hyperbolic_kepler:
            return {0.5 - r, 0.5 + r, "interior minimum of V exists"};
        case Family::rosen_morse:
            return {0.5 + r, inf, "interior minimum of V exists"};
    }
    return {0.0, 0.0, ""};
}

} // namespace specalg
