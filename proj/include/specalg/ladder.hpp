#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "jet.hpp"
#include "model.hpp"
#include "quadrature.hpp"
#include "representation.hpp"
#include "wavefunction.hpp"

namespace specalg {

namespace detail {

/// Jet of the first-order-operator profile f (1/x, cot, coth, tanh) at x.
inline Jet profile_jet(Family family, double x, int order)
{
    check_domain(family, x, "profile_jet");
    const Jet xs = Jet::variable(x, order);
    switch (family) {
        case Family::flat_kepler: return reciprocal(xs);
        case Family::spherical_kepler: return cot(xs);
        case Family::hyperbolic_kepler: return coth(xs);
        case Family::rosen_morse: return tanh(xs);
    }
    return xs;
}

/// Jet of the potential V at x.
inline Jet potential_jet(const ModelParams& p, double x, int order)
{
    check_domain(p.family, x, "potential_jet");
    const Jet xs = Jet::variable(x, order);
    const double cj = p.j * (p.j - 1.0);
    switch (p.family) {
        case Family::flat_kepler: {
            const Jet r = reciprocal(xs);
            return cj * (r * r) - (2.0 * p.g) * r;
        }
        case Family::spherical_kepler: {
            const Jet s = sin(xs);
            const Jet r = reciprocal(s);
            return cj * (r * r) - (2.0 * p.g) * (cos(xs) * r);
        }
        case Family::hyperbolic_kepler: {
            const Jet s = sinh(xs);
            const Jet r = reciprocal(s);
            return cj * (r * r) - (2.0 * p.g) * (cosh(xs) * r);
        }
        case Family::rosen_morse: {
            const Jet r = reciprocal(cosh(xs));
            return (-cj) * (r * r) - (2.0 * p.g) * tanh(xs);
        }
    }
    return xs;
}

} // namespace detail

enum class LadderSign { plus, minus };

/// Apply the first-order operator A(sign, j): psi |-> +/-psi' - j f(x) psi + (g/j) psi.
/// The result consumes one jet order of the input per application.
inline WaveFunction apply_A(Family family, LadderSign sign, double j, double g,
                            const WaveFunction& psi)
{
    if (j == 0.0) {
        throw singular_parameter_error("apply_A: j = 0 makes the g/j term ill-defined");
    }
    const double s = (sign == LadderSign::plus) ? 1.0 : -1.0;
    const double shift = g / j;
    const Interval dom = intersect(psi.domain(), family_domain(family));
    WfLabel label = psi.label();
    label.desc = std::string(sign == LadderSign::plus ? "A+(" : "A-(") + std::to_string(j) + ") " +
                 (label.desc.empty() ? "psi" : label.desc);
    return WaveFunction(
        [family, s, j, shift, psi](double x, int order) {
            const Jet p = psi.jet(x, order + 1);
            const Jet pd = p.derivative();
            const Jet pt = p.truncated(order);
            const Jet f = detail::profile_jet(family, x, order);
            return s * pd - j * (f * pt) + shift * pt;
        },
        dom, label);
}

/// Closed-form end state of a terminating chain, unnormalized:
///   flat:        x^j           * exp(-(g/j) x)
///   spherical:   (sin x)^j     * exp(-(g/j) x)
///   hyperbolic:  (sinh x)^j    * exp(-(g/j) x)
///   Rosen-Morse: (cosh x)^(1-j) * exp(+g x / (j-1))
/// with j = j_end.  Throws non_normalizable_error outside the family's
/// square-integrability window.
inline WaveFunction base_state(Family family, double j_end, double g)
{
    if (!(g > 0.0)) {
        throw non_normalizable_error("base_state: requires g > 0 for a decaying tail");
    }
    switch (family) {
        case Family::flat_kepler:
        case Family::spherical_kepler:
            if (!(j_end >= 0.5)) {
                throw non_normalizable_error(
                    "base_state: requires j_end >= 1/2 for the " +
                    std::string(family_name(family)) + " family (got " + std::to_string(j_end) +
                    ")");
            }
            break;
        case Family::hyperbolic_kepler:
            if (!(j_end > 0.0) || !(j_end < std::sqrt(g))) {
                throw non_normalizable_error(
                    "base_state: hyperbolic end state decays only for 0 < j_end < sqrt(g) (got "
                    "j_end = " +
                    std::to_string(j_end) + ", sqrt(g) = " + std::to_string(std::sqrt(g)) + ")");
            }
            break;
        case Family::rosen_morse:
            if (!(j_end - 1.0 > std::sqrt(g))) {
                throw non_normalizable_error(
                    "base_state: Rosen-Morse end state decays only for j_end > 1 + sqrt(g) (got "
                    "j_end = " +
                    std::to_string(j_end) + ")");
            }
            break;
    }

    WfLabel label;
    label.family = family;
    label.j = j_end;
    label.g = g;
    label.n = 0;
    label.desc = "base_state";

    const double a = j_end;
    const double c = (family == Family::rosen_morse) ? g / (j_end - 1.0) : -g / j_end;
    return WaveFunction(
        [family, a, c](double x, int order) {
            const Jet xs = Jet::variable(x, order);
            switch (family) {
                case Family::flat_kepler: return exp(a * log(xs) + c * xs);
                case Family::spherical_kepler: return exp(a * log(sin(xs)) + c * xs);
                case Family::hyperbolic_kepler: return exp(a * log(sinh(xs)) + c * xs);
                case Family::rosen_morse: return exp((1.0 - a) * log(cosh(xs)) + c * xs);
            }
            return xs;
        },
        family_domain(family), label);
}

/// A wavefunction with its J3 label.  The auxiliary phase factor that makes
/// J3 diagonal is pure bookkeeping, so states are (psi, j) pairs and the
/// ladder operators shift j by exactly +/-1.
struct LadderState {
    WaveFunction psi;
    double j;
};

/// J+ : (psi, j) |-> (A(+, j) psi, j + 1).  Requires j != 0.
inline LadderState j_plus(Family family, double g, const LadderState& state)
{
    if (state.j == 0.0) {
        throw singular_parameter_error("j_plus: label j = 0 makes 1/J3 ill-defined");
    }
    return {apply_A(family, LadderSign::plus, state.j, g, state.psi), state.j + 1.0};
}

/// J- : (psi, j) |-> (A(-, j-1) psi, j - 1).  Requires j != 1.
inline LadderState j_minus(Family family, double g, const LadderState& state)
{
    if (state.j == 1.0) {
        throw singular_parameter_error("j_minus: label j = 1 makes 1/(J3-1) ill-defined");
    }
    return {apply_A(family, LadderSign::minus, state.j - 1.0, g, state.psi), state.j - 1.0};
}

/// Level-n eigenfunction built by the operator chain, unnormalized:
/// n lowering steps from the closed-form top state at j+n for
/// flat/spherical/hyperbolic, n raising steps from the closed-form bottom
/// state at j-n for Rosen-Morse.  Admission mirrors spectrum(): strict
/// quantization when the parameters satisfy it, the extended window
/// otherwise.
inline WaveFunction rodrigues_chain(const ModelParams& p, int n);

namespace detail {

/// spectrum() in strict mode when admitted, falling back to extended mode on
/// a quantization failure (chains and grids are analytically valid there).
inline SpectrumReport spectrum_any_mode(const ModelParams& p, std::optional<int> n_max)
{
    try {
        return spectrum(p, n_max, SpectrumMode::strict);
    } catch (const quantization_error&) {
        return spectrum(p, n_max, SpectrumMode::extended);
    }
}

} // namespace detail

inline WaveFunction rodrigues_chain(const ModelParams& p, int n)
{
    if (n < 0) {
        throw invalid_input_error("rodrigues_chain: n must be >= 0");
    }
    const SpectrumReport rep = detail::spectrum_any_mode(p, n);
    if (static_cast<int>(rep.lines.size()) <= n) {
        std::ostringstream os;
        os << "rodrigues_chain: level n = " << n << " is not admitted (only "
           << rep.lines.size() << " level(s) exist for these parameters)";
        throw no_bound_state_error(os.str());
    }

    const bool raising = (p.family == Family::rosen_morse);
    const double j_end = raising ? p.j - n : p.j + n;
    LadderState state{base_state(p.family, j_end, p.g), j_end};
    for (int k = 0; k < n; ++k) {
        state = raising ? j_plus(p.family, p.g, state) : j_minus(p.family, p.g, state);
    }

    WfLabel label;
    label.family = p.family;
    label.j = p.j;
    label.g = p.g;
    label.n = n;
    label.desc = "level-" + std::to_string(n) + " eigenfunction";
    return WaveFunction([psi = state.psi](double x, int order) { return psi.jet(x, order); },
                        state.psi.domain(), label);
}

/// -psi'' + V(x) psi with V at the parameters' j.
inline WaveFunction invariant_H(const ModelParams& p, const WaveFunction& psi)
{
    const Interval dom = intersect(psi.domain(), family_domain(p.family));
    WfLabel label = psi.label();
    label.desc = "H " + (label.desc.empty() ? "psi" : label.desc);
    return WaveFunction(
        [p, psi](double x, int order) {
            const Jet pj = psi.jet(x, order + 2);
            const Jet d2 = pj.derivative().derivative();
            const Jet v = detail::potential_jet(p, x, order);
            return -d2 + v * pj.truncated(order);
        },
        dom, label);
}

/// Max over the samples of |([J+, J-] - c(j,g)) psi| divided by max |psi|.
/// The two orderings need labels j and j-1 away from {0, 1}, i.e. j not in
/// {0, 1} (j = 2 uses A at labels 1 and 2, etc.; only 1/j and 1/(j-1)
/// appear).
inline double commutator_check(Family family, double g, const LadderState& state,
                               const std::vector<double>& sample_xs)
{
    const double j = state.j;
    if (j == 0.0 || j == 1.0) {
        throw singular_parameter_error(
            "commutator_check: labels j in {0, 1} make one of the orderings ill-defined");
    }
    if (sample_xs.empty()) {
        throw invalid_input_error("commutator_check: needs at least one sample point");
    }
    const double c = commutator_constant(ModelParams(family, j, g));

    // [J+, J-] psi = A(+, j-1) A(-, j-1) psi - A(-, j) A(+, j) psi at label j.
    const WaveFunction up_down =
        apply_A(family, LadderSign::plus, j - 1.0, g,
                apply_A(family, LadderSign::minus, j - 1.0, g, state.psi));
    const WaveFunction down_up =
        apply_A(family, LadderSign::minus, j, g,
                apply_A(family, LadderSign::plus, j, g, state.psi));

    double max_dev = 0.0;
    double max_psi = 0.0;
    for (double x : sample_xs) {
        const double psi_x = state.psi(x);
        const double dev = std::abs(up_down(x) - down_up(x) - c * psi_x);
        max_dev = std::max(max_dev, dev);
        max_psi = std::max(max_psi, std::abs(psi_x));
    }
    if (!(max_psi > 0.0) || !std::isfinite(max_psi)) {
        throw degenerate_function_error("commutator_check: test function vanishes on all samples");
    }
    return max_dev / max_psi;
}

} // namespace specalg
