#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "errors.hpp"
#include "wavefunction.hpp"

namespace specalg {

/// Composite Simpson rule over [a, b] with an odd number of equally spaced
/// points (including the endpoints).
inline double simpson(const std::function<double(double)>& f, double a, double b, int points)
{
    if (points < 3 || points % 2 == 0) {
        throw invalid_input_error("simpson: point count must be odd and >= 3");
    }
    if (!(a < b)) {
        throw invalid_input_error("simpson: requires a < b");
    }
    const double h = (b - a) / (points - 1);
    double s = f(a) + f(b);
    for (int i = 1; i < points - 1; ++i) {
        s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

/// integral of psi^2 over [a, b] (composite Simpson).
inline double l2_norm_sq(const WaveFunction& psi, double a, double b, int points)
{
    return simpson(
        [&psi](double x) {
            const double v = psi(x);
            return v * v;
        },
        a, b, points);
}

/// integral of phi * psi over [a, b] (composite Simpson).
inline double inner_product(const WaveFunction& phi, const WaveFunction& psi, double a, double b,
                            int points)
{
    return simpson([&phi, &psi](double x) { return phi(x) * psi(x); }, a, b, points);
}

struct NormalizeResult {
    WaveFunction psi;   ///< unit L2 norm over the quadrature bounds
    double norm;        ///< the pre-normalization L2 norm
};

/// Scale psi to unit L2 norm over [a, b], with the sign fixed positive at the
/// first interior quadrature sample.  Throws degenerate_function_error when
/// the norm is numerically zero or non-finite.
inline NormalizeResult normalize(const WaveFunction& psi, double a, double b, int points)
{
    const double nsq = l2_norm_sq(psi, a, b, points);
    if (!std::isfinite(nsq) || nsq < 1e-300) {
        throw degenerate_function_error(
            "normalize: function is numerically zero or non-finite on the quadrature interval");
    }
    const double norm = std::sqrt(nsq);
    const double h = (b - a) / (points - 1);
    const double first_interior = psi(a + h);
    const double sign = (first_interior < 0.0) ? -1.0 : 1.0;
    return {psi.scaled(sign / norm), norm};
}

} // namespace specalg
