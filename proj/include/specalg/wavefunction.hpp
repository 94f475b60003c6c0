#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"
#include "jet.hpp"
#include "model.hpp"

namespace specalg {

/// Optional provenance carried by a wavefunction (family, labels, level).
struct WfLabel {
    std::optional<Family> family;
    std::optional<double> j;
    std::optional<double> g;
    std::optional<int> n;
    std::string desc;
};

/// A real function of one variable exposed through a jet evaluator: the
/// caller asks for the value and derivatives up to a requested order at any
/// interior point of the domain.  Evaluators are pure and deterministic, so
/// wavefunctions may be copied and evaluated concurrently.
class WaveFunction {
  public:
    using Evaluator = std::function<Jet(double x, int order)>;

    WaveFunction(Evaluator eval, Interval domain, WfLabel label = {})
        : eval_(std::move(eval))
        , domain_(domain)
        , label_(std::move(label))
    {
    }

    /// Value and raw derivatives 1..order at x.  Throws domain_violation_error
    /// outside the open domain.
    Jet jet(double x, int order) const
    {
        if (!domain_.contains(x)) {
            std::ostringstream os;
            os << "wavefunction evaluated at x = " << x << " outside its open domain ("
               << domain_.lo << ", " << domain_.hi << ")";
            throw domain_violation_error(os.str());
        }
        return eval_(x, order);
    }

    double operator()(double x) const { return jet(x, 0).value(); }

    const Interval& domain() const { return domain_; }
    const WfLabel& label() const { return label_; }

    /// The same function scaled by a constant.
    WaveFunction scaled(double factor) const
    {
        Evaluator inner = eval_;
        return WaveFunction(
            [inner, factor](double x, int order) { return inner(x, order) * factor; }, domain_,
            label_);
    }

  private:
    Evaluator eval_;
    Interval domain_;
    WfLabel label_;
};

/// Intersection of two open intervals.
inline Interval intersect(const Interval& a, const Interval& b)
{
    return {a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
}

} // namespace specalg
