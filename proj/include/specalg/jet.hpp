#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace specalg {

namespace detail {

/// binom(n, k) exactly (values used here stay far below 2^53).
inline double binom(int n, int k)
{
    static const std::vector<std::vector<double>> table = [] {
        constexpr int max_n = 64;
        std::vector<std::vector<double>> t(max_n + 1);
        for (int i = 0; i <= max_n; ++i) {
            t[i].resize(static_cast<std::size_t>(i) + 1);
            t[i][0] = t[i][static_cast<std::size_t>(i)] = 1.0;
            for (int j = 1; j < i; ++j) {
                t[i][static_cast<std::size_t>(j)] =
                    t[i - 1][static_cast<std::size_t>(j - 1)] + t[i - 1][static_cast<std::size_t>(j)];
            }
        }
        return t;
    }();
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace detail

/// Truncated Taylor expansion of a function at a point: the value and the raw
/// derivatives d^1 f .. d^K f (not divided by k!).  Closed under arithmetic
/// and the elementary functions via Leibniz / chain-rule recurrences, so an
/// n-fold first-order operator chain evaluates derivatives exactly to
/// rounding, with no finite-difference noise.
class Jet {
  public:
    explicit Jet(int order) : c_(static_cast<std::size_t>(order) + 1, 0.0)
    {
        if (order < 0) {
            throw invalid_input_error("Jet: order must be >= 0");
        }
    }

    /// The constant function c.
    static Jet constant(double value, int order)
    {
        Jet j(order);
        j.c_[0] = value;
        return j;
    }

    /// The identity function evaluated at x.
    static Jet variable(double x, int order)
    {
        Jet j(order);
        j.c_[0] = x;
        if (order >= 1) {
            j.c_[1] = 1.0;
        }
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double value() const { return c_[0]; }

    /// Raw k-th derivative d^k f (k = 0 is the value).
    double deriv(int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

    /// The jet of f' at the same point; one order lower.
    Jet derivative() const
    {
        if (order() == 0) {
            throw order_exhausted_error(
                "Jet::derivative: order-0 jet cannot supply a derivative; request a deeper jet");
        }
        Jet d(order() - 1);
        for (int k = 0; k <= d.order(); ++k) {
            d.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k) + 1];
        }
        return d;
    }

    /// Drop derivatives above `order` (no-op when already at or below it).
    Jet truncated(int order) const
    {
        if (order >= this->order()) {
            return *this;
        }
        Jet t(order);
        for (int k = 0; k <= order; ++k) {
            t.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
        }
        return t;
    }

    Jet operator-() const
    {
        Jet r(order());
        for (int k = 0; k <= order(); ++k) {
            r.c_[static_cast<std::size_t>(k)] = -c_[static_cast<std::size_t>(k)];
        }
        return r;
    }

    friend Jet operator+(const Jet& a, const Jet& b)
    {
        const int n = std::min(a.order(), b.order());
        Jet r(n);
        for (int k = 0; k <= n; ++k) {
            r[k] = a[k] + b[k];
        }
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b)
    {
        const int n = std::min(a.order(), b.order());
        Jet r(n);
        for (int k = 0; k <= n; ++k) {
            r[k] = a[k] - b[k];
        }
        return r;
    }

    /// Leibniz product with binomial weights (raw-derivative storage).
    friend Jet operator*(const Jet& a, const Jet& b)
    {
        const int n = std::min(a.order(), b.order());
        Jet r(n);
        for (int k = 0; k <= n; ++k) {
            double s = 0.0;
            for (int i = 0; i <= k; ++i) {
                s += detail::binom(k, i) * a[i] * b[k - i];
            }
            r[k] = s;
        }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b)
    {
        const int n = std::min(a.order(), b.order());
        if (b[0] == 0.0) {
            throw domain_violation_error("Jet division by a jet with zero value");
        }
        Jet q(n);
        for (int k = 0; k <= n; ++k) {
            double s = a[k];
            for (int i = 1; i <= k; ++i) {
                s -= detail::binom(k, i) * b[i] * q[k - i];
            }
            q[k] = s / b[0];
        }
        return q;
    }

    friend Jet operator+(const Jet& a, double c)
    {
        Jet r = a;
        r[0] += c;
        return r;
    }
    friend Jet operator+(double c, const Jet& a) { return a + c; }
    friend Jet operator-(const Jet& a, double c) { return a + (-c); }
    friend Jet operator-(double c, const Jet& a) { return -a + c; }
    friend Jet operator*(const Jet& a, double c)
    {
        Jet r(a.order());
        for (int k = 0; k <= a.order(); ++k) {
            r[k] = a[k] * c;
        }
        return r;
    }
    friend Jet operator*(double c, const Jet& a) { return a * c; }
    friend Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }

  private:
    std::vector<double> c_;
};

/// 1/u via the Leibniz recurrence for (u * r)^(k) = 0, k >= 1.
inline Jet reciprocal(const Jet& u)
{
    if (u[0] == 0.0) {
        throw domain_violation_error("reciprocal of a jet with zero value");
    }
    Jet r(u.order());
    r[0] = 1.0 / u[0];
    for (int k = 1; k <= u.order(); ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) {
            s += detail::binom(k, i) * u[i] * r[k - i];
        }
        r[k] = -s / u[0];
    }
    return r;
}

/// exp(u): e^(k+1) = sum_i C(k,i) u^(i+1) e^(k-i).
inline Jet exp(const Jet& u)
{
    Jet e(u.order());
    e[0] = std::exp(u[0]);
    for (int k = 0; k < u.order(); ++k) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i) {
            s += detail::binom(k, i) * u[i + 1] * e[k - i];
        }
        e[k + 1] = s;
    }
    return e;
}

/// log(u), u > 0: l' = u' / u.
inline Jet log(const Jet& u)
{
    if (!(u[0] > 0.0)) {
        throw domain_violation_error("log of a jet with non-positive value");
    }
    Jet l(u.order());
    l[0] = std::log(u[0]);
    if (u.order() >= 1) {
        const Jet p = u.derivative() * reciprocal(u.truncated(u.order() - 1));
        for (int k = 1; k <= u.order(); ++k) {
            l[k] = p[k - 1];
        }
    }
    return l;
}

namespace detail {

/// Coupled recurrence for (sin u, cos u) or (sinh u, cosh u):
/// s' = u' c, c' = sign * u' s with sign = -1 (circular) or +1 (hyperbolic).
inline std::pair<Jet, Jet> sin_cos_pair(const Jet& u, double s0, double c0, double sign)
{
    Jet s(u.order());
    Jet c(u.order());
    s[0] = s0;
    c[0] = c0;
    for (int k = 0; k < u.order(); ++k) {
        double as = 0.0;
        double ac = 0.0;
        for (int i = 0; i <= k; ++i) {
            const double w = binom(k, i) * u[i + 1];
            as += w * c[k - i];
            ac += w * s[k - i];
        }
        s[k + 1] = as;
        c[k + 1] = sign * ac;
    }
    return {s, c};
}

} // namespace detail

inline Jet sin(const Jet& u)
{
    return detail::sin_cos_pair(u, std::sin(u[0]), std::cos(u[0]), -1.0).first;
}
inline Jet cos(const Jet& u)
{
    return detail::sin_cos_pair(u, std::sin(u[0]), std::cos(u[0]), -1.0).second;
}
inline Jet sinh(const Jet& u)
{
    return detail::sin_cos_pair(u, std::sinh(u[0]), std::cosh(u[0]), +1.0).first;
}
inline Jet cosh(const Jet& u)
{
    return detail::sin_cos_pair(u, std::sinh(u[0]), std::cosh(u[0]), +1.0).second;
}

inline Jet tanh(const Jet& u)
{
    const auto sc = detail::sin_cos_pair(u, std::sinh(u[0]), std::cosh(u[0]), +1.0);
    return sc.first / sc.second;
}
inline Jet coth(const Jet& u)
{
    const auto sc = detail::sin_cos_pair(u, std::sinh(u[0]), std::cosh(u[0]), +1.0);
    return sc.second / sc.first;
}
inline Jet cot(const Jet& u)
{
    const auto sc = detail::sin_cos_pair(u, std::sin(u[0]), std::cos(u[0]), -1.0);
    return sc.second / sc.first;
}

/// u^alpha for real alpha, u > 0.
inline Jet pow(const Jet& u, double alpha)
{
    return exp(alpha * log(u));
}

} // namespace specalg
