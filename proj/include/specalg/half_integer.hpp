#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace specalg {

/// Exact half-integer arithmetic.
///
/// Stores 2j as an integer so that values like 3/2 carry no rounding and
/// equality/ordering are exact.  Used wherever the ladder quantization demands
/// genuine half-odd-integers rather than floats that happen to look like them.
class HalfInteger {
  public:
    /// Construct from the doubled value (2j).
    constexpr explicit HalfInteger(std::int64_t twice_value) : twice_(twice_value) {}

    static constexpr HalfInteger from_twice(std::int64_t twice_value)
    {
        return HalfInteger(twice_value);
    }

    /// Exact conversion from a double: succeeds iff 2v is an integer
    /// representable without rounding.  No tolerance is applied; 1.4999999
    /// is rejected, 1.5 is accepted.
    static std::optional<HalfInteger> from_double(double v)
    {
        if (!std::isfinite(v)) {
            return std::nullopt;
        }
        double t = 2.0 * v;
        if (std::abs(t) > 9.0e15) { // beyond exact integer range of double
            return std::nullopt;
        }
        if (t != std::nearbyint(t)) {
            return std::nullopt;
        }
        return HalfInteger(static_cast<std::int64_t>(t));
    }

    /// Parse "p/2" (numerator over literal 2), a plain integer, or a decimal
    /// that is exactly a half-integer.  Returns nullopt when the text is not
    /// an exact half-integer.
    static std::optional<HalfInteger> parse(std::string_view text)
    {
        if (text.empty()) {
            return std::nullopt;
        }
        std::string s(text);
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            if (s.substr(slash + 1) != "2") {
                return std::nullopt;
            }
            std::string num = s.substr(0, slash);
            if (num.empty()) {
                return std::nullopt;
            }
            char* end = nullptr;
            errno = 0;
            long long p = std::strtoll(num.c_str(), &end, 10);
            if (errno != 0 || end == num.c_str() || *end != '\0') {
                return std::nullopt;
            }
            return HalfInteger(static_cast<std::int64_t>(p));
        }
        char* end = nullptr;
        errno = 0;
        double v = std::strtod(s.c_str(), &end);
        if (errno != 0 || end == s.c_str() || *end != '\0') {
            return std::nullopt;
        }
        return from_double(v);
    }

    /// The doubled value 2j.
    constexpr std::int64_t twice() const { return twice_; }

    /// The value j; exact, since division by 2 is a power-of-two scaling.
    constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    /// True for 1/2, 3/2, 5/2, ... (and their negatives): the admissible
    /// top labels of terminating ladders.
    constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

    friend constexpr bool operator==(HalfInteger a, HalfInteger b) = default;
    friend constexpr auto operator<=>(HalfInteger a, HalfInteger b) = default;

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b)
    {
        return HalfInteger(a.twice_ + b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b)
    {
        return HalfInteger(a.twice_ - b.twice_);
    }
    constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }

    /// Shift by a whole integer (ladder steps move j by exactly 1).
    friend constexpr HalfInteger operator+(HalfInteger a, std::int64_t k)
    {
        return HalfInteger(a.twice_ + 2 * k);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, std::int64_t k)
    {
        return HalfInteger(a.twice_ - 2 * k);
    }

    /// "2", "3/2", "-1/2", ...
    std::string str() const
    {
        if (is_integer()) {
            return std::to_string(twice_ / 2);
        }
        return std::to_string(twice_) + "/2";
    }

  private:
    std::int64_t twice_;
};

} // namespace specalg
