#pragma once

#include <compare>

namespace comblock::units {

/// Thin tagged wrapper around a double so ohms can't be passed as farads.
template <class Tag>
struct Quantity {
    double value = 0.0;

    constexpr Quantity() = default;
    constexpr explicit Quantity(double v) : value(v) {}

    friend constexpr auto operator<=>(Quantity, Quantity) = default;
    friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity(a.value + b.value); }
    friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity(a.value - b.value); }
    friend constexpr Quantity operator*(double k, Quantity a) { return Quantity(k * a.value); }
    friend constexpr Quantity operator*(Quantity a, double k) { return Quantity(k * a.value); }
};

using Ohms = Quantity<struct OhmsTag>;
using Farads = Quantity<struct FaradsTag>;
using Volts = Quantity<struct VoltsTag>;
using Amperes = Quantity<struct AmperesTag>;
using Seconds = Quantity<struct SecondsTag>;
using Hertz = Quantity<struct HertzTag>;

}  // namespace comblock::units
