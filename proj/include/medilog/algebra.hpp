#pragma once

// t-norms, dual t-conorms and residua on the unit interval.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "medilog/error.hpp"

namespace medilog {

/// Half-width of the band outside [0,1] that is clamped instead of rejected.
inline constexpr double kDegreeSlack = 1e-9;

/// A truth degree in [0,1].
///
/// Values in [-1e-9, 1+1e-9] are clamped into [0,1]; anything further out
/// (or NaN) raises DomainError. Converts implicitly to double so arithmetic
/// reads naturally; construction from double is explicit so every entry
/// point into the domain is checked.
class Degree {
public:
    constexpr Degree() = default;
    explicit Degree(double v) : value_(checked(v)) {}

    constexpr double value() const noexcept { return value_; }
    constexpr operator double() const noexcept { return value_; }

    static Degree clamp(double v) noexcept {
        Degree d;
        d.value_ = std::isnan(v) ? 0.0 : std::clamp(v, 0.0, 1.0);
        return d;
    }

private:
    static double checked(double v) {
        if (!(v >= -kDegreeSlack && v <= 1.0 + kDegreeSlack)) {
            throw DomainError("degree " + std::to_string(v) + " outside [0,1]");
        }
        return std::clamp(v, 0.0, 1.0);
    }

    double value_ = 0.0;
};

enum class TNormKind { Lukasiewicz, Godel, Product };

inline std::string_view to_string(TNormKind kind) noexcept {
    switch (kind) {
        case TNormKind::Lukasiewicz: return "lukasiewicz";
        case TNormKind::Godel: return "godel";
        case TNormKind::Product: return "product";
    }
    return "lukasiewicz";
}

inline TNormKind parse_tnorm(std::string_view name) {
    if (name == "lukasiewicz" || name == "luk") return TNormKind::Lukasiewicz;
    if (name == "godel" || name == "min") return TNormKind::Godel;
    if (name == "product" || name == "prod") return TNormKind::Product;
    throw DomainError("unknown t-norm '" + std::string(name) + "'");
}

inline Degree tnorm(TNormKind kind, Degree a, Degree b) noexcept {
    switch (kind) {
        case TNormKind::Lukasiewicz: return Degree::clamp(a - (1.0 - b));  // exact when b == 1
        case TNormKind::Godel: return std::min(a, b);
        case TNormKind::Product: return Degree::clamp(a * b);
    }
    return Degree::clamp(0.0);
}

inline Degree tconorm(TNormKind kind, Degree a, Degree b) noexcept {
    switch (kind) {
        case TNormKind::Lukasiewicz: return Degree::clamp(a + b);
        case TNormKind::Godel: return std::max(a, b);
        case TNormKind::Product: return Degree::clamp(a + b - a * b);
    }
    return Degree::clamp(1.0);
}

/// sup{c : T(a,c) <= b}. Equals 1 whenever a <= b, including a = 0.
inline Degree residuum(TNormKind kind, Degree a, Degree b) noexcept {
    if (a <= b) return Degree::clamp(1.0);
    switch (kind) {
        case TNormKind::Lukasiewicz: return Degree::clamp(1.0 - a + b);
        case TNormKind::Godel: return b;
        case TNormKind::Product: return Degree::clamp(b / a);
    }
    return Degree::clamp(1.0);
}

}  // namespace medilog
