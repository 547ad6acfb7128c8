#pragma once

// Type-1 mediative truth values and the mediative operator.

#include <algorithm>
#include <string>

#include "medilog/algebra.hpp"

namespace medilog {

/// A truth/falsity pair. The coordinates are independent: mu + nu may fall
/// below 1 (incomplete information) or exceed it (overdetermined).
struct MediativePair {
    Degree mu;
    Degree nu;

    MediativePair() = default;
    MediativePair(Degree m, Degree n) : mu(m), nu(n) {}
    MediativePair(double m, double n) : mu(m), nu(n) {}

    friend bool operator==(const MediativePair& a, const MediativePair& b) noexcept {
        return a.mu.value() == b.mu.value() && a.nu.value() == b.nu.value();
    }
};

inline Degree hesitation(const MediativePair& p) noexcept {
    return Degree::clamp(std::max(0.0, 1.0 - p.mu - p.nu));
}

inline Degree contradiction(const MediativePair& p) noexcept {
    return Degree::clamp(std::max(0.0, p.mu + p.nu - 1.0));
}

/// Convex weights (w1 on the agreement channel, w2 on the
/// lack-of-disagreement channel) induced by hesitation and contradiction.
struct MediativeWeights {
    double w1;
    double w2;
    double pi;
    double zeta;

    static MediativeWeights from(double pi, double zeta) {
        if (!(pi >= 0.0) || !(zeta >= 0.0)) {
            throw ParameterError("hesitation and contradiction must be nonnegative");
        }
        double w2 = pi + zeta / 2.0;
        if (w2 > 1.0 + kDegreeSlack) {
            throw ParameterError("pi + zeta/2 = " + std::to_string(w2) +
                                 " exceeds 1 (weight normalization violated)");
        }
        w2 = std::min(w2, 1.0);
        return {1.0 - w2, w2, pi, zeta};
    }

    static MediativeWeights from(const MediativePair& p) {
        return from(hesitation(p), contradiction(p));
    }
};

/// (1 - pi - zeta/2) a + (pi + zeta/2) b. Throws ParameterError when the
/// weights are not a convex pair.
inline Degree mediative_operator(Degree a, Degree b, double pi, double zeta) {
    const auto w = MediativeWeights::from(pi, zeta);
    return Degree::clamp(w.w1 * a + w.w2 * b);
}

/// Mediative score M(mu, nu) with channels a = mu and b = 1 - nu.
///
/// Note M(0,0) = 1: total ignorance puts all weight on b = 1 - nu.
inline Degree mediative_eval(const MediativePair& p) {
    return mediative_operator(p.mu, Degree::clamp(1.0 - p.nu), hesitation(p), contradiction(p));
}

inline MediativePair pair_and(const MediativePair& p, const MediativePair& q,
                              TNormKind kind = TNormKind::Lukasiewicz) noexcept {
    return {tnorm(kind, p.mu, q.mu), tconorm(kind, p.nu, q.nu)};
}

inline MediativePair pair_or(const MediativePair& p, const MediativePair& q,
                             TNormKind kind = TNormKind::Lukasiewicz) noexcept {
    return {tconorm(kind, p.mu, q.mu), tnorm(kind, p.nu, q.nu)};
}

inline MediativePair pair_not(const MediativePair& p) noexcept { return {p.nu, p.mu}; }

/// (mu1 => mu2, nu2 => nu1) with => the residuum of the chosen t-norm.
inline MediativePair pair_implies(const MediativePair& p, const MediativePair& q,
                                  TNormKind kind = TNormKind::Lukasiewicz) noexcept {
    return {residuum(kind, p.mu, q.mu), residuum(kind, q.nu, p.nu)};
}

namespace detail {

// Piecewise-quadratic closed form of mediative_eval, s = mu + nu:
//   s <= 1: s^2 - mu - 2 nu + 1
//   s >= 1: (-s^2 + 4 mu + 2 nu - 1) / 2
// Used by the envelope solver; tests check it against the definition.
inline double mediative_closed_form(double mu, double nu) noexcept {
    const double s = mu + nu;
    if (s <= 1.0) return s * s - mu - 2.0 * nu + 1.0;
    return (-s * s + 4.0 * mu + 2.0 * nu - 1.0) / 2.0;
}

}  // namespace detail

}  // namespace medilog
