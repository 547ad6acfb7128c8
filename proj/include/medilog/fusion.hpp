#pragma once

// Channel fusion and safety-first threshold decisions.

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "medilog/mediative.hpp"
#include "medilog/type2.hpp"

namespace medilog {

enum class Action { Proceed, Decelerate, Brake };

inline std::string_view to_string(Action a) noexcept {
    switch (a) {
        case Action::Brake: return "brake";
        case Action::Decelerate: return "decelerate";
        case Action::Proceed: return "proceed";
    }
    return "proceed";
}

/// Degrees within this distance below a threshold count as reaching it, so
/// that rounding in fused inputs (0.5 computed as 0.49999999999999994) never
/// relaxes the action.
inline constexpr double kThresholdTolerance = 1e-9;

struct Thresholds {
    double brake = 0.7;
    double decelerate = 0.5;

    void validate() const {
        (void)Degree(brake);
        (void)Degree(decelerate);
        if (brake < decelerate) throw InvariantError("brake threshold must be >= decelerate threshold");
    }
};

namespace detail {
inline bool reaches(double m, double threshold) { return m >= threshold - kThresholdTolerance; }
}  // namespace detail

inline Action decide(double m, const Thresholds& t = {}) {
    if (detail::reaches(m, t.brake)) return Action::Brake;
    if (detail::reaches(m, t.decelerate)) return Action::Decelerate;
    return Action::Proceed;
}

/// Conservative interval rule: brake only when the lower end clears the
/// brake threshold; an upper end above it (or a lower end above the
/// deceleration threshold) still asks for deceleration.
inline Action decide_envelope(double m_lo, double m_hi, const Thresholds& t = {}) {
    if (detail::reaches(m_lo, t.brake)) return Action::Brake;
    if (detail::reaches(m_hi, t.brake) || detail::reaches(m_lo, t.decelerate)) return Action::Decelerate;
    return Action::Proceed;
}

inline Action decide_envelope(const Envelope& env, const Thresholds& t = {}) {
    return decide_envelope(env.m_lo, env.m_hi, t);
}

/// Band-position reading of an interval: act on where the bulk of the band
/// sits (its midpoint). Reported next to the strict rule, never instead.
inline Action decide_band(const Interval& band, const Thresholds& t = {}) { return decide(band.mid(), t); }

/// Finite-shot rule: brake only if the estimate clears the brake threshold
/// by the margin; decelerate if the threshold for deceleration is within
/// the margin.
inline Action decide_quantum(double estimate, double margin, const Thresholds& t = {}) {
    if (margin < 0.0) throw DomainError("margin must be nonnegative");
    if (detail::reaches(estimate - margin, t.brake)) return Action::Brake;
    if (detail::reaches(estimate + margin, t.decelerate)) return Action::Decelerate;
    return Action::Proceed;
}

struct Channel {
    std::string name;
    double mu;
    double nu;
    double weight;
};

/// Componentwise convex combination of channel pairs.
inline MediativePair fuse_channels(const std::vector<MediativePair>& channels, const std::vector<double>& weights) {
    if (channels.empty()) throw WeightMismatch("no channels to fuse");
    if (channels.size() != weights.size()) {
        throw WeightMismatch(std::to_string(channels.size()) + " channels but " + std::to_string(weights.size()) +
                             " weights");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw WeightMismatch("channel weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw WeightMismatch("channel weights must sum to 1");
    double mu = 0.0;
    double nu = 0.0;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        mu += weights[i] * channels[i].mu;
        nu += weights[i] * channels[i].nu;
    }
    return {Degree(mu), Degree(nu)};
}

inline MediativePair fuse_channels(const std::vector<Channel>& channels) {
    std::vector<MediativePair> pairs;
    std::vector<double> weights;
    for (const auto& c : channels) {
        pairs.emplace_back(c.mu, c.nu);
        weights.push_back(c.weight);
    }
    return fuse_channels(pairs, weights);
}

}  // namespace medilog
