#pragma once

// The three obstacle-detection evidence configurations (radar/LiDAR and
// camera), with the interval half-widths used for the type-2 reading.

#include <array>
#include <string>
#include <vector>

#include "medilog/pipeline.hpp"

namespace medilog {

struct ReferenceCase {
    std::string label;
    Channel radar;
    Channel camera;
    double alpha;           // weight of the radar channel
    double mu_half_width;   // type-2 rectangle around the fused pair
    double nu_half_width;
};

inline std::vector<ReferenceCase> reference_cases() {
    return {
        {"incomplete", {"radar", 0.80, 0.10, 0.7}, {"camera", 0.40, 0.20, 0.3}, 0.7, 0.03, 0.03},
        {"symmetric-conflict", {"radar", 0.90, 0.10, 0.5}, {"camera", 0.10, 0.90, 0.5}, 0.5, 0.05, 0.05},
        {"overdetermined", {"radar", 0.95, 0.05, 0.7}, {"camera", 0.20, 0.90, 0.3}, 0.7, 0.03, 0.03},
    };
}

/// Scenario for one reference case under the given mode: crisp footprints
/// for t2 (or the rectangle when `envelope` is set), pair-level weighted
/// granules for t3, diagonal encoding for qmfl.
inline Scenario reference_scenario(const ReferenceCase& c, Mode mode, bool envelope = false) {
    Scenario s;
    s.label = c.label;
    s.mode = mode;
    s.channels = {c.radar, c.camera};
    s.channels[0].weight = c.alpha;
    s.channels[1].weight = 1.0 - c.alpha;
    if (mode == Mode::T2 && envelope) s.type2.half_width = std::pair{c.mu_half_width, c.nu_half_width};
    if (mode == Mode::T3) s.aggregator = Aggregator::weighted_mean(AggregationLevel::Pair);
    return s;
}

}  // namespace medilog
