#pragma once

// End-to-end evaluation of one evidence configuration: fuse, evaluate under
// the selected semantics, decide.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medilog/fusion.hpp"
#include "medilog/qmfl.hpp"
#include "medilog/type2.hpp"
#include "medilog/type3.hpp"

namespace medilog {

enum class Mode { T1, T2, T3, Qmfl };

inline std::string_view to_string(Mode m) noexcept {
    switch (m) {
        case Mode::T1: return "t1";
        case Mode::T2: return "t2";
        case Mode::T3: return "t3";
        case Mode::Qmfl: return "qmfl";
    }
    return "t1";
}

inline Mode parse_mode(std::string_view s) {
    if (s == "t1") return Mode::T1;
    if (s == "t2") return Mode::T2;
    if (s == "t3") return Mode::T3;
    if (s == "qmfl") return Mode::Qmfl;
    throw DomainError("unknown mode '" + std::string(s) + "'");
}

/// Type-2 configuration. With `intervals` the envelope is reported; with
/// `sets` the footprints are type-reduced; with `half_width` the fused pair
/// is wrapped in a rectangle; with none, the fused pair is wrapped in crisp
/// footprints and type-reduced.
struct Type2Config {
    std::optional<IntervalPair> intervals;
    std::optional<IT2Pair> sets;
    std::optional<std::pair<double, double>> half_width;
    std::size_t grid_points = kDefaultKmGrid;
};

/// Quantum configuration. Without an explicit triple the fused pair is
/// diag-encoded. shots == 0 evaluates the exact expectation.
struct QuantumConfig {
    std::optional<QuantumTriple> triple;
    std::uint64_t shots = 0;
    double delta = 0.05;
    std::uint64_t seed = 42;
};

struct Scenario {
    std::string label;
    Mode mode = Mode::T1;
    TNormKind tnorm = TNormKind::Lukasiewicz;
    std::vector<Channel> channels;
    std::optional<GranularAssignment> granules;
    Aggregator aggregator = Aggregator::weighted_mean(AggregationLevel::Pair);
    Type2Config type2;
    QuantumConfig quantum;
    Thresholds thresholds;
};

struct DecisionReport {
    std::size_t case_index = 0;
    std::string label;
    Mode mode = Mode::T1;
    TNormKind tnorm = TNormKind::Lukasiewicz;
    MediativePair fused;
    double pi = 0.0;
    double zeta = 0.0;
    double thresholds_brake = 0.7;
    double thresholds_decelerate = 0.5;

    // t1 and type-reduced t2
    std::optional<double> m;
    // t2 envelope mode
    std::optional<IntervalPair> intervals;
    std::optional<Envelope> envelope;
    std::optional<Interval> corners;
    std::optional<Interval> hesitation_bounds;
    std::optional<Interval> contradiction_bounds;
    std::optional<Action> band_action;
    // t3
    std::optional<double> m_g;
    std::optional<AggregationLevel> level;
    // qmfl
    std::optional<double> m_q;
    std::optional<double> estimate;
    std::optional<double> margin;
    std::optional<std::uint64_t> shots;
    std::optional<double> delta;
    std::optional<std::uint64_t> seed;

    Action action = Action::Proceed;

    /// The degree the action was based on (lower envelope end for t2
    /// envelope mode).
    double primary_degree() const {
        if (m) return *m;
        if (envelope) return envelope->m_lo;
        if (m_g) return *m_g;
        if (estimate) return *estimate;
        if (m_q) return *m_q;
        return 0.0;
    }
};

namespace detail {

inline MediativePair fused_pair(const Scenario& s) {
    if (s.channels.empty()) throw InvariantError("scenario '" + s.label + "' has no channels");
    return fuse_channels(s.channels);
}

inline void set_pair(DecisionReport& r, const MediativePair& p) {
    r.fused = p;
    r.pi = hesitation(p);
    r.zeta = contradiction(p);
}

inline GranularAssignment granules_from_channels(const Scenario& s) {
    GranularAssignment a;
    a.algebra = s.tnorm;
    for (const auto& c : s.channels) {
        a.add(Granule{c.name, c.name, "current", "default", false, c.weight},
              {{"p", MediativePair(c.mu, c.nu)}});
    }
    return a;
}

}  // namespace detail

inline DecisionReport run_pipeline(const Scenario& s, std::size_t case_index = 0) {
    s.thresholds.validate();
    DecisionReport r;
    r.case_index = case_index;
    r.label = s.label;
    r.mode = s.mode;
    r.tnorm = s.tnorm;
    r.thresholds_brake = s.thresholds.brake;
    r.thresholds_decelerate = s.thresholds.decelerate;
    const auto& th = s.thresholds;

    try {
        switch (s.mode) {
            case Mode::T1: {
                const auto p = detail::fused_pair(s);
                detail::set_pair(r, p);
                r.m = mediative_eval(p);
                r.action = decide(*r.m, th);
                break;
            }
            case Mode::T2: {
                const auto& cfg = s.type2;
                std::optional<IntervalPair> box = cfg.intervals;
                if (!box && cfg.half_width) {
                    const auto p = detail::fused_pair(s);
                    const auto [hm, hn] = *cfg.half_width;
                    box = IntervalPair(std::max(0.0, p.mu - hm), std::min(1.0, p.mu + hm),
                                       std::max(0.0, p.nu - hn), std::min(1.0, p.nu + hn));
                }
                if (box) {
                    detail::set_pair(r, MediativePair(Degree::clamp(box->mu.mid()), Degree::clamp(box->nu.mid())));
                    r.intervals = box;
                    r.envelope = t2_eval_envelope(*box);
                    r.corners = diagonal_corner_bounds(*box);
                    r.hesitation_bounds = t2_hesitation_bounds(*box);
                    r.contradiction_bounds = t2_contradiction_bounds(*box);
                    r.action = decide_envelope(*r.envelope, th);
                    r.band_action = decide_band(*r.corners, th);
                    break;
                }
                const IT2Pair sets = cfg.sets ? *cfg.sets : [&] {
                    const auto p = detail::fused_pair(s);
                    return IT2Pair{IT2Set::crisp_at(p.mu, cfg.grid_points), IT2Set::crisp_at(p.nu, cfg.grid_points)};
                }();
                const double mu = km_type_reduce(sets.mu, cfg.grid_points).mid();
                const double nu = km_type_reduce(sets.nu, cfg.grid_points).mid();
                detail::set_pair(r, MediativePair(Degree::clamp(mu), Degree::clamp(nu)));
                r.m = mediative_eval(r.fused);
                r.action = decide(*r.m, th);
                break;
            }
            case Mode::T3: {
                GranularAssignment a = s.granules ? *s.granules : detail::granules_from_channels(s);
                a.algebra = s.tnorm;
                const Formula p = Formula::atom("p");
                // Reported pair: weighted mean of the local pairs.
                const auto w = a.normalized_weights();
                double mu = 0.0, nu = 0.0;
                for (std::size_t i = 0; i < a.granules.size(); ++i) {
                    const auto v = evaluate(p, a.reduced_valuation(i, s.type2.grid_points));
                    mu += w[i] * v.mu;
                    nu += w[i] * v.nu;
                }
                detail::set_pair(r, MediativePair(Degree::clamp(mu), Degree::clamp(nu)));
                r.level = s.aggregator.level;
                r.m_g = granular_eval(a, p, s.aggregator, s.type2.grid_points);
                r.action = decide(*r.m_g, th);
                break;
            }
            case Mode::Qmfl: {
                const QuantumTriple t = s.quantum.triple ? *s.quantum.triple : [&] {
                    const auto p = detail::fused_pair(s);
                    return diag_encode(p.mu, p.nu);
                }();
                const auto ch = quantum_channels(t);
                r.fused = ch.pair();
                r.pi = ch.pi;
                r.zeta = ch.zeta;
                r.m_q = quantum_degree(t);
                if (s.quantum.shots == 0) {
                    r.margin = 0.0;
                    r.action = decide_quantum(*r.m_q, 0.0, th);
                } else {
                    const auto est = simulate_shots(t, s.quantum.shots, s.quantum.seed);
                    r.estimate = est.estimate;
                    r.margin = hoeffding_margin(s.quantum.shots, s.quantum.delta);
                    r.shots = s.quantum.shots;
                    r.delta = s.quantum.delta;
                    r.seed = s.quantum.seed;
                    r.action = decide_quantum(est.estimate, *r.margin, th);
                }
                break;
            }
        }
    } catch (const Error& e) {
        throw InvariantError("case " + std::to_string(case_index + 1) + " (" + std::string(to_string(s.mode)) +
                             "): " + e.what());
    }
    return r;
}

}  // namespace medilog
