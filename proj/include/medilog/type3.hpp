#pragma once

// Granular (type-3) mediative evaluation: granule-indexed local valuations
// and explicit cross-granule aggregation.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "medilog/formula.hpp"
#include "medilog/type2.hpp"

namespace medilog {

struct Granule {
    std::string id;
    std::string source;
    std::string window;
    std::string context;
    bool trusted = false;
    double weight = 1.0;
};

/// Type-2 local value for one atom.
struct IT2Pair {
    IT2Set mu;
    IT2Set nu;
};

using LocalValue = std::variant<MediativePair, IT2Pair>;

/// Granules with one local valuation per granule.
struct GranularAssignment {
    std::vector<Granule> granules;
    std::vector<std::map<std::string, LocalValue, std::less<>>> values;
    TNormKind algebra = TNormKind::Lukasiewicz;

    void add(Granule g, std::map<std::string, LocalValue, std::less<>> v) {
        granules.push_back(std::move(g));
        values.push_back(std::move(v));
    }

    std::size_t index_of(const std::string& id) const {
        for (std::size_t i = 0; i < granules.size(); ++i) {
            if (granules[i].id == id) return i;
        }
        throw MissingGranule("no granule with id '" + id + "'");
    }

    /// Granule weights scaled to sum to 1.
    std::vector<double> normalized_weights() const {
        std::vector<double> w;
        w.reserve(granules.size());
        for (const auto& g : granules) {
            if (!(g.weight >= 0.0)) throw WeightMismatch("granule weights must be nonnegative");
            w.push_back(g.weight);
        }
        const double sum = std::accumulate(w.begin(), w.end(), 0.0);
        if (!(sum > 0.0)) throw WeightMismatch("granule weights sum to zero");
        for (double& x : w) x /= sum;
        return w;
    }

    /// Type-1 view of granule i: type-2 atoms are type-reduced to midpoints.
    Valuation reduced_valuation(std::size_t i, std::size_t grid_points = kDefaultKmGrid) const {
        Valuation v;
        v.algebra = algebra;
        for (const auto& [atom, local] : values.at(i)) {
            if (const auto* p = std::get_if<MediativePair>(&local)) {
                v.atoms[atom] = *p;
            } else {
                const auto& t2 = std::get<IT2Pair>(local);
                v.atoms[atom] = MediativePair(Degree::clamp(km_type_reduce(t2.mu, grid_points).mid()),
                                              Degree::clamp(km_type_reduce(t2.nu, grid_points).mid()));
            }
        }
        return v;
    }
};

enum class AggregationLevel { Score, Pair };

struct Aggregator;

/// A hierarchy group: its members are aggregated by `inner` before the
/// parent combines the group results.
struct AggregatorGroup {
    std::vector<std::size_t> members;
    std::shared_ptr<const Aggregator> inner;
};

struct Aggregator {
    struct WeightedMean {};
    struct Owa {
        std::vector<double> weights;
    };
    struct Hierarchical {
        std::vector<AggregatorGroup> groups;
        std::shared_ptr<const Aggregator> top;
    };
    struct TrustedDominance {
        double threshold = 0.7;
    };

    std::variant<WeightedMean, Owa, Hierarchical, TrustedDominance> kind = WeightedMean{};
    AggregationLevel level = AggregationLevel::Score;

    static Aggregator weighted_mean(AggregationLevel l = AggregationLevel::Score) { return {WeightedMean{}, l}; }
    static Aggregator owa(std::vector<double> w, AggregationLevel l = AggregationLevel::Score) {
        return {Owa{std::move(w)}, l};
    }
    static Aggregator trusted_dominance(double tau, AggregationLevel l = AggregationLevel::Score) {
        return {TrustedDominance{tau}, l};
    }
    static Aggregator hierarchical(std::vector<AggregatorGroup> groups, Aggregator top,
                                   AggregationLevel l = AggregationLevel::Score) {
        return {Hierarchical{std::move(groups), std::make_shared<const Aggregator>(std::move(top))}, l};
    }
};

/// Scores (or one pair coordinate) to aggregate, with the per-granule
/// weights and trust flags they came from.
struct Family {
    std::vector<double> values;
    std::vector<double> weights;
    std::vector<bool> trusted;

    static Family uniform(std::vector<double> values) {
        const std::size_t n = values.size();
        return {std::move(values), std::vector<double>(n, n ? 1.0 / static_cast<double>(n) : 0.0),
                std::vector<bool>(n, false)};
    }

    Family subset(const std::vector<std::size_t>& idx) const {
        Family f;
        for (std::size_t i : idx) {
            if (i >= values.size()) throw WeightMismatch("hierarchy member index out of range");
            f.values.push_back(values[i]);
            f.weights.push_back(weights[i]);
            f.trusted.push_back(trusted[i]);
        }
        return f;
    }
};

namespace detail {

inline void check_family(const Family& f) {
    if (f.values.empty()) throw EmptyFamily("cannot aggregate an empty family");
    if (f.weights.size() != f.values.size() || f.trusted.size() != f.values.size()) {
        throw WeightMismatch("weights/trust flags do not match family size");
    }
}

inline double weighted_mean(const Family& f) {
    double sum = 0.0;
    double num = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (!(f.weights[i] >= 0.0)) throw WeightMismatch("weights must be nonnegative");
        num += f.weights[i] * f.values[i];
        sum += f.weights[i];
    }
    if (!(sum > 0.0)) throw WeightMismatch("weights sum to zero");
    return num / sum;
}

inline double owa(const Family& f, const std::vector<double>& w) {
    if (w.size() != f.values.size()) {
        throw WeightMismatch("OWA has " + std::to_string(w.size()) + " weights for " +
                             std::to_string(f.values.size()) + " values");
    }
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    if (std::any_of(w.begin(), w.end(), [](double x) { return !(x >= 0.0); }) || std::abs(sum - 1.0) > 1e-9) {
        throw WeightMismatch("OWA weights must be nonnegative and sum to 1");
    }
    std::vector<double> sorted = f.values;
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
    double out = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) out += w[i] * sorted[i];
    return out;
}

}  // namespace detail

/// Combines a family of scores into one degree.
///
/// WeightedMean uses the family weights; OWA sorts values descending before
/// weighting; Hierarchical aggregates each group with its inner aggregator
/// and then the group results (weighted by total member weight, trusted if
/// any member is) with the top aggregator; TrustedDominance returns
/// max(weighted mean, max{v_i : i trusted, v_i >= tau}).
inline double aggregate(const Family& f, const Aggregator& agg) {
    detail::check_family(f);
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Aggregator::WeightedMean>) {
                return detail::weighted_mean(f);
            } else if constexpr (std::is_same_v<K, Aggregator::Owa>) {
                return detail::owa(f, k.weights);
            } else if constexpr (std::is_same_v<K, Aggregator::TrustedDominance>) {
                double out = detail::weighted_mean(f);
                for (std::size_t i = 0; i < f.values.size(); ++i) {
                    if (f.trusted[i] && f.values[i] >= k.threshold) out = std::max(out, f.values[i]);
                }
                return out;
            } else {
                if (k.groups.empty() || !k.top) throw EmptyFamily("hierarchy has no groups");
                std::vector<std::size_t> seen(f.values.size(), 0);
                Family upper;
                for (const auto& g : k.groups) {
                    if (!g.inner) throw EmptyFamily("hierarchy group without aggregator");
                    for (std::size_t i : g.members) {
                        if (i >= seen.size()) throw WeightMismatch("hierarchy member index out of range");
                        ++seen[i];
                    }
                    const Family sub = f.subset(g.members);
                    upper.values.push_back(aggregate(sub, *g.inner));
                    upper.weights.push_back(std::accumulate(sub.weights.begin(), sub.weights.end(), 0.0));
                    upper.trusted.push_back(std::any_of(sub.trusted.begin(), sub.trusted.end(),
                                                        [](bool t) { return t; }));
                }
                if (std::any_of(seen.begin(), seen.end(), [](std::size_t c) { return c != 1; })) {
                    throw WeightMismatch("hierarchy groups must partition the granules");
                }
                return aggregate(upper, *k.top);
            }
        },
        agg.kind);
}

inline Family granule_family(const GranularAssignment& a, std::vector<double> values) {
    Family f;
    f.values = std::move(values);
    f.weights = a.normalized_weights();
    for (const auto& g : a.granules) f.trusted.push_back(g.trusted);
    return f;
}

/// Local score of one granule: evaluate the formula on the granule's
/// (type-reduced) valuation and apply M.
inline Degree local_eval(const GranularAssignment& a, const std::string& granule_id, const Formula& f,
                         std::size_t grid_points = kDefaultKmGrid) {
    const std::size_t i = a.index_of(granule_id);
    return m_degree(f, a.reduced_valuation(i, grid_points));
}

/// Global degree M_G. Score level aggregates the local scores. Pair level
/// aggregates the local (mu, nu) pairs coordinatewise with the same
/// aggregator and applies M once; under TrustedDominance the pair-level
/// result is additionally lifted by qualifying trusted local scores.
inline Degree granular_eval(const GranularAssignment& a, const Formula& f, const Aggregator& agg,
                            std::size_t grid_points = kDefaultKmGrid) {
    if (a.granules.empty()) throw EmptyFamily("granular assignment has no granules");
    if (a.values.size() != a.granules.size()) throw MissingGranule("granule without local valuation");
    std::vector<MediativePair> pairs;
    std::vector<double> scores;
    for (std::size_t i = 0; i < a.granules.size(); ++i) {
        pairs.push_back(evaluate(f, a.reduced_valuation(i, grid_points)));
        scores.push_back(mediative_eval(pairs.back()));
    }
    if (agg.level == AggregationLevel::Score) {
        return Degree::clamp(aggregate(granule_family(a, scores), agg));
    }
    std::vector<double> mus, nus;
    for (const auto& p : pairs) {
        mus.push_back(p.mu);
        nus.push_back(p.nu);
    }
    Aggregator coordinatewise = agg;
    if (std::holds_alternative<Aggregator::TrustedDominance>(agg.kind)) coordinatewise.kind = Aggregator::WeightedMean{};
    const MediativePair fused(Degree::clamp(aggregate(granule_family(a, mus), coordinatewise)),
                              Degree::clamp(aggregate(granule_family(a, nus), coordinatewise)));
    double m = mediative_eval(fused);
    if (const auto* td = std::get_if<Aggregator::TrustedDominance>(&agg.kind)) {
        for (std::size_t i = 0; i < scores.size(); ++i) {
            if (a.granules[i].trusted && scores[i] >= td->threshold) m = std::max(m, scores[i]);
        }
    }
    return Degree::clamp(m);
}

}  // namespace medilog
