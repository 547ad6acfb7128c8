#pragma once

// Grid-based semantic checks: validity, entailment, and a paraconsistency
// witness search. These explore the semantics empirically; they are not a
// proof system.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medilog/formula.hpp"

namespace medilog {

/// What counts as "fully true" for a formula under a valuation.
enum class Designation {
    MDegree,      // M(v(f)) = 1
    MuCoordinate  // first coordinate of v(f) = 1
};

inline std::string_view to_string(Designation d) noexcept {
    return d == Designation::MDegree ? "m" : "mu";
}

inline Designation parse_designation(std::string_view s) {
    if (s == "m" || s == "m-degree") return Designation::MDegree;
    if (s == "mu" || s == "mu-coordinate") return Designation::MuCoordinate;
    throw DomainError("unknown designation '" + std::string(s) + "'");
}

inline constexpr double kDesignationTolerance = 1e-12;
inline constexpr std::size_t kMaxCheckedAtoms = 4;

inline bool is_designated(const MediativePair& value, Designation d) {
    const double x = d == Designation::MDegree ? mediative_eval(value).value() : value.mu.value();
    return x >= 1.0 - kDesignationTolerance;
}

struct ValidityReport {
    enum class Verdict { ValidOnGrid, Counterexample };

    Designation designation = Designation::MDegree;
    std::size_t grid_points = 0;
    Verdict verdict = Verdict::ValidOnGrid;
    std::optional<Valuation> witness;
    /// Smallest M-degree of the conclusion over the inspected valuations.
    double min_m_degree = std::numeric_limits<double>::infinity();
    /// Largest M-degree of the conclusion over the inspected valuations.
    double max_m_degree = -std::numeric_limits<double>::infinity();
    /// Valuations that designated every premise (all of them for validity).
    std::size_t valuations_checked = 0;

    bool holds() const noexcept { return verdict == Verdict::ValidOnGrid; }
};

namespace detail {

/// Visits every valuation of `atoms` over the uniform grid in lexicographic
/// order: atoms by name, then mu index, then nu index, with the first atom
/// varying slowest.
template <class Visit>
void for_each_grid_valuation(const std::vector<std::string>& atoms, std::size_t n, TNormKind algebra,
                             Visit&& visit) {
    if (n < 2) throw DomainError("grid needs at least 2 points per coordinate");
    const std::size_t coords = atoms.size() * 2;
    std::vector<std::size_t> idx(coords, 0);
    Valuation v;
    v.algebra = algebra;
    auto level = [n](std::size_t i) { return Degree::clamp(static_cast<double>(i) / static_cast<double>(n - 1)); };
    for (;;) {
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            v.atoms[atoms[a]] = MediativePair(level(idx[2 * a]), level(idx[2 * a + 1]));
        }
        if (!visit(static_cast<const Valuation&>(v))) return;
        std::size_t c = coords;
        while (c > 0) {
            --c;
            if (++idx[c] < n) break;
            idx[c] = 0;
            if (c == 0) return;
        }
        if (coords == 0) return;
    }
}

inline std::vector<std::string> atoms_of(const std::vector<Formula>& fs) {
    std::set<std::string> all;
    for (const auto& f : fs) f.collect_atoms(all);
    return {all.begin(), all.end()};
}

}  // namespace detail

/// Checks premises |= conclusion on the grid: every valuation designating
/// all premises must designate the conclusion. The first counterexample in
/// lexicographic order is kept as the witness.
inline ValidityReport check_entailment(const std::vector<Formula>& premises, const Formula& conclusion,
                                       std::size_t grid_points, Designation designation,
                                       TNormKind algebra = TNormKind::Lukasiewicz) {
    std::vector<Formula> all = premises;
    all.push_back(conclusion);
    const auto atoms = detail::atoms_of(all);
    if (atoms.size() > kMaxCheckedAtoms) {
        throw TooManyAtoms("grid check supports at most " + std::to_string(kMaxCheckedAtoms) +
                           " atoms, formula has " + std::to_string(atoms.size()));
    }
    ValidityReport report;
    report.designation = designation;
    report.grid_points = grid_points;
    detail::for_each_grid_valuation(atoms, grid_points, algebra, [&](const Valuation& v) {
        for (const auto& p : premises) {
            if (!is_designated(evaluate(p, v), designation)) return true;
        }
        ++report.valuations_checked;
        const auto value = evaluate(conclusion, v);
        const double m = mediative_eval(value);
        report.min_m_degree = std::min(report.min_m_degree, m);
        report.max_m_degree = std::max(report.max_m_degree, m);
        if (!report.witness && !is_designated(value, designation)) {
            report.verdict = ValidityReport::Verdict::Counterexample;
            report.witness = v;
        }
        return true;
    });
    return report;
}

inline ValidityReport check_validity(const Formula& f, std::size_t grid_points, Designation designation,
                                     TNormKind algebra = TNormKind::Lukasiewicz) {
    return check_entailment({}, f, grid_points, designation, algebra);
}

/// Searches the contradictory half of the diagonal (mu = nu >= 0.5) for the
/// valuation of a single atom `p` maximizing min(M(v(p)), M(v(~p))); returns
/// it if that minimum reaches `threshold`. The simultaneous maximum there is
/// 0.625 at (0.75, 0.75). The ignorance corner (0, 0) scores 1 on both sides
/// but carries no conflicting evidence, so it is excluded.
inline std::optional<Valuation> paraconsistency_probe(double threshold, std::size_t scan_points = 1001) {
    const Formula p = Formula::atom("p");
    const Formula np = Formula::negation(p);
    std::optional<Valuation> best;
    double best_score = -1.0;
    for (std::size_t i = 0; i < scan_points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(scan_points - 1);
        if (2.0 * t < 1.0) continue;
        Valuation v;
        v.set("p", {t, t});
        const double score = std::min(m_degree(p, v).value(), m_degree(np, v).value());
        if (score > best_score) {
            best_score = score;
            best = v;
        }
    }
    if (best_score + kDesignationTolerance < threshold) return std::nullopt;
    return best;
}

/// The three axiom schemata for Med, instantiated on atoms p and q.
struct NamedFormula {
    std::string name;
    Formula formula;
};

inline std::vector<NamedFormula> med_axiom_templates() {
    return {
        {"Med1", parse("(p -> q) -> (Med(p) -> Med(q))")},
        {"Med2a", parse("Med(top) <-> top")},
        {"Med2b", parse("Med(bot) <-> bot")},
        {"Med3", parse("(p <-> q) -> (Med(p) <-> Med(q))")},
    };
}

}  // namespace medilog
