#pragma once

// Interval type-2 mediative semantics.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "medilog/mediative.hpp"

namespace medilog {

/// Piecewise-linear membership function on [0,1]: linear between
/// breakpoints, constant beyond the first and last one.
class PiecewiseLinear {
public:
    struct Point {
        double x;
        double y;
    };

    PiecewiseLinear() = default;

    explicit PiecewiseLinear(std::vector<Point> points) : points_(std::move(points)) {
        if (points_.empty()) throw DomainError("membership function needs at least one breakpoint");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            auto& p = points_[i];
            if (!(p.x >= 0.0 && p.x <= 1.0)) throw DomainError("breakpoint x outside [0,1]");
            p.y = Degree(p.y);
            if (i > 0 && !(p.x > points_[i - 1].x)) {
                throw DomainError("breakpoints must be strictly increasing in x");
            }
        }
    }

    /// Trapezoid 0 at a, rising to `height` on [b,c], back to 0 at d.
    /// A vertical edge is only representable at the domain boundary, so
    /// a == b requires a == 0 and c == d requires d == 1.
    static PiecewiseLinear trapezoid(double a, double b, double c, double d, double height = 1.0) {
        if (!(0.0 <= a && a <= b && b <= c && c <= d && d <= 1.0)) {
            throw DomainError("trapezoid needs 0 <= a <= b <= c <= d <= 1");
        }
        if ((a == b && a != 0.0) || (c == d && d != 1.0)) {
            throw DomainError("trapezoid edges may only be vertical at 0 or 1");
        }
        std::vector<Point> pts;
        if (a < b) pts.push_back({a, 0.0});
        pts.push_back({b, height});
        if (c > b) pts.push_back({c, height});
        if (d > c) pts.push_back({d, 0.0});
        return PiecewiseLinear(std::move(pts));
    }

    static PiecewiseLinear triangle(double a, double peak, double d, double height = 1.0) {
        return trapezoid(a, peak, peak, d, height);
    }

    static PiecewiseLinear constant(double y) { return PiecewiseLinear({{0.0, y}}); }

    double operator()(double x) const noexcept {
        if (x <= points_.front().x) return points_.front().y;
        if (x >= points_.back().x) return points_.back().y;
        auto it = std::upper_bound(points_.begin(), points_.end(), x,
                                   [](double v, const Point& p) { return v < p.x; });
        const Point& r = *it;
        const Point& l = *(it - 1);
        const double t = (x - l.x) / (r.x - l.x);
        return l.y + t * (r.y - l.y);
    }

    const std::vector<Point>& points() const noexcept { return points_; }

    /// Breakpoints extended with explicit values at 0 and 1.
    std::vector<Point> closed_points() const {
        std::vector<Point> out;
        if (points_.front().x > 0.0) out.push_back({0.0, points_.front().y});
        out.insert(out.end(), points_.begin(), points_.end());
        if (points_.back().x < 1.0) out.push_back({1.0, points_.back().y});
        return out;
    }

    bool identically_zero() const noexcept {
        return std::all_of(points_.begin(), points_.end(), [](const Point& p) { return p.y == 0.0; });
    }

private:
    std::vector<Point> points_;
};

/// Interval type-2 fuzzy set: the footprint between lower and upper
/// membership functions.
class IT2Set {
public:
    IT2Set(PiecewiseLinear lower, PiecewiseLinear upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
        // The difference is piecewise linear with kinks only at breakpoints
        // of either function, so checking the union of breakpoints suffices.
        for (const auto* f : {&lower_, &upper_}) {
            for (const auto& p : f->closed_points()) {
                if (lower_(p.x) > upper_(p.x) + 1e-12) {
                    throw DomainError("lower membership exceeds upper at x = " + std::to_string(p.x));
                }
            }
        }
    }

    /// Type-1 set viewed as a degenerate footprint.
    static IT2Set crisp(PiecewiseLinear f) { return IT2Set(f, f); }

    /// Crisp set whose discretized centroid on a `grid_points` grid is
    /// exactly `value`: a triangle of half-width one grid step.
    static IT2Set crisp_at(double value, std::size_t grid_points = 1001) {
        value = Degree(value);
        const double step = 1.0 / static_cast<double>(grid_points - 1);
        std::vector<PiecewiseLinear::Point> pts;
        if (value - step > 0.0) pts.push_back({value - step, 0.0});
        else if (value > 0.0) pts.push_back({0.0, 1.0 - value / step});
        pts.push_back({value, 1.0});
        if (value + step < 1.0) pts.push_back({value + step, 0.0});
        else if (value < 1.0) pts.push_back({1.0, 1.0 - (1.0 - value) / step});
        return crisp(PiecewiseLinear(std::move(pts)));
    }

    const PiecewiseLinear& lower() const noexcept { return lower_; }
    const PiecewiseLinear& upper() const noexcept { return upper_; }

private:
    PiecewiseLinear lower_;
    PiecewiseLinear upper_;
};

inline bool fou_contains(const IT2Set& s, double x, double u) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x outside [0,1]");
    return s.lower()(x) <= u && u <= s.upper()(x);
}

struct Interval {
    double lo;
    double hi;

    double mid() const noexcept { return 0.5 * (lo + hi); }
    double width() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Projection of a footprint onto the degree axis.
struct Projection {
    enum class Mode { Outer, Inner, Alpha };
    Mode mode = Mode::Outer;
    double alpha = 1.0;

    static Projection outer() { return {Mode::Outer, 0.0}; }
    static Projection inner() { return {Mode::Inner, 0.0}; }
    static Projection alpha_cut(double a) { return {Mode::Alpha, a}; }
};

namespace detail {

/// Hull of {x : f(x) > 0} (strict) or {x : f(x) >= level}.
inline std::optional<Interval> level_set_hull(const PiecewiseLinear& f, double level, bool strict) {
    const auto pts = f.closed_points();
    auto in = [&](double y) { return strict ? y > level : y >= level; };
    std::optional<double> lo;
    std::optional<double> hi;
    if (pts.size() == 1) {
        if (in(pts[0].y)) return Interval{0.0, 1.0};
        return std::nullopt;
    }
    for (std::size_t i = 0; i + 1 < pts.size() && !lo; ++i) {
        const auto& a = pts[i];
        const auto& b = pts[i + 1];
        if (in(a.y)) lo = a.x;
        else if (in(b.y)) lo = strict ? a.x : a.x + (level - a.y) / (b.y - a.y) * (b.x - a.x);
    }
    for (std::size_t i = pts.size() - 1; i > 0 && !hi; --i) {
        const auto& b = pts[i];
        const auto& a = pts[i - 1];
        if (in(b.y)) hi = b.x;
        else if (in(a.y)) hi = strict ? b.x : b.x - (level - b.y) / (a.y - b.y) * (b.x - a.x);
    }
    if (!lo || !hi) return std::nullopt;
    return Interval{*lo, *hi};
}

}  // namespace detail

/// Outer: support of the upper function. Inner: support of the lower
/// function. Alpha: {x : upper(x) >= alpha}.
inline Interval project(const IT2Set& s, Projection mode) {
    std::optional<Interval> r;
    switch (mode.mode) {
        case Projection::Mode::Outer: r = detail::level_set_hull(s.upper(), 0.0, true); break;
        case Projection::Mode::Inner: r = detail::level_set_hull(s.lower(), 0.0, true); break;
        case Projection::Mode::Alpha:
            if (!(mode.alpha > 0.0 && mode.alpha <= 1.0)) throw DomainError("alpha must be in (0,1]");
            r = detail::level_set_hull(s.upper(), mode.alpha, false);
            break;
    }
    if (!r) throw EmptyProjection("projection of footprint is empty");
    return *r;
}

/// Scalar interval bounds on truth and falsity.
struct IntervalPair {
    Interval mu;
    Interval nu;

    IntervalPair() = default;
    IntervalPair(Interval m, Interval n) : mu(m), nu(n) { validate(); }
    IntervalPair(double mu_lo, double mu_hi, double nu_lo, double nu_hi)
        : IntervalPair(Interval{mu_lo, mu_hi}, Interval{nu_lo, nu_hi}) {}

    static IntervalPair degenerate(const MediativePair& p) { return {p.mu, p.mu, p.nu, p.nu}; }

    MediativePair lower_corner() const { return {mu.lo, nu.lo}; }

    friend bool operator==(const IntervalPair&, const IntervalPair&) = default;

private:
    void validate() {
        for (Interval* i : {&mu, &nu}) {
            i->lo = Degree(i->lo);
            i->hi = Degree(i->hi);
            if (i->lo > i->hi) throw DomainError("interval lower bound exceeds upper bound");
        }
    }
};

inline IntervalPair it2_and(const IntervalPair& p, const IntervalPair& q, TNormKind k = TNormKind::Lukasiewicz) {
    auto T = [k](double a, double b) { return tnorm(k, Degree::clamp(a), Degree::clamp(b)).value(); };
    auto S = [k](double a, double b) { return tconorm(k, Degree::clamp(a), Degree::clamp(b)).value(); };
    return {T(p.mu.lo, q.mu.lo), T(p.mu.hi, q.mu.hi), S(p.nu.lo, q.nu.lo), S(p.nu.hi, q.nu.hi)};
}

inline IntervalPair it2_or(const IntervalPair& p, const IntervalPair& q, TNormKind k = TNormKind::Lukasiewicz) {
    auto T = [k](double a, double b) { return tnorm(k, Degree::clamp(a), Degree::clamp(b)).value(); };
    auto S = [k](double a, double b) { return tconorm(k, Degree::clamp(a), Degree::clamp(b)).value(); };
    return {S(p.mu.lo, q.mu.lo), S(p.mu.hi, q.mu.hi), T(p.nu.lo, q.nu.lo), T(p.nu.hi, q.nu.hi)};
}

inline IntervalPair it2_not(const IntervalPair& p) { return {p.nu, p.mu}; }

/// The residuum is antitone in its antecedent and monotone in its
/// consequent; bounds pick the worst/best endpoint combinations.
inline IntervalPair it2_implies(const IntervalPair& p, const IntervalPair& q,
                                TNormKind k = TNormKind::Lukasiewicz) {
    auto R = [k](double a, double b) { return residuum(k, Degree::clamp(a), Degree::clamp(b)).value(); };
    return {R(p.mu.hi, q.mu.lo), R(p.mu.lo, q.mu.hi), R(q.nu.hi, p.nu.lo), R(q.nu.lo, p.nu.hi)};
}

inline Interval t2_hesitation_bounds(const IntervalPair& p) {
    return {std::max(0.0, 1.0 - p.mu.hi - p.nu.hi), std::max(0.0, 1.0 - p.mu.lo - p.nu.lo)};
}

inline Interval t2_contradiction_bounds(const IntervalPair& p) {
    return {std::max(0.0, p.mu.lo + p.nu.lo - 1.0), std::max(0.0, p.mu.hi + p.nu.hi - 1.0)};
}

inline constexpr std::size_t kDefaultKmGrid = 1001;
inline constexpr int kKmMaxIterations = 100;

/// Discretized footprint: x_i on a uniform grid with lower/upper memberships.
struct DiscreteFou {
    std::vector<double> x;
    std::vector<double> lower;
    std::vector<double> upper;

    static DiscreteFou sample(const IT2Set& s, std::size_t grid_points) {
        if (grid_points < 3) throw DomainError("type reduction needs at least 3 grid points");
        DiscreteFou d;
        d.x.resize(grid_points);
        d.lower.resize(grid_points);
        d.upper.resize(grid_points);
        for (std::size_t i = 0; i < grid_points; ++i) {
            d.x[i] = static_cast<double>(i) / static_cast<double>(grid_points - 1);
            d.lower[i] = s.lower()(d.x[i]);
            d.upper[i] = s.upper()(d.x[i]);
        }
        return d;
    }

    std::size_t size() const noexcept { return x.size(); }

    /// Centroid of the embedded set taking `left` memberships at indices
    /// < k and `right` memberships at indices >= k. nullopt if massless.
    std::optional<double> switched_centroid(std::size_t k, bool upper_left) const {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < size(); ++i) {
            const bool left = i < k;
            const double w = (left == upper_left) ? upper[i] : lower[i];
            num += x[i] * w;
            den += w;
        }
        if (den <= 0.0) return std::nullopt;
        return num / den;
    }
};

namespace detail {

// Karnik-Mendel iteration for one endpoint. For the left endpoint the
// minimizing embedded set uses upper memberships left of the switch
// point; for the right endpoint, lower memberships on the left.
inline double km_endpoint(const DiscreteFou& d, bool left_endpoint) {
    const std::size_t n = d.size();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.5 * (d.lower[i] + d.upper[i]);
        num += d.x[i] * w;
        den += w;
    }
    double c = num / den;
    std::size_t k_prev = n + 1;
    for (int iter = 0; iter < kKmMaxIterations; ++iter) {
        // k = number of grid points with x <= c
        const auto k = static_cast<std::size_t>(std::upper_bound(d.x.begin(), d.x.end(), c) - d.x.begin());
        if (k == k_prev) return c;
        k_prev = k;
        const auto next = d.switched_centroid(k, left_endpoint);
        if (!next) return c;
        c = *next;
    }
    throw NoConvergence("Karnik-Mendel iteration did not converge");
}

}  // namespace detail

/// Centroid interval [c_l, c_r] of the footprint on a uniform grid.
inline Interval km_type_reduce(const IT2Set& s, std::size_t grid_points = kDefaultKmGrid) {
    const auto d = DiscreteFou::sample(s, grid_points);
    double upper_mass = 0.0;
    for (double u : d.upper) upper_mass += u;
    if (!(upper_mass > 0.0)) throw EmptySet("footprint has no upper membership mass");
    const double cl = detail::km_endpoint(d, true);
    const double cr = detail::km_endpoint(d, false);
    return {std::min(cl, cr), std::max(cl, cr)};
}

/// Type-reduce both footprints, take midpoints, evaluate M.
inline Degree t2_eval_type_reduced(const IT2Set& mu_set, const IT2Set& nu_set,
                                   std::size_t grid_points = kDefaultKmGrid) {
    const double mu = km_type_reduce(mu_set, grid_points).mid();
    const double nu = km_type_reduce(nu_set, grid_points).mid();
    return mediative_eval({Degree::clamp(mu), Degree::clamp(nu)});
}

/// Exact range of M over a rectangle, with the points attaining it.
struct Envelope {
    double m_lo = 0.0;
    double m_hi = 0.0;
    MediativePair argmin;
    MediativePair argmax;
};

namespace detail {

struct EnvelopeAccumulator {
    Envelope env{2.0, -1.0, {}, {}};

    void visit(double mu, double nu) {
        const MediativePair p(Degree::clamp(mu), Degree::clamp(nu));
        const double m = mediative_eval(p);
        if (m < env.m_lo) {
            env.m_lo = m;
            env.argmin = p;
        }
        if (m > env.m_hi) {
            env.m_hi = m;
            env.argmax = p;
        }
    }
};

// M restricted to a segment is quadratic on each side of mu + nu = 1. Split
// the segment there and add the vertex of each quadratic piece when it
// falls inside; M has no interior stationary points, so these boundary
// candidates contain both extrema.
inline void visit_edge(EnvelopeAccumulator& acc, double mu0, double nu0, double mu1, double nu1) {
    // Interpolated points are kept on the segment despite rounding.
    auto at = [&](double t) {
        return std::pair{std::clamp(mu0 + t * (mu1 - mu0), std::min(mu0, mu1), std::max(mu0, mu1)),
                         std::clamp(nu0 + t * (nu1 - nu0), std::min(nu0, nu1), std::max(nu0, nu1))};
    };
    std::vector<double> cuts{0.0, 1.0};
    const double s0 = mu0 + nu0;
    const double s1 = mu1 + nu1;
    if ((s0 - 1.0) * (s1 - 1.0) < 0.0) cuts.push_back((1.0 - s0) / (s1 - s0));
    std::sort(cuts.begin(), cuts.end());
    for (double t : cuts) {
        const auto [m, n] = at(t);
        acc.visit(m, n);
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        if (b - a <= 0.0) continue;
        // Fit q(t) = c2 t^2 + c1 t + c0 through three points of the piece;
        // exact because the piece is a single quadratic.
        auto f = [&](double t) {
            const auto [m, n] = at(t);
            return mediative_closed_form(m, n);
        };
        const double h = b - a;
        const double fa = f(a);
        const double fm = f(a + 0.5 * h);
        const double fb = f(b);
        const double c2 = 2.0 * (fa - 2.0 * fm + fb) / (h * h);
        const double c1 = (fb - fa) / h - c2 * (a + b);
        if (std::abs(c2) < 1e-15) continue;
        const double tv = -c1 / (2.0 * c2);
        if (tv > a && tv < b) {
            const auto [m, n] = at(tv);
            acc.visit(m, n);
        }
    }
}

}  // namespace detail

/// min/max of M over [mu.lo, mu.hi] x [nu.lo, nu.hi].
inline Envelope t2_eval_envelope(const IntervalPair& p) {
    detail::EnvelopeAccumulator acc;
    const double a = p.mu.lo, b = p.mu.hi, c = p.nu.lo, d = p.nu.hi;
    detail::visit_edge(acc, a, c, b, c);  // nu = nu_lo
    detail::visit_edge(acc, a, d, b, d);  // nu = nu_hi
    detail::visit_edge(acc, a, c, a, d);  // mu = mu_lo
    detail::visit_edge(acc, b, c, b, d);  // mu = mu_hi
    return acc.env;
}

/// [M(mu_lo, nu_hi), M(mu_hi, nu_lo)]: the pessimistic and optimistic
/// diagonal corners. A reading of the rectangle, not its true range.
inline Interval diagonal_corner_bounds(const IntervalPair& p) {
    return {mediative_eval({Degree::clamp(p.mu.lo), Degree::clamp(p.nu.hi)}),
            mediative_eval({Degree::clamp(p.mu.hi), Degree::clamp(p.nu.lo)})};
}

}  // namespace medilog
