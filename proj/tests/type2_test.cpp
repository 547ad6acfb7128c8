#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace medilog;
using namespace medilog::testing;

IntervalPair box(double a, double b, double c, double d) { return IntervalPair(a, b, c, d); }

TEST(PiecewiseLinear, ValidatesBreakpoints) {
    EXPECT_THROW(PiecewiseLinear({{0.5, 0.2}, {0.4, 0.3}}), DomainError);
    EXPECT_THROW(PiecewiseLinear({{0.5, 0.2}, {0.5, 0.3}}), DomainError);
    EXPECT_THROW(PiecewiseLinear({{1.2, 0.2}}), DomainError);
    EXPECT_THROW(PiecewiseLinear({{0.5, 1.5}}), DomainError);
    EXPECT_THROW(PiecewiseLinear(std::vector<PiecewiseLinear::Point>{}), DomainError);
    const PiecewiseLinear f({{0.2, 0.0}, {0.4, 1.0}});
    EXPECT_DOUBLE_EQ(f(0.0), 0.0);
    EXPECT_DOUBLE_EQ(f(0.3), 0.5);
    EXPECT_DOUBLE_EQ(f(0.9), 1.0);
}

TEST(IT2Set, RejectsLowerAboveUpper) {
    EXPECT_THROW(IT2Set(PiecewiseLinear::constant(0.6), PiecewiseLinear::constant(0.5)), DomainError);
    // Crossing between breakpoints of different functions.
    EXPECT_THROW(IT2Set(PiecewiseLinear({{0.0, 0.0}, {1.0, 1.0}}), PiecewiseLinear({{0.5, 0.4}})), DomainError);
}

TEST(FouContains, Examples) {
    const auto crisp = IT2Set::crisp(PiecewiseLinear::triangle(0.3, 0.5, 0.7));
    EXPECT_TRUE(fou_contains(crisp, 0.5, 1.0));
    EXPECT_FALSE(fou_contains(crisp, 0.4, 0.9));
    const IT2Set point(PiecewiseLinear::constant(0.0), PiecewiseLinear::triangle(0.6, 0.68, 0.76));
    EXPECT_TRUE(fou_contains(point, 0.68, 0.3));
    EXPECT_THROW(fou_contains(crisp, 1.5, 0.1), DomainError);
}

TEST(Project, Examples) {
    const IT2Set s(PiecewiseLinear::trapezoid(0.65, 0.7, 0.7, 0.75, 0.6), PiecewiseLinear::trapezoid(0.6, 0.65, 0.75, 0.8));
    EXPECT_EQ(project(s, Projection::outer()), (Interval{0.6, 0.8}));
    const auto inner = project(s, Projection::inner());
    EXPECT_NEAR(inner.lo, 0.65, 1e-12);
    EXPECT_NEAR(inner.hi, 0.75, 1e-12);
    const auto tri = IT2Set::crisp(PiecewiseLinear::triangle(0.6, 0.7, 0.8));
    const auto cut = project(tri, Projection::alpha_cut(1.0));
    EXPECT_NEAR(cut.lo, 0.7, 1e-12);
    EXPECT_NEAR(cut.hi, 0.7, 1e-12);
    const auto half = project(tri, Projection::alpha_cut(0.5));
    EXPECT_NEAR(half.lo, 0.65, 1e-12);
    EXPECT_NEAR(half.hi, 0.75, 1e-12);
}

TEST(Project, Errors) {
    const IT2Set empty_lower(PiecewiseLinear::constant(0.0), PiecewiseLinear::triangle(0.1, 0.2, 0.3));
    EXPECT_THROW(project(empty_lower, Projection::inner()), EmptyProjection);
    EXPECT_THROW(project(IT2Set::crisp(PiecewiseLinear::constant(0.0)), Projection::outer()), EmptyProjection);
    const auto low = IT2Set::crisp(PiecewiseLinear::triangle(0.1, 0.2, 0.3, 0.5));
    EXPECT_THROW(project(low, Projection::alpha_cut(0.8)), EmptyProjection);
    EXPECT_THROW(project(low, Projection::alpha_cut(0.0)), DomainError);
}

TEST(Project, InnerWithinOuter) {
    Sampler s(31);
    for (int i = 0; i < 2000; ++i) {
        const auto set = random_fou(s, 9);
        if (set.lower().identically_zero()) continue;
        const auto in = project(set, Projection::inner());
        const auto out = project(set, Projection::outer());
        ASSERT_LE(out.lo, in.lo + 1e-12);
        ASSERT_GE(out.hi, in.hi - 1e-12);
    }
}

TEST(IntervalConnectives, Examples) {
    const auto a = it2_and(box(0.6, 0.8, 0.1, 0.2), box(0.5, 0.7, 0.1, 0.2));
    EXPECT_NEAR(a.mu.lo, 0.1, 1e-12);
    EXPECT_NEAR(a.mu.hi, 0.5, 1e-12);
    EXPECT_EQ(it2_not(box(0.2, 0.4, 0.6, 0.9)), box(0.6, 0.9, 0.2, 0.4));
    const auto imp = it2_implies(box(0.6, 0.8, 0.1, 0.2), box(0.5, 0.7, 0.1, 0.2));
    EXPECT_NEAR(imp.mu.lo, 0.7, 1e-12);
    EXPECT_NEAR(imp.mu.hi, 1.0, 1e-12);
    const auto same = it2_implies(box(0.4, 0.4, 0.3, 0.3), box(0.4, 0.4, 0.3, 0.3));
    EXPECT_EQ(same.mu, (Interval{1.0, 1.0}));
}

TEST(IntervalConnectives, DegenerateCollapseToPairConnectives) {
    Sampler s(32);
    for (auto k : {TNormKind::Lukasiewicz, TNormKind::Godel, TNormKind::Product}) {
        for (int i = 0; i < 10000; ++i) {
            const auto p = s.pair(), q = s.pair();
            const auto dp = IntervalPair::degenerate(p), dq = IntervalPair::degenerate(q);
            EXPECT_EQ(it2_and(dp, dq, k), IntervalPair::degenerate(pair_and(p, q, k)));
            EXPECT_EQ(it2_or(dp, dq, k), IntervalPair::degenerate(pair_or(p, q, k)));
            EXPECT_EQ(it2_implies(dp, dq, k), IntervalPair::degenerate(pair_implies(p, q, k)));
            EXPECT_EQ(it2_not(dp), IntervalPair::degenerate(pair_not(p)));
        }
    }
}

bool within(const Interval& inner, const Interval& outer) {
    return outer.lo <= inner.lo + 1e-12 && inner.hi <= outer.hi + 1e-12;
}

bool within(const IntervalPair& inner, const IntervalPair& outer) {
    return within(inner.mu, outer.mu) && within(inner.nu, outer.nu);
}

IntervalPair shrink(Sampler& s, const IntervalPair& p) {
    auto sub = [&](const Interval& i) {
        double a = s.range(i.lo, i.hi), b = s.range(i.lo, i.hi);
        return Interval{std::min(a, b), std::max(a, b)};
    };
    return IntervalPair(sub(p.mu), sub(p.nu));
}

TEST(IntervalConnectives, InclusionMonotone) {
    Sampler s(33);
    for (auto k : {TNormKind::Lukasiewicz, TNormKind::Godel, TNormKind::Product}) {
        for (int i = 0; i < 20000; ++i) {
            const auto p = random_box(s), q = random_box(s);
            const auto ps = shrink(s, p), qs = shrink(s, q);
            ASSERT_TRUE(within(it2_and(ps, qs, k), it2_and(p, q, k)));
            ASSERT_TRUE(within(it2_or(ps, qs, k), it2_or(p, q, k)));
            ASSERT_TRUE(within(it2_implies(ps, qs, k), it2_implies(p, q, k)));
            ASSERT_TRUE(within(it2_not(ps), it2_not(p)));
        }
    }
}

TEST(IntervalConnectives, BoundsContainEveryPointwiseValue) {
    Sampler s(34);
    for (int i = 0; i < 20000; ++i) {
        const auto p = random_box(s), q = random_box(s);
        const MediativePair x(s.range(p.mu.lo, p.mu.hi), s.range(p.nu.lo, p.nu.hi));
        const MediativePair y(s.range(q.mu.lo, q.mu.hi), s.range(q.nu.lo, q.nu.hi));
        const auto v = pair_implies(x, y);
        const auto b = it2_implies(p, q);
        ASSERT_TRUE(within(Interval{v.mu, v.mu}, b.mu));
        ASSERT_TRUE(within(Interval{v.nu, v.nu}, b.nu));
    }
}

TEST(HesitationContradictionBounds, Examples) {
    const auto c1 = box(0.65, 0.71, 0.10, 0.16);
    EXPECT_NEAR(t2_hesitation_bounds(c1).lo, 0.13, 1e-12);
    EXPECT_NEAR(t2_hesitation_bounds(c1).hi, 0.25, 1e-12);
    EXPECT_EQ(t2_contradiction_bounds(c1), (Interval{0.0, 0.0}));
    const auto c3 = box(0.695, 0.755, 0.275, 0.335);
    EXPECT_NEAR(t2_contradiction_bounds(c3).lo, 0.0, 1e-12);
    EXPECT_NEAR(t2_contradiction_bounds(c3).hi, 0.09, 1e-12);
    EXPECT_NEAR(t2_hesitation_bounds(c3).lo, 0.0, 1e-12);
    EXPECT_NEAR(t2_hesitation_bounds(c3).hi, 0.03, 1e-12);
    const auto c2 = IntervalPair::degenerate({0.5, 0.5});
    EXPECT_EQ(t2_hesitation_bounds(c2), (Interval{0.0, 0.0}));
    EXPECT_EQ(t2_contradiction_bounds(c2), (Interval{0.0, 0.0}));
}

TEST(KarnikMendel, CrispSetGivesItsCentroid) {
    const auto set = IT2Set::crisp(PiecewiseLinear::trapezoid(0.2, 0.3, 0.5, 0.9));
    const auto c = km_type_reduce(set, 101);
    const auto oracle = single_switch_oracle(set, 101);
    EXPECT_NEAR(c.lo, c.hi, 1e-12);
    EXPECT_NEAR(c.lo, oracle.lo, 1e-12);
}

TEST(KarnikMendel, CrispAtIsExactOnAnyGrid) {
    Sampler s(35);
    for (int i = 0; i < 500; ++i) {
        const double v = s.unit();
        const auto c = km_type_reduce(IT2Set::crisp_at(v));
        ASSERT_NEAR(c.lo, v, 1e-12);
        ASSERT_NEAR(c.hi, v, 1e-12);
    }
    for (double v : {0.0, 1.0, 0.0005, 0.9995}) {
        EXPECT_NEAR(km_type_reduce(IT2Set::crisp_at(v)).mid(), v, 1e-12) << v;
    }
}

TEST(KarnikMendel, SymmetricFootprint) {
    const IT2Set s(PiecewiseLinear::trapezoid(0.3, 0.45, 0.55, 0.7, 0.5), PiecewiseLinear::trapezoid(0.1, 0.4, 0.6, 0.9));
    const auto c = km_type_reduce(s);
    EXPECT_NEAR(c.lo + c.hi, 1.0, 1e-9);
    EXPECT_LT(c.lo, c.hi);
}

TEST(KarnikMendel, MatchesSingleSwitchOracle) {
    Sampler s(36);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 3 + s.index(40);
        const auto set = random_fou(s, n);
        const auto c = km_type_reduce(set, n);
        const auto o = single_switch_oracle(set, n);
        ASSERT_NEAR(c.lo, o.lo, 1e-9) << "n=" << n;
        ASSERT_NEAR(c.hi, o.hi, 1e-9) << "n=" << n;
        ASSERT_LE(c.lo, c.hi);
    }
}

TEST(KarnikMendel, SingleSwitchSetsAreExtremalAmongAllEmbeddedSets) {
    // Every one of the 2^n lower/upper choices, not just switch forms.
    Sampler s(37);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 12;
        const auto set = random_fou(s, n);
        double lo = 2.0, hi = -1.0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            long double num = 0, den = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = static_cast<double>(i) / (n - 1);
                const double w = (mask >> i) & 1u ? set.upper()(x) : set.lower()(x);
                num += x * w;
                den += w;
            }
            if (den <= 0) continue;
            lo = std::min(lo, static_cast<double>(num / den));
            hi = std::max(hi, static_cast<double>(num / den));
        }
        const auto c = km_type_reduce(set, n);
        ASSERT_NEAR(c.lo, lo, 1e-9);
        ASSERT_NEAR(c.hi, hi, 1e-9);
    }
}

TEST(KarnikMendel, EmptySetAndBadGrid) {
    EXPECT_THROW(km_type_reduce(IT2Set::crisp(PiecewiseLinear::constant(0.0))), EmptySet);
    EXPECT_THROW(km_type_reduce(IT2Set::crisp_at(0.5), 2), DomainError);
}

TEST(TypeReduced, Examples) {
    EXPECT_NEAR(t2_eval_type_reduced(IT2Set::crisp_at(0.68), IT2Set::crisp_at(0.13)), 0.7161, 1e-9);
    EXPECT_NEAR(t2_eval_type_reduced(IT2Set::crisp_at(0.5), IT2Set::crisp_at(0.5)), 0.5, 1e-9);
    EXPECT_NEAR(t2_eval_type_reduced(IT2Set::crisp_at(0.725), IT2Set::crisp_at(0.305)), 0.72455, 1e-9);
}

TEST(Envelope, Examples) {
    const auto c2 = t2_eval_envelope(box(0.45, 0.55, 0.45, 0.55));
    EXPECT_NEAR(c2.m_lo, 0.45, 1e-12);
    EXPECT_NEAR(c2.m_hi, 0.55, 1e-12);
    const auto c3 = t2_eval_envelope(box(0.695, 0.755, 0.275, 0.335));
    EXPECT_NEAR(c3.m_lo, 0.69455, 1e-9);
    EXPECT_NEAR(c3.m_hi, 0.75455, 1e-9);
    const auto corner = t2_eval_envelope(box(0.0, 0.1, 0.0, 0.1));
    EXPECT_NEAR(corner.m_lo, 0.74, 1e-12);
    EXPECT_NEAR(corner.m_hi, 1.0, 1e-12);
}

TEST(Envelope, IgnoranceCornerAgainstDenseGrid) {
    const auto b = box(0.0, 0.1, 0.0, 0.1);
    EXPECT_NEAR(brute_force_min(b, 1001), 0.74, 1e-12);
    EXPECT_NEAR(brute_force_max(b, 1001), 1.0, 1e-12);
}

TEST(Envelope, SoundAndTight) {
    Sampler s(38);
    for (int i = 0; i < 100000; ++i) {
        const auto b = random_box(s);
        const auto env = t2_eval_envelope(b);
        ASSERT_LE(env.m_lo, env.m_hi);
        ASSERT_NEAR(mediative_eval(env.argmin), env.m_lo, 1e-12);
        ASSERT_NEAR(mediative_eval(env.argmax), env.m_hi, 1e-12);
        for (const auto& at : {env.argmin, env.argmax}) {
            ASSERT_TRUE(within(Interval{at.mu, at.mu}, b.mu));
            ASSERT_TRUE(within(Interval{at.nu, at.nu}, b.nu));
        }
        const auto corners = diagonal_corner_bounds(b);
        ASSERT_GE(corners.lo, env.m_lo - 1e-12);
        ASSERT_LE(corners.hi, env.m_hi + 1e-12);
        for (int k = 0; k < 100; ++k) {
            const double m = mediative_eval({s.range(b.mu.lo, b.mu.hi), s.range(b.nu.lo, b.nu.hi)});
            ASSERT_GE(m, env.m_lo - 1e-9);
            ASSERT_LE(m, env.m_hi + 1e-9);
        }
    }
}

TEST(Envelope, DegenerateCollapse) {
    Sampler s(39);
    for (int i = 0; i < 10000; ++i) {
        const auto p = s.pair();
        const auto d = IntervalPair::degenerate(p);
        const double m = mediative_eval(p);
        const auto env = t2_eval_envelope(d);
        ASSERT_NEAR(env.m_lo, m, 1e-12);
        ASSERT_NEAR(env.m_hi, m, 1e-12);
        const auto corners = diagonal_corner_bounds(d);
        ASSERT_NEAR(corners.lo, m, 1e-12);
        ASSERT_NEAR(corners.hi, m, 1e-12);
        ASSERT_NEAR(t2_eval_type_reduced(IT2Set::crisp_at(p.mu), IT2Set::crisp_at(p.nu)), m, 1e-12);
    }
}

TEST(DiagonalCorners, Examples) {
    const auto c1 = diagonal_corner_bounds(box(0.65, 0.71, 0.10, 0.16));
    EXPECT_NEAR(c1.lo, 0.6861, 1e-9);
    EXPECT_NEAR(c1.hi, 0.7461, 1e-9);
    const auto corner = diagonal_corner_bounds(box(0.0, 0.1, 0.0, 0.1));
    EXPECT_NEAR(corner.lo, 0.81, 1e-12);
    EXPECT_NEAR(corner.hi, 0.91, 1e-12);
}

}  // namespace
