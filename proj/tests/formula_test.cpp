#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace medilog;
using medilog::testing::Sampler;

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }
Formula r() { return Formula::atom("r"); }

Formula random_formula(Sampler& s, int depth) {
    static const char* names[] = {"p", "q", "r", "s", "x_1", "Medic", "topology"};
    if (depth == 0 || s.index(4) == 0) {
        switch (s.index(9)) {
            case 0: return Formula::top();
            case 1: return Formula::bot();
            default: return Formula::atom(names[s.index(std::size(names))]);
        }
    }
    switch (s.index(7)) {
        case 0: return Formula::negation(random_formula(s, depth - 1));
        case 1: return Formula::med(random_formula(s, depth - 1));
        case 2: return Formula::conj(random_formula(s, depth - 1), random_formula(s, depth - 1));
        case 3: return Formula::disj(random_formula(s, depth - 1), random_formula(s, depth - 1));
        case 4: return Formula::implies(random_formula(s, depth - 1), random_formula(s, depth - 1));
        default: return Formula::iff(random_formula(s, depth - 1), random_formula(s, depth - 1));
    }
}

// Same semantics, written independently: iff expanded, constants via a
// reserved atom's self-implication.
MediativePair reference_eval(const Formula& f, const Valuation& v) {
    const auto k = v.algebra;
    const MediativePair top = pair_implies(MediativePair(0.3, 0.6), MediativePair(0.3, 0.6), k);
    switch (f.kind()) {
        case Connective::Atom: return v.at(f.name());
        case Connective::Top: return top;
        case Connective::Bot: return pair_not(top);
        case Connective::Not: return pair_not(reference_eval(f.operand(), v));
        case Connective::And: return pair_and(reference_eval(f.lhs(), v), reference_eval(f.rhs(), v), k);
        case Connective::Or: return pair_or(reference_eval(f.lhs(), v), reference_eval(f.rhs(), v), k);
        case Connective::Implies: return pair_implies(reference_eval(f.lhs(), v), reference_eval(f.rhs(), v), k);
        case Connective::Iff:
            return reference_eval(Formula::conj(Formula::implies(f.lhs(), f.rhs()), Formula::implies(f.rhs(), f.lhs())),
                                  v);
        case Connective::Med: {
            const double m = medilog::testing::reference_m(reference_eval(f.operand(), v).mu,
                                                          reference_eval(f.operand(), v).nu);
            return {m, 1.0 - m};
        }
    }
    return {};
}

TEST(Parse, Examples) {
    EXPECT_EQ(parse("Med(p & ~q) -> bot"),
              Formula::implies(Formula::med(Formula::conj(p(), Formula::negation(q()))), Formula::bot()));
    EXPECT_EQ(parse("p & q | r"), Formula::disj(Formula::conj(p(), q()), r()));
    EXPECT_EQ(parse("p -> q -> r"), Formula::implies(p(), Formula::implies(q(), r())));
}

TEST(Parse, PrecedenceLadder) {
    EXPECT_EQ(parse("p <-> q -> r"), Formula::iff(p(), Formula::implies(q(), r())));
    EXPECT_EQ(parse("p | q -> r"), Formula::implies(Formula::disj(p(), q()), r()));
    EXPECT_EQ(parse("~p & q"), Formula::conj(Formula::negation(p()), q()));
    EXPECT_EQ(parse("(p -> q) -> r"), Formula::implies(Formula::implies(p(), q()), r()));
    EXPECT_EQ(parse("  top|bot "), Formula::disj(Formula::top(), Formula::bot()));
    EXPECT_EQ(parse("Medp"), Formula::atom("Medp"));
    EXPECT_EQ(parse("~~p"), Formula::negation(Formula::negation(p())));
}

TEST(Parse, ErrorsCarryOffsetAndExpectation) {
    try {
        parse("p & ");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
        EXPECT_FALSE(e.expected().empty());
    }
    try {
        parse("Med p");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
        EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "'('"), e.expected().end()) << e.what();
    }
    EXPECT_THROW(parse("p q"), ParseError);
    EXPECT_THROW(parse("(p"), ParseError);
    EXPECT_THROW(parse("p $ q"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("p - q"), ParseError);
    EXPECT_THROW(parse("top(p)"), ParseError);
}

TEST(Render, Examples) {
    EXPECT_EQ(render(Formula::med(Formula::conj(p(), q()))), "Med(p & q)");
    EXPECT_EQ(render(Formula::negation(Formula::negation(p()))), "~~p");
    EXPECT_EQ(render(Formula::top()), "top");
    EXPECT_EQ(render(Formula::implies(Formula::implies(p(), q()), r())), "(p -> q) -> r");
    EXPECT_EQ(render(Formula::negation(Formula::conj(p(), q()))), "~(p & q)");
}

TEST(Render, RoundTripOnRandomFormulas) {
    Sampler s(21);
    for (int i = 0; i < 10000; ++i) {
        const Formula f = random_formula(s, 1 + static_cast<int>(s.index(8)));
        ASSERT_LE(f.depth(), 9u);
        const std::string text = render(f);
        ASSERT_EQ(parse(text), f) << text;
    }
}

TEST(Evaluate, Examples) {
    Valuation v;
    v.set("p", {0.68, 0.13});
    const auto med = evaluate(parse("Med(p)"), v);
    EXPECT_NEAR(med.mu, 0.7161, 1e-9);
    EXPECT_NEAR(med.nu, 0.2839, 1e-9);
    EXPECT_EQ(evaluate(parse("p -> p"), v), MediativePair(1.0, 1.0));
    v.set("p", {0.3, 0.7});
    EXPECT_EQ(evaluate(parse("~p"), v), MediativePair(0.7, 0.3));
}

TEST(Evaluate, UnboundAtomNamesTheAtom) {
    Valuation v;
    v.set("p", {0.5, 0.5});
    try {
        evaluate(parse("p & zed"), v);
        FAIL();
    } catch (const UnboundAtom& e) {
        EXPECT_EQ(e.name(), "zed");
    }
}

TEST(MDegree, Examples) {
    Valuation v;
    v.set("p", {0.9, 0.3});
    EXPECT_NEAR(m_degree(parse("Med(p)"), v), m_degree(parse("p"), v), 1e-12);
    EXPECT_NEAR(m_degree(parse("p -> p"), v), 0.5, 1e-15);
    EXPECT_NEAR(m_degree(parse("bot"), v), 0.5, 1e-15);
    EXPECT_NEAR(m_degree(parse("top"), v), 0.5, 1e-15);
}

TEST(Evaluate, MatchesReferenceSemantics) {
    Sampler s(22);
    for (auto k : {TNormKind::Lukasiewicz, TNormKind::Godel, TNormKind::Product}) {
        for (int i = 0; i < 3000; ++i) {
            const Formula f = random_formula(s, 5);
            Valuation v;
            v.algebra = k;
            for (const auto& a : f.atoms()) v.set(a, s.pair());
            const auto got = evaluate(f, v);
            const auto want = reference_eval(f, v);
            ASSERT_NEAR(got.mu, want.mu, 1e-9) << render(f);
            ASSERT_NEAR(got.nu, want.nu, 1e-9) << render(f);
        }
    }
}

TEST(MedLaws, FixedPointAndIdempotence) {
    Sampler s(23);
    for (int i = 0; i < 20000; ++i) {
        const Formula f = random_formula(s, 4);
        Valuation v;
        for (const auto& a : f.atoms()) v.set(a, s.pair());
        ASSERT_NEAR(m_degree(Formula::med(f), v), m_degree(f, v), 1e-12) << render(f);
        const auto once = evaluate(Formula::med(f), v);
        const auto twice = evaluate(Formula::med(Formula::med(f)), v);
        ASSERT_EQ(twice, once) << render(f);
    }
}

TEST(Conservativity, ComplementaryAtomsFollowBaseFuzzyLogic) {
    // With nu = 1 - mu on atoms, the truth coordinate of a Med-free formula
    // is its ordinary fuzzy value under (T, S, residuum, 1 - x).
    Sampler s(24);
    std::function<double(const Formula&, const std::map<std::string, double>&, TNormKind)> fuzzy =
        [&](const Formula& f, const std::map<std::string, double>& val, TNormKind k) -> double {
        switch (f.kind()) {
            case Connective::Atom: return val.at(f.name());
            case Connective::Top: return 1.0;
            case Connective::Bot: return 0.0;
            case Connective::Not: return 1.0 - fuzzy(f.operand(), val, k);
            case Connective::And: return tnorm(k, Degree(fuzzy(f.lhs(), val, k)), Degree(fuzzy(f.rhs(), val, k)));
            case Connective::Or: return tconorm(k, Degree(fuzzy(f.lhs(), val, k)), Degree(fuzzy(f.rhs(), val, k)));
            case Connective::Implies:
                return residuum(k, Degree(fuzzy(f.lhs(), val, k)), Degree(fuzzy(f.rhs(), val, k)));
            default: return -1.0;
        }
    };
    int checked = 0;
    for (int i = 0; i < 20000; ++i) {
        Formula f = random_formula(s, 4);
        const std::string text = render(f);
        if (text.find("Med(") != std::string::npos || text.find("<->") != std::string::npos ||
            text.find('~') != std::string::npos || text.find("top") != std::string::npos ||
            text.find("bot") != std::string::npos) {
            continue;
        }
        Valuation v;
        std::map<std::string, double> val;
        for (const auto& a : f.atoms()) {
            const double mu = s.unit();
            v.set(a, {mu, 1.0 - mu});
            val[a] = mu;
        }
        for (auto k : {TNormKind::Lukasiewicz, TNormKind::Godel, TNormKind::Product}) {
            v.algebra = k;
            ASSERT_NEAR(evaluate(f, v).mu, fuzzy(f, val, k), 1e-12) << text;
        }
        ++checked;
    }
    EXPECT_GT(checked, 1000);
}

TEST(Conservativity, NegationFreeImplicationsAgreeWithFuzzyNegationOnAtoms) {
    // Negation of an atom flips to the falsity coordinate, which on
    // complementary atoms is 1 - mu: the base logic's involutive negation.
    Valuation v;
    v.set("p", {0.3, 0.7});
    v.set("q", {0.8, 0.2});
    EXPECT_NEAR(evaluate(parse("~p & q"), v).mu, std::max(0.0, 0.7 + 0.8 - 1.0), 1e-12);
    EXPECT_NEAR(evaluate(parse("~p -> q"), v).mu, std::min(1.0, 1.0 - 0.7 + 0.8), 1e-12);
}

TEST(Formula, AtomsAreSortedAndUnique) {
    EXPECT_EQ(parse("q & p -> q | r").atoms(), (std::vector<std::string>{"p", "q", "r"}));
    EXPECT_TRUE(parse("top -> bot").atoms().empty());
}

}  // namespace
