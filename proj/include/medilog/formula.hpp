#pragma once

// Propositional mediative language: AST, concrete syntax, and valuations.
//
// Grammar (loosest binding first):
//   iff     := implies ( "<->" iff )?
//   implies := or ( "->" implies )?
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := "~" unary | "Med" "(" iff ")" | primary
//   primary := atom | "top" | "bot" | "(" iff ")"

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "medilog/mediative.hpp"

namespace medilog {

enum class Connective { Atom, Top, Bot, Not, And, Or, Implies, Iff, Med };

/// Immutable formula tree with shared subterms. Copying is cheap.
class Formula {
public:
    static Formula atom(std::string name) { return Formula(Connective::Atom, std::move(name), {}); }
    static Formula top() { return Formula(Connective::Top, {}, {}); }
    static Formula bot() { return Formula(Connective::Bot, {}, {}); }
    static Formula negation(Formula f) { return Formula(Connective::Not, {}, {std::move(f)}); }
    static Formula med(Formula f) { return Formula(Connective::Med, {}, {std::move(f)}); }
    static Formula conj(Formula a, Formula b) { return binary(Connective::And, std::move(a), std::move(b)); }
    static Formula disj(Formula a, Formula b) { return binary(Connective::Or, std::move(a), std::move(b)); }
    static Formula implies(Formula a, Formula b) { return binary(Connective::Implies, std::move(a), std::move(b)); }
    static Formula iff(Formula a, Formula b) { return binary(Connective::Iff, std::move(a), std::move(b)); }

    Connective kind() const noexcept { return node_->kind; }
    const std::string& name() const noexcept { return node_->name; }
    const Formula& operand(std::size_t i = 0) const { return node_->children.at(i); }
    const Formula& lhs() const { return operand(0); }
    const Formula& rhs() const { return operand(1); }

    friend bool operator==(const Formula& a, const Formula& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind() || a.name() != b.name()) return false;
        const auto& ca = a.node_->children;
        const auto& cb = b.node_->children;
        if (ca.size() != cb.size()) return false;
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (!(ca[i] == cb[i])) return false;
        }
        return true;
    }

    /// Distinct atom names, sorted.
    std::vector<std::string> atoms() const {
        std::set<std::string> out;
        collect_atoms(out);
        return {out.begin(), out.end()};
    }

    void collect_atoms(std::set<std::string>& out) const {
        if (kind() == Connective::Atom) out.insert(name());
        for (const auto& c : node_->children) c.collect_atoms(out);
    }

    std::size_t depth() const {
        std::size_t d = 0;
        for (const auto& c : node_->children) d = std::max(d, c.depth());
        return d + 1;
    }

private:
    struct Node {
        Connective kind;
        std::string name;
        std::vector<Formula> children;
    };

    Formula(Connective k, std::string name, std::vector<Formula> children)
        : node_(std::make_shared<const Node>(Node{k, std::move(name), std::move(children)})) {}

    static Formula binary(Connective k, Formula a, Formula b) {
        std::vector<Formula> c;
        c.reserve(2);
        c.push_back(std::move(a));
        c.push_back(std::move(b));
        return Formula(k, {}, std::move(c));
    }

    std::shared_ptr<const Node> node_;
};

namespace detail {

enum class Tok { Ident, Top, Bot, Med, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

inline std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
}

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t at = i;
        if (is_ident_start(c)) {
            while (i < s.size() && is_ident_char(s[i])) ++i;
            std::string word(s.substr(at, i - at));
            Tok k = Tok::Ident;
            if (word == "top") k = Tok::Top;
            else if (word == "bot") k = Tok::Bot;
            else if (word == "Med") k = Tok::Med;
            out.push_back({k, at, std::move(word)});
            continue;
        }
        if (s.substr(i, 3) == "<->") {
            out.push_back({Tok::Iff, at, "<->"});
            i += 3;
            continue;
        }
        if (s.substr(i, 2) == "->") {
            out.push_back({Tok::Implies, at, "->"});
            i += 2;
            continue;
        }
        Tok k;
        switch (c) {
            case '~': k = Tok::Not; break;
            case '&': k = Tok::And; break;
            case '|': k = Tok::Or; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw ParseError(at, {"atom", "'top'", "'bot'", "'Med'", "'~'", "'('"},
                                 "'" + std::string(1, c) + "'");
        }
        out.push_back({k, at, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, s.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    Formula parse_all() {
        Formula f = iff();
        if (peek().kind != Tok::End) {
            throw ParseError(peek().offset, {"'&'", "'|'", "'->'", "'<->'", "end of input"},
                             describe(peek()));
        }
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(peek().offset, {what}, describe(peek()));
    }

    Formula iff() {
        Formula lhs = implies();
        if (accept(Tok::Iff)) return Formula::iff(std::move(lhs), iff());
        return lhs;
    }

    Formula implies() {
        Formula lhs = disj();
        if (accept(Tok::Implies)) return Formula::implies(std::move(lhs), implies());
        return lhs;
    }

    Formula disj() {
        Formula lhs = conj();
        while (accept(Tok::Or)) lhs = Formula::disj(std::move(lhs), conj());
        return lhs;
    }

    Formula conj() {
        Formula lhs = unary();
        while (accept(Tok::And)) lhs = Formula::conj(std::move(lhs), unary());
        return lhs;
    }

    Formula unary() {
        if (accept(Tok::Not)) return Formula::negation(unary());
        if (accept(Tok::Med)) {
            expect(Tok::LParen, "'('");
            Formula inner = iff();
            expect(Tok::RParen, "')'");
            return Formula::med(std::move(inner));
        }
        return primary();
    }

    Formula primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Ident: next(); return Formula::atom(t.text);
            case Tok::Top: next(); return Formula::top();
            case Tok::Bot: next(); return Formula::bot();
            case Tok::LParen: {
                next();
                Formula inner = iff();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError(t.offset, {"atom", "'top'", "'bot'", "'Med'", "'~'", "'('"},
                                 describe(t));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline int precedence(Connective k) {
    switch (k) {
        case Connective::Iff: return 1;
        case Connective::Implies: return 2;
        case Connective::Or: return 3;
        case Connective::And: return 4;
        case Connective::Not:
        case Connective::Med: return 5;
        default: return 6;
    }
}

inline bool right_assoc(Connective k) { return k == Connective::Implies || k == Connective::Iff; }

inline void render_into(const Formula& f, std::string& out);

inline void render_child(const Formula& child, bool needs_parens, std::string& out) {
    if (needs_parens) out += '(';
    render_into(child, out);
    if (needs_parens) out += ')';
}

inline void render_into(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Connective::Atom: out += f.name(); return;
        case Connective::Top: out += "top"; return;
        case Connective::Bot: out += "bot"; return;
        case Connective::Not:
            out += '~';
            render_child(f.operand(), precedence(f.operand().kind()) < 5, out);
            return;
        case Connective::Med:
            out += "Med(";
            render_into(f.operand(), out);
            out += ')';
            return;
        default: break;
    }
    const int p = precedence(f.kind());
    const bool ra = right_assoc(f.kind());
    const int pl = precedence(f.lhs().kind());
    const int pr = precedence(f.rhs().kind());
    render_child(f.lhs(), pl < p || (pl == p && ra), out);
    switch (f.kind()) {
        case Connective::And: out += " & "; break;
        case Connective::Or: out += " | "; break;
        case Connective::Implies: out += " -> "; break;
        default: out += " <-> "; break;
    }
    render_child(f.rhs(), pr < p || (pr == p && !ra), out);
}

}  // namespace detail

/// Throws ParseError carrying the byte offset and the expected-token set.
inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Minimal-parenthesis rendering; parse(render(f)) == f.
inline std::string render(const Formula& f) {
    std::string out;
    detail::render_into(f, out);
    return out;
}

/// Atom assignment plus the t-norm parameterizing the connectives.
struct Valuation {
    std::map<std::string, MediativePair, std::less<>> atoms;
    TNormKind algebra = TNormKind::Lukasiewicz;

    Valuation() = default;
    explicit Valuation(std::map<std::string, MediativePair, std::less<>> a,
                       TNormKind k = TNormKind::Lukasiewicz)
        : atoms(std::move(a)), algebra(k) {}

    Valuation& set(const std::string& atom, MediativePair p) {
        atoms[atom] = p;
        return *this;
    }

    const MediativePair& at(const std::string& atom) const {
        auto it = atoms.find(atom);
        if (it == atoms.end()) throw UnboundAtom(atom);
        return it->second;
    }
};

/// Value of top, i.e. of (p -> p) for any p: the residuum is 1 in both
/// coordinates. Bot = ~top has the same pair.
inline MediativePair tautology_pair() { return {1.0, 1.0}; }

inline MediativePair evaluate(const Formula& f, const Valuation& v) {
    const TNormKind k = v.algebra;
    switch (f.kind()) {
        case Connective::Atom: return v.at(f.name());
        case Connective::Top: return tautology_pair();
        case Connective::Bot: return pair_not(tautology_pair());
        case Connective::Not: return pair_not(evaluate(f.operand(), v));
        case Connective::And: return pair_and(evaluate(f.lhs(), v), evaluate(f.rhs(), v), k);
        case Connective::Or: return pair_or(evaluate(f.lhs(), v), evaluate(f.rhs(), v), k);
        case Connective::Implies:
            return pair_implies(evaluate(f.lhs(), v), evaluate(f.rhs(), v), k);
        case Connective::Iff: {
            const auto a = evaluate(f.lhs(), v);
            const auto b = evaluate(f.rhs(), v);
            return pair_and(pair_implies(a, b, k), pair_implies(b, a, k), k);
        }
        case Connective::Med: {
            const Degree m = mediative_eval(evaluate(f.operand(), v));
            return {m, Degree::clamp(1.0 - m)};
        }
    }
    throw Error("unknown connective");
}

inline Degree m_degree(const Formula& f, const Valuation& v) { return mediative_eval(evaluate(f, v)); }

}  // namespace medilog
