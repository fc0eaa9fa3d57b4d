#pragma once

#include <string>

#include "htlp/formula.hpp"
#include "htlp/theory.hpp"

namespace htlp {

enum class PrintStyle {
    Raw,     // primitives only, every binary node parenthesized
    Sugared  // ~F, top, minimal parentheses
};

namespace detail {

// Binding strength in the concrete grammar; larger binds tighter.
inline int precedence(const Formula& f, PrintStyle style) {
    switch (f.kind()) {
    case Connective::Bottom:
    case Connective::Atom: return 5;
    case Connective::And: return 3;
    case Connective::Or: return 2;
    case Connective::Implies:
        if (style == PrintStyle::Sugared && f.is_negation()) return f.is_top() ? 5 : 4;
        return 1;
    }
    return 0;
}

inline void print_raw(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case Connective::Bottom: out += "bot"; return;
    case Connective::Atom: out += f.name(); return;
    default: break;
    }
    const char* op = f.is_and() ? " & " : f.is_or() ? " | " : " -> ";
    out += '(';
    print_raw(f.left(), out);
    out += op;
    print_raw(f.right(), out);
    out += ')';
}

inline void print_sugared(const Formula& f, std::string& out);

inline void print_operand(const Formula& f, bool parens, std::string& out) {
    if (parens) out += '(';
    print_sugared(f, out);
    if (parens) out += ')';
}

inline void print_sugared(const Formula& f, std::string& out) {
    constexpr auto S = PrintStyle::Sugared;
    switch (f.kind()) {
    case Connective::Bottom: out += "bot"; return;
    case Connective::Atom: out += f.name(); return;
    default: break;
    }
    if (f.is_top()) {
        out += "top";
        return;
    }
    if (f.is_negation()) {
        out += '~';
        print_operand(f.left(), precedence(f.left(), S) < 4, out);
        return;
    }
    const int p = precedence(f, S);
    // -> associates to the right, & and | to the left.
    const bool right_assoc = f.is_implies();
    const int lp = precedence(f.left(), S);
    const int rp = precedence(f.right(), S);
    print_operand(f.left(), lp < p || (right_assoc && lp == p), out);
    out += f.is_and() ? " & " : f.is_or() ? " | " : " -> ";
    print_operand(f.right(), rp < p || (!right_assoc && rp == p), out);
}

} // namespace detail

inline std::string print(const Formula& f, PrintStyle style = PrintStyle::Sugared) {
    std::string out;
    if (style == PrintStyle::Raw) detail::print_raw(f, out);
    else detail::print_sugared(f, out);
    return out;
}

// "body -> head"; a top body is omitted.
inline std::string print(const Rule& r) {
    std::string out;
    if (!r.body().is_top()) {
        detail::print_operand(r.body(), detail::precedence(r.body(), PrintStyle::Sugared) <= 1, out);
        out += " -> ";
    }
    detail::print_operand(r.head(), false, out);
    return out;
}

// One rule per line.
inline std::string print(const Program& p) {
    std::string out;
    for (const auto& r : p.rules()) {
        out += print(r);
        out += '\n';
    }
    return out;
}

} // namespace htlp
