#pragma once

#include <optional>
#include <vector>

#include "htlp/formula.hpp"

namespace htlp {

// atom or ~atom
inline bool is_literal(const Formula& f) {
    return f.is_atom() || (f.is_negation() && f.left().is_atom());
}

// No implication other than negations (and hence top) anywhere inside f.
inline bool is_nested_expression(const Formula& f) {
    switch (f.kind()) {
    case Connective::Bottom:
    case Connective::Atom:
        return true;
    case Connective::And:
    case Connective::Or:
        return is_nested_expression(f.left()) && is_nested_expression(f.right());
    case Connective::Implies:
        return f.right().is_bottom() && is_nested_expression(f.left());
    }
    return false;
}

// Either a bare nested expression (read as top -> f) or F -> G over nested F, G.
inline bool is_rule(const Formula& f) {
    if (is_nested_expression(f)) return true;
    return f.is_implies() && is_nested_expression(f.left()) && is_nested_expression(f.right());
}

namespace detail {
inline bool flatten_literals(const Formula& f, Connective op, std::vector<Formula>& out) {
    if (f.kind() == op) return flatten_literals(f.left(), op, out) && flatten_literals(f.right(), op, out);
    if (!is_literal(f)) return false;
    out.push_back(f);
    return true;
}
} // namespace detail

// Literals of a conjunction in any association; top yields the empty list.
inline std::optional<std::vector<Formula>> conjunction_literals(const Formula& f) {
    std::vector<Formula> lits;
    if (f.is_top()) return lits;
    if (!detail::flatten_literals(f, Connective::And, lits)) return std::nullopt;
    return lits;
}

// Literals of a disjunction in any association; bottom yields the empty list.
inline std::optional<std::vector<Formula>> disjunction_literals(const Formula& f) {
    std::vector<Formula> lits;
    if (f.is_bottom()) return lits;
    if (!detail::flatten_literals(f, Connective::Or, lits)) return std::nullopt;
    return lits;
}

// (l1 & ... & lm) -> (lm+1 | ... | ln), with top/bottom for the empty cases.
// A bare disjunction of literals counts too (implicit top body).
inline bool is_nonnested_rule(const Formula& f) {
    if (disjunction_literals(f)) return true;
    if (!f.is_implies()) return false;
    return conjunction_literals(f.left()).has_value() && disjunction_literals(f.right()).has_value();
}

} // namespace htlp
