#pragma once

#include <string>
#include <vector>

#include "htlp/errors.hpp"
#include "htlp/formula.hpp"
#include "htlp/interpretation.hpp"
#include "htlp/printer.hpp"
#include "htlp/semantics.hpp"
#include "htlp/theory.hpp"

namespace htlp {

// The nonnested rule that removes exactly one countermodel (or, for a total source,
// every interpretation sharing its there set).
struct CountermodelRule {
    HtInterpretation source;
    Rule rule;
};

// body: every atom of X, then ~c for every c outside Y.
// head: a | ~a for every a in Y - X, bottom when X = Y.
inline CountermodelRule build_rule(const HtInterpretation& i) {
    const Signature& sig = i.over();
    std::vector<Formula> body, head;
    for (const auto& b : sig.names_of(i.here())) body.push_back(Formula::atom(b));
    for (const auto& c : sig.names_of(sig.full_mask() & ~i.there())) body.push_back(Formula::neg(Formula::atom(c)));
    for (const auto& a : sig.names_of(i.there() & ~i.here())) {
        head.push_back(Formula::atom(a));
        head.push_back(Formula::neg(Formula::atom(a)));
    }
    return {i, Rule(Formula::conj_all(body), Formula::disj_all(head))};
}

// One rule per member of a total-closed set; the result's countermodels are exactly s.
inline Program program_from_set(const InterpretationSet& s) {
    if (auto bad = s.total_closure_violation())
        throw NotTotalClosed("set contains (" + to_string(bad->first) + ") but not (" + to_string(bad->second) + ")");
    std::vector<Rule> rules;
    rules.reserve(s.size());
    for (const auto& i : s) rules.push_back(build_rule(i).rule);
    return Program(std::move(rules), s.over());
}

enum class CountermodelMode {
    Whole,      // countermodels of the whole theory over its signature
    PerFormula  // union of the per-formula programs, each over the formula's own atoms
};

inline Program theory_to_program_cm(const Theory& t, CountermodelMode mode = CountermodelMode::Whole,
                                    std::size_t cap = kDefaultEnumerationCap) {
    if (mode == CountermodelMode::Whole) {
        if (t.empty()) return Program({}, t.signature());
        return program_from_set(ht_countermodels(t, cap));
    }
    std::vector<Rule> rules;
    for (const auto& f : t.formulas()) {
        Program part = program_from_set(ht_countermodels(Theory({f}), cap));
        rules.insert(rules.end(), part.rules().begin(), part.rules().end());
    }
    return Program(std::move(rules), t.signature()).deduplicated();
}

} // namespace htlp
