#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "htlp/classify.hpp"
#include "htlp/errors.hpp"
#include "htlp/formula.hpp"
#include "htlp/interpretation.hpp"
#include "htlp/printer.hpp"
#include "htlp/semantics.hpp"
#include "htlp/theory.hpp"

namespace htlp {

// One recorded rewrite; before and after are HT-equivalent. Programs are recorded as
// the conjunction of their rules.
struct TraceStep {
    std::string rule;
    Formula before;
    Formula after;
};

class RewriteTrace {
public:
    void record(std::string rule, Formula before, Formula after) {
        steps_.push_back({std::move(rule), std::move(before), std::move(after)});
    }

    const std::vector<TraceStep>& steps() const noexcept { return steps_; }
    bool empty() const noexcept { return steps_.empty(); }

    // "STEP <rule>: <before> ==> <after>", one line per step.
    std::string render() const {
        std::string out;
        for (const auto& s : steps_) {
            out += "STEP " + s.rule + ": " + print(s.before) + " ==> " + print(s.after) + "\n";
        }
        return out;
    }

private:
    std::vector<TraceStep> steps_;
};

namespace detail {
inline void trace(RewriteTrace* t, const char* rule, const Formula& before, const Formula& after) {
    if (t) t->record(rule, before, after);
}

inline Formula conj_of(const std::vector<Rule>& rules) {
    std::vector<Formula> fs;
    fs.reserve(rules.size());
    for (const auto& r : rules) fs.push_back(r.as_formula());
    return Formula::conj_all(fs);
}
} // namespace detail

// Replaces every disjunction F | G by ((F -> G) -> G) & ((G -> F) -> F).
inline Formula eliminate_connectives(const Formula& f) {
    switch (f.kind()) {
    case Connective::Bottom:
    case Connective::Atom:
        return f;
    case Connective::And:
        return Formula::conj(eliminate_connectives(f.left()), eliminate_connectives(f.right()));
    case Connective::Implies:
        return Formula::implies(eliminate_connectives(f.left()), eliminate_connectives(f.right()));
    case Connective::Or: {
        const Formula l = eliminate_connectives(f.left());
        const Formula r = eliminate_connectives(f.right());
        return Formula::conj(Formula::implies(Formula::implies(l, r), r),
                             Formula::implies(Formula::implies(r, l), l));
    }
    }
    return f;
}

// (F -> G) -> K  ==>  (G | ~F) -> K  and  K | F | ~G
inline std::pair<Formula, Formula> antecedent_rewrite(const Formula& f, const Formula& g, const Formula& k) {
    return {Formula::implies(Formula::disj(g, Formula::neg(f)), k),
            Formula::disj(Formula::disj(k, f), Formula::neg(g))};
}

// Upper bound on the rules one implication of programs may produce; the result has
// |p2| * 2^|p1| rules.
inline constexpr std::size_t kMaxSyntacticRules = std::size_t{1} << 20;

// A program equivalent to (conjunction of p1) -> (conjunction of p2).
inline std::vector<Rule> implication_of_programs(const std::vector<Rule>& p1, const std::vector<Rule>& p2,
                                                 RewriteTrace* trace = nullptr) {
    if (p1.empty()) return p2;
    if (p1.size() >= 40 || (p2.size() << p1.size()) > kMaxSyntacticRules)
        throw BoundExceeded("implication of a " + std::to_string(p1.size()) + "-rule program by a " +
                            std::to_string(p2.size()) + "-rule program exceeds " +
                            std::to_string(kMaxSyntacticRules) + " rules");

    if (p1.size() == 1) {
        const Formula& f = p1.front().body();
        const Formula& g = p1.front().head();
        const Formula fg = p1.front().as_formula();
        if (trace && p2.size() != 1) {
            std::vector<Formula> terms;
            for (const auto& r : p2) terms.push_back(Formula::implies(fg, r.as_formula()));
            detail::trace(trace, "lemma2-split", Formula::implies(fg, detail::conj_of(p2)), Formula::conj_all(terms));
        }
        std::vector<Rule> out;
        out.reserve(2 * p2.size());
        for (const auto& hk : p2) {
            // (F -> G) -> (H -> K)  ==>  (H & (G | ~F)) -> K  and  H -> (K | F | ~G)
            const Formula& h = hk.body();
            const Formula& k = hk.head();
            Rule first(Formula::conj(h, Formula::disj(g, Formula::neg(f))), k);
            Rule second(h, Formula::disj(Formula::disj(k, f), Formula::neg(g)));
            detail::trace(trace, "lemma1", Formula::implies(fg, hk.as_formula()),
                          Formula::conj(first.as_formula(), second.as_formula()));
            out.push_back(std::move(first));
            out.push_back(std::move(second));
        }
        return out;
    }

    // p1 = p1' ∪ p1'' with |p1'| <= |p1''|; p1 -> p2 == p1' -> (p1'' -> p2).
    const std::size_t cut = p1.size() / 2;
    const std::vector<Rule> front(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(cut));
    const std::vector<Rule> back(p1.begin() + static_cast<std::ptrdiff_t>(cut), p1.end());
    detail::trace(trace, "currying", Formula::implies(detail::conj_of(p1), detail::conj_of(p2)),
                  Formula::implies(detail::conj_of(front),
                                   Formula::implies(detail::conj_of(back), detail::conj_of(p2))));
    return implication_of_programs(front, implication_of_programs(back, p2, trace), trace);
}

inline Program implication_of_programs(const Program& p1, const Program& p2, RewriteTrace* trace = nullptr) {
    return Program(implication_of_programs(p1.rules(), p2.rules(), trace), unite(p1.signature(), p2.signature()));
}

namespace detail {

// Flattens an associative chain of op, folding constants and repeated operands.
inline void chain_operands(const Formula& f, Connective op, std::vector<Formula>& out);

inline Formula fold_constants(const Formula& f) {
    switch (f.kind()) {
    case Connective::Bottom:
    case Connective::Atom:
        return f;
    case Connective::And:
    case Connective::Or: {
        const bool is_and = f.is_and();
        std::vector<Formula> ops;
        chain_operands(f, f.kind(), ops);
        std::vector<Formula> kept;
        for (auto& o : ops) {
            if (is_and ? o.is_bottom() : o.is_top()) return o;
            if (is_and ? o.is_top() : o.is_bottom()) continue;
            if (std::find(kept.begin(), kept.end(), o) == kept.end()) kept.push_back(o);
        }
        return is_and ? Formula::conj_all(kept) : Formula::disj_all(kept);
    }
    case Connective::Implies: {
        const Formula a = fold_constants(f.left());
        const Formula b = fold_constants(f.right());
        if (b.is_bottom()) {
            if (a.is_bottom()) return Formula::top();
            if (a.is_top()) return Formula::bottom();
            // ~~~G == ~G
            if (a.is_negation() && a.left().is_negation() && !a.left().is_top()) return a.left();
            return Formula::neg(a);
        }
        if (a.is_bottom() || b.is_top() || a == b) return Formula::top();
        if (a.is_top()) return b;
        return Formula::implies(a, b);
    }
    }
    return f;
}

inline void chain_operands(const Formula& f, Connective op, std::vector<Formula>& out) {
    if (f.kind() == op) {
        chain_operands(f.left(), op, out);
        chain_operands(f.right(), op, out);
        return;
    }
    const Formula g = fold_constants(f);
    if (g.kind() == op) chain_operands(g, op, out);
    else out.push_back(g);
}

// Pre-order replacement of node number `index`.
inline Formula replace_node(const Formula& f, std::size_t& index, const Formula& with) {
    if (index == 0) return with;
    --index;
    if (f.is_bottom() || f.is_atom()) return f;
    const std::size_t left_size = f.left().size();
    if (index < left_size) {
        Formula l = replace_node(f.left(), index, with);
        switch (f.kind()) {
        case Connective::And: return Formula::conj(l, f.right());
        case Connective::Or: return Formula::disj(l, f.right());
        default: return Formula::implies(l, f.right());
        }
    }
    index -= left_size;
    Formula r = replace_node(f.right(), index, with);
    switch (f.kind()) {
    case Connective::And: return Formula::conj(f.left(), r);
    case Connective::Or: return Formula::disj(f.left(), r);
    default: return Formula::implies(f.left(), r);
    }
}

inline Formula node_at(const Formula& f, std::size_t index) {
    if (index == 0) return f;
    --index;
    const std::size_t left_size = f.left().size();
    if (index < left_size) return node_at(f.left(), index);
    return node_at(f.right(), index - left_size);
}

// Models of one formula over sig, one flag per interpretation in canonical order.
inline std::vector<bool> model_flags(const Formula& f, const Signature& sig, std::size_t cap) {
    TheoryEvaluator ev({f}, sig);
    std::vector<bool> out;
    sweep(sig, {&ev}, cap, [&](AtomMask, AtomMask, std::uint32_t sat) { out.push_back(sat != 0); });
    return out;
}

} // namespace detail

// HT-preserving cleanup of a program: constant folding, removal of HT-tautological
// rules, and greedy replacement of subformulas by top or bottom whenever the rule's
// models stay the same. Semantic steps are skipped for rules over more than `cap` atoms.
inline Program simplify(const Program& p, std::size_t cap = kDefaultEnumerationCap, RewriteTrace* trace = nullptr) {
    std::vector<Rule> out;
    std::set<Rule> seen;
    for (const auto& original : p.rules()) {
        Rule r(detail::fold_constants(original.body()), detail::fold_constants(original.head()));
        if (!(r == original)) detail::trace(trace, "simplify-fold", original.as_formula(), r.as_formula());

        if (r.body().is_bottom() || r.head().is_top()) {
            detail::trace(trace, "simplify-tautology", r.as_formula(), Formula::top());
            continue;
        }

        const Signature sig = atoms_of(original.as_formula());
        if (sig.size() <= cap) {
            const std::vector<bool> target = detail::model_flags(r.as_formula(), sig, cap);
            if (std::find(target.begin(), target.end(), false) == target.end()) {
                detail::trace(trace, "simplify-tautology", r.as_formula(), Formula::top());
                continue;
            }
            for (bool changed = true; changed;) {
                changed = false;
                const std::size_t body_nodes = r.body().size();
                const std::size_t total = body_nodes + r.head().size();
                for (std::size_t pos = 0; pos < total && !changed; ++pos) {
                    const bool in_body = pos < body_nodes;
                    const Formula& part = in_body ? r.body() : r.head();
                    const std::size_t local = in_body ? pos : pos - body_nodes;
                    if (atoms_of(detail::node_at(part, local)).empty()) continue;
                    for (const Formula& constant : {Formula::bottom(), Formula::top()}) {
                        std::size_t idx = local;
                        const Formula replaced = detail::fold_constants(detail::replace_node(part, idx, constant));
                        Rule candidate = in_body ? Rule(replaced, r.head()) : Rule(r.body(), replaced);
                        if (candidate.body().is_bottom() || candidate.head().is_top()) continue;
                        if (detail::model_flags(candidate.as_formula(), sig, cap) != target) continue;
                        detail::trace(trace, "simplify-reduce", r.as_formula(), candidate.as_formula());
                        r = std::move(candidate);
                        changed = true;
                        break;
                    }
                }
            }
        }
        if (!seen.insert(r).second) {
            detail::trace(trace, "simplify-dedupe", Formula::conj(r.as_formula(), r.as_formula()), r.as_formula());
            continue;
        }
        out.push_back(std::move(r));
    }

    // Drop rules whose countermodels are all countermodels of some other kept rule.
    const Signature sig = atoms_of(Program(out).as_theory().formulas());
    if (out.size() > 1 && sig.size() <= cap) {
        std::vector<std::vector<bool>> flags;
        flags.reserve(out.size());
        for (const auto& r : out) flags.push_back(detail::model_flags(r.as_formula(), sig, cap));
        std::vector<std::size_t> failing(flags.front().size(), 0);
        for (const auto& f : flags)
            for (std::size_t i = 0; i < f.size(); ++i) failing[i] += !f[i];
        std::vector<bool> keep(out.size(), true);
        for (std::size_t k = out.size(); k-- > 0;) {
            bool needed = false;
            for (std::size_t i = 0; i < failing.size() && !needed; ++i) needed = !flags[k][i] && failing[i] == 1;
            if (needed) continue;
            keep[k] = false;
            for (std::size_t i = 0; i < failing.size(); ++i) failing[i] -= !flags[k][i];
        }
        std::vector<Rule> kept;
        for (std::size_t k = 0; k < out.size(); ++k)
            if (keep[k]) kept.push_back(out[k]);
        if (kept.size() != out.size()) detail::trace(trace, "simplify-redundant", detail::conj_of(out), detail::conj_of(kept));
        out = std::move(kept);
    }
    return Program(std::move(out), p.signature());
}

struct SyntacticOptions {
    // Run simplify on every intermediate program as well as on the result.
    bool simplify = false;
    std::size_t cap = kDefaultEnumerationCap;
};

namespace detail {

inline std::vector<Rule> to_rules(const Formula& f, const SyntacticOptions& opt, RewriteTrace* trace) {
    std::vector<Rule> out;
    if (f.is_bottom() || f.is_atom()) {
        out.push_back(Rule::fact(f));
    } else if (f.is_and()) {
        out = to_rules(f.left(), opt, trace);
        std::vector<Rule> rhs = to_rules(f.right(), opt, trace);
        out.insert(out.end(), rhs.begin(), rhs.end());
        detail::trace(trace, "conj-merge", f, conj_of(out));
    } else if (is_rule(f)) {
        out.push_back(Rule::from_formula(f));
    } else if (f.is_or()) {
        // Only disjunctions that are not already part of a rule get eliminated.
        const Formula g = Formula::conj(Formula::implies(Formula::implies(f.left(), f.right()), f.right()),
                                        Formula::implies(Formula::implies(f.right(), f.left()), f.left()));
        detail::trace(trace, "or-elim", f, g);
        out = to_rules(g, opt, trace);
    } else {
        out = implication_of_programs(to_rules(f.left(), opt, trace), to_rules(f.right(), opt, trace), trace);
    }
    if (opt.simplify && !(f.is_bottom() || f.is_atom())) {
        out = simplify(Program(out), opt.cap, trace).rules();
    }
    return out;
}

} // namespace detail

// Structural-induction translation of one formula into a (possibly nested) program.
// Disjunctions are rewritten into implications only where the subformula is not
// already a rule.
inline Program formula_to_program_syn(const Formula& f, const SyntacticOptions& opt = {}, RewriteTrace* trace = nullptr) {
    return Program(detail::to_rules(f, opt, trace), atoms_of(f));
}

// Formula-by-formula translation of a theory; repeated rules are dropped.
inline Program theory_to_program_syn(const Theory& t, const SyntacticOptions& opt = {}, RewriteTrace* trace = nullptr) {
    std::vector<Rule> rules;
    for (const auto& f : t.formulas()) {
        Program part = formula_to_program_syn(f, opt, trace);
        rules.insert(rules.end(), part.rules().begin(), part.rules().end());
    }
    return Program(std::move(rules), t.signature()).deduplicated();
}

} // namespace htlp
