#pragma once

#include <set>
#include <vector>

#include "htlp/formula.hpp"
#include "htlp/interpretation.hpp"
#include "htlp/semantics.hpp"
#include "htlp/theory.hpp"

namespace htlp {

// Conjunction satisfied exactly by (X,Y) and (Y,Y).
struct DnfClause {
    HtInterpretation source;
    Formula clause;
};

// a for a in X; ~b for b outside Y; ~~c for c in Y - X; d -> e for every ordered
// pair d, e in Y - X (d = e included). Groups appear in that order, atoms ascending.
inline DnfClause build_clause(const HtInterpretation& i) {
    const Signature& sig = i.over();
    const auto gap = sig.names_of(i.there() & ~i.here());
    std::vector<Formula> parts;
    for (const auto& a : sig.names_of(i.here())) parts.push_back(Formula::atom(a));
    for (const auto& b : sig.names_of(sig.full_mask() & ~i.there())) parts.push_back(Formula::neg(Formula::atom(b)));
    for (const auto& c : gap) parts.push_back(Formula::neg(Formula::neg(Formula::atom(c))));
    for (const auto& d : gap)
        for (const auto& e : gap) parts.push_back(Formula::implies(Formula::atom(d), Formula::atom(e)));
    return {i, Formula::conj_all(parts)};
}

// One clause per HT model of t, in canonical model order.
inline std::vector<DnfClause> dnf_clauses(const Theory& t, std::size_t cap = kDefaultEnumerationCap) {
    std::vector<DnfClause> out;
    std::set<Formula> seen;
    for (const auto& m : ht_models(t, cap)) {
        DnfClause c = build_clause(m);
        if (seen.insert(c.clause).second) out.push_back(std::move(c));
    }
    return out;
}

// Disjunction of the clauses of all HT models; bottom when t has no models.
inline Formula theory_to_dnf(const Theory& t, std::size_t cap = kDefaultEnumerationCap) {
    std::vector<Formula> disjuncts;
    for (auto& c : dnf_clauses(t, cap)) disjuncts.push_back(std::move(c.clause));
    return Formula::disj_all(disjuncts);
}

} // namespace htlp
