// Formula corpora, random generators and brute-force oracles shared by the test suites.
// The oracles here evaluate interpretations one at a time through sat_ht and never go
// through the word-parallel sweep used by the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "htlp/htlp.hpp"

namespace htlp::testing {

// Every formula of depth <= max_depth over the given atoms, built from bottom, atoms,
// and, or, implies. Leaves have depth 1, so 2 atoms give 3, 30 and 2703 formulas at
// depths 1, 2 and 3.
inline std::vector<Formula> all_formulas(const std::vector<std::string>& atoms, int max_depth) {
    std::vector<Formula> leaves{Formula::bottom()};
    for (const auto& a : atoms) leaves.push_back(Formula::atom(a));
    std::vector<Formula> level = leaves;
    for (int d = 2; d <= max_depth; ++d) {
        std::vector<Formula> next = leaves;
        for (const auto& l : level)
            for (const auto& r : level) {
                next.push_back(Formula::conj(l, r));
                next.push_back(Formula::disj(l, r));
                next.push_back(Formula::implies(l, r));
            }
        level = std::move(next);
    }
    return level;
}

inline Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 1 ? 1 : 4);
    const int k = pick(rng);
    if (depth <= 1 || k <= 1) {
        std::uniform_int_distribution<std::size_t> leaf(0, atoms.size());
        const std::size_t i = leaf(rng);
        return i == atoms.size() ? Formula::bottom() : Formula::atom(atoms[i]);
    }
    Formula l = random_formula(rng, atoms, depth - 1);
    Formula r = random_formula(rng, atoms, depth - 1);
    if (k == 2) return Formula::conj(l, r);
    if (k == 3) return Formula::disj(l, r);
    return Formula::implies(l, r);
}

// Exactly depth `depth`: the root is a connective whenever depth > 1.
inline Formula random_formula_exact(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
    if (depth <= 1) return random_formula(rng, atoms, 1);
    std::uniform_int_distribution<int> op(0, 2);
    std::uniform_int_distribution<int> side(0, 1);
    Formula deep = random_formula_exact(rng, atoms, depth - 1);
    Formula other = random_formula(rng, atoms, depth - 1);
    Formula l = side(rng) ? deep : other;
    Formula r = side(rng) ? other : deep;
    if (l.depth() < static_cast<std::size_t>(depth - 1) && r.depth() < static_cast<std::size_t>(depth - 1)) l = deep;
    switch (op(rng)) {
    case 0: return Formula::conj(l, r);
    case 1: return Formula::disj(l, r);
    default: return Formula::implies(l, r);
    }
}

// All (X,Y) pairs over sig, each built directly.
inline std::vector<HtInterpretation> all_interpretations(const Signature& sig) {
    std::vector<HtInterpretation> out;
    const AtomMask n = AtomMask{1} << sig.size();
    for (AtomMask y = 0; y < n; ++y)
        for (AtomMask x = 0; x < n; ++x)
            if ((x & ~y) == 0) out.emplace_back(sig, x, y);
    return out;
}

inline bool oracle_sat(const HtInterpretation& i, const std::vector<Formula>& fs) {
    for (const auto& f : fs)
        if (!sat_ht(i, f)) return false;
    return true;
}

// Pointwise HT equivalence over the union signature.
inline bool oracle_equivalent(const std::vector<Formula>& a, const std::vector<Formula>& b, const Signature& extra = {}) {
    const Signature sig = unite(unite(atoms_of(a), atoms_of(b)), extra);
    for (const auto& i : all_interpretations(sig))
        if (oracle_sat(i, a) != oracle_sat(i, b)) return false;
    return true;
}

// Equilibrium models straight from the definition: Y such that (X,Y) ⊨ T iff X = Y.
inline std::vector<AtomMask> oracle_equilibrium(const std::vector<Formula>& fs, const Signature& sig) {
    std::vector<AtomMask> out;
    const AtomMask n = AtomMask{1} << sig.size();
    for (AtomMask y = 0; y < n; ++y) {
        bool ok = oracle_sat(HtInterpretation(sig, y, y), fs);
        for (AtomMask x = 0; ok && x < n; ++x)
            if ((x & ~y) == 0 && x != y && oracle_sat(HtInterpretation(sig, x, y), fs)) ok = false;
        if (ok) out.push_back(y);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

inline std::vector<AtomMask> masks(const std::vector<AtomSet>& sets) {
    std::vector<AtomMask> out;
    for (const auto& s : sets) out.push_back(s.mask());
    return out;
}

inline std::vector<Formula> formulas_of(const Program& p) { return p.as_theory().formulas(); }

inline std::vector<Rule> random_program(std::mt19937& rng, const std::vector<std::string>& atoms, std::size_t max_rules) {
    std::uniform_int_distribution<std::size_t> count(0, max_rules);
    std::vector<Rule> out;
    const std::size_t n = count(rng);
    for (std::size_t k = 0; k < n; ++k) {
        // Nested expressions: drop implications other than negation.
        auto nested = [&](auto&& self, int depth) -> Formula {
            std::uniform_int_distribution<int> pick(0, depth <= 1 ? 1 : 4);
            const int c = pick(rng);
            if (depth <= 1 || c <= 1) {
                std::uniform_int_distribution<std::size_t> leaf(0, atoms.size());
                const std::size_t i = leaf(rng);
                return i == atoms.size() ? Formula::top() : Formula::atom(atoms[i]);
            }
            if (c == 2) return Formula::conj(self(self, depth - 1), self(self, depth - 1));
            if (c == 3) return Formula::disj(self(self, depth - 1), self(self, depth - 1));
            return Formula::neg(self(self, depth - 1));
        };
        out.emplace_back(nested(nested, 3), nested(nested, 3));
    }
    return out;
}

} // namespace htlp::testing
