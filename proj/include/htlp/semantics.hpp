#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "htlp/errors.hpp"
#include "htlp/formula.hpp"
#include "htlp/interpretation.hpp"
#include "htlp/theory.hpp"

namespace htlp {

namespace detail {

inline AtomMask atom_bit(const Signature& sig, const std::string& name) {
    auto i = sig.index_of(name);
    if (!i) throw SignatureMismatch("atom '" + name + "' is not in the signature");
    return AtomMask{1} << *i;
}

inline bool classical(const Signature& sig, AtomMask y, const Formula& f) {
    switch (f.kind()) {
    case Connective::Bottom: return false;
    case Connective::Atom: return (y & atom_bit(sig, f.name())) != 0;
    case Connective::And: return classical(sig, y, f.left()) && classical(sig, y, f.right());
    case Connective::Or: return classical(sig, y, f.left()) || classical(sig, y, f.right());
    case Connective::Implies: return !classical(sig, y, f.left()) || classical(sig, y, f.right());
    }
    return false;
}

inline bool here_and_there(const Signature& sig, AtomMask x, AtomMask y, const Formula& f) {
    switch (f.kind()) {
    case Connective::Bottom: return false;
    case Connective::Atom: return (x & atom_bit(sig, f.name())) != 0;
    case Connective::And: return here_and_there(sig, x, y, f.left()) && here_and_there(sig, x, y, f.right());
    case Connective::Or: return here_and_there(sig, x, y, f.left()) || here_and_there(sig, x, y, f.right());
    case Connective::Implies:
        return (!here_and_there(sig, x, y, f.left()) || here_and_there(sig, x, y, f.right())) &&
               classical(sig, y, f);
    }
    return false;
}

} // namespace detail

// Classical satisfaction Y ⊨ F.
inline bool sat_classical(const AtomSet& y, const Formula& f) {
    return detail::classical(y.over(), y.mask(), f);
}

// Here-and-there satisfaction (X, Y) ⊨ F. Throws SignatureMismatch when F mentions
// atoms outside the interpretation's signature.
inline bool sat_ht(const HtInterpretation& i, const Formula& f) {
    return detail::here_and_there(i.over(), i.here(), i.there(), f);
}

inline bool sat_ht(const HtInterpretation& i, const Theory& t) {
    for (const auto& f : t.formulas())
        if (!sat_ht(i, f)) return false;
    return true;
}

// Theory compiled against a signature for word-parallel evaluation: one call decides
// HT satisfaction at 64 interpretations at once.
class TheoryEvaluator {
public:
    TheoryEvaluator(const std::vector<Formula>& formulas, const Signature& sig) {
        for (const auto& f : formulas) roots_.push_back(compile(f, sig));
    }

    // here[i] / there[i]: bit k set iff atom i is in X_k / Y_k.
    std::uint64_t evaluate(const std::vector<std::uint64_t>& here, const std::vector<std::uint64_t>& there) const {
        std::vector<Word2> val(ops_.size());
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            const Op& op = ops_[i];
            switch (op.kind) {
            case Connective::Bottom: val[i] = {0, 0}; break;
            case Connective::Atom: val[i] = {here[op.a], there[op.a]}; break;
            case Connective::And:
                val[i] = {val[op.a].here & val[op.b].here, val[op.a].there & val[op.b].there};
                break;
            case Connective::Or:
                val[i] = {val[op.a].here | val[op.b].here, val[op.a].there | val[op.b].there};
                break;
            case Connective::Implies: {
                const std::uint64_t th = ~val[op.a].there | val[op.b].there;
                val[i] = {(~val[op.a].here | val[op.b].here) & th, th};
                break;
            }
            }
        }
        std::uint64_t out = ~std::uint64_t{0};
        for (std::uint32_t r : roots_) out &= val[r].here;
        return out;
    }

private:
    struct Op {
        Connective kind;
        std::uint32_t a = 0;
        std::uint32_t b = 0;
    };
    struct Word2 {
        std::uint64_t here;
        std::uint64_t there;
    };

    std::uint32_t compile(const Formula& f, const Signature& sig) {
        Op op{f.kind()};
        switch (f.kind()) {
        case Connective::Bottom: break;
        case Connective::Atom: {
            auto i = sig.index_of(f.name());
            if (!i) throw SignatureMismatch("atom '" + f.name() + "' is not in the signature");
            op.a = static_cast<std::uint32_t>(*i);
            break;
        }
        default:
            op.a = compile(f.left(), sig);
            op.b = compile(f.right(), sig);
        }
        ops_.push_back(op);
        return static_cast<std::uint32_t>(ops_.size() - 1);
    }

    std::vector<Op> ops_;
    std::vector<std::uint32_t> roots_;
};

// Visits every interpretation over sig in canonical order as fn(x, y, flags) where
// bit j of flags tells whether theory j holds at (x, y). At most 32 theories.
template <typename Fn>
void sweep(const Signature& sig, const std::vector<const TheoryEvaluator*>& theories, std::size_t cap, Fn&& fn) {
    check_cap(sig, cap);
    const std::size_t n = sig.size();
    std::vector<AtomMask> xs, ys;
    xs.reserve(64);
    ys.reserve(64);
    std::vector<std::uint64_t> here(n), there(n);
    std::vector<std::uint64_t> results(theories.size());

    auto flush = [&] {
        std::fill(here.begin(), here.end(), 0);
        std::fill(there.begin(), there.end(), 0);
        for (std::size_t k = 0; k < xs.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) {
                here[i] |= ((xs[k] >> i) & 1) << k;
                there[i] |= ((ys[k] >> i) & 1) << k;
            }
        for (std::size_t j = 0; j < theories.size(); ++j) results[j] = theories[j]->evaluate(here, there);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            std::uint32_t flags = 0;
            for (std::size_t j = 0; j < theories.size(); ++j) flags |= static_cast<std::uint32_t>((results[j] >> k) & 1) << j;
            fn(xs[k], ys[k], flags);
        }
        xs.clear();
        ys.clear();
    };

    for_each_interpretation(sig, [&](AtomMask x, AtomMask y) {
        xs.push_back(x);
        ys.push_back(y);
        if (xs.size() == 64) flush();
    });
    if (!xs.empty()) flush();
}

inline InterpretationSet ht_models(const Theory& t, std::size_t cap = kDefaultEnumerationCap) {
    check_cap(t.signature(), cap);
    TheoryEvaluator ev(t.formulas(), t.signature());
    std::vector<HtInterpretation> out;
    sweep(t.signature(), {&ev}, cap, [&](AtomMask x, AtomMask y, std::uint32_t sat) {
        if (sat) out.emplace_back(t.signature(), x, y);
    });
    return InterpretationSet(t.signature(), std::move(out));
}

// Complement of ht_models; total-closed for every theory.
inline InterpretationSet ht_countermodels(const Theory& t, std::size_t cap = kDefaultEnumerationCap) {
    check_cap(t.signature(), cap);
    TheoryEvaluator ev(t.formulas(), t.signature());
    std::vector<HtInterpretation> out;
    sweep(t.signature(), {&ev}, cap, [&](AtomMask x, AtomMask y, std::uint32_t sat) {
        if (!sat) out.emplace_back(t.signature(), x, y);
    });
    return InterpretationSet(t.signature(), std::move(out));
}

// Outcome of comparing two theories in here-and-there. When they differ, witness is
// the first interpretation (canonical order, union signature) satisfying exactly one.
struct EquivalenceVerdict {
    std::optional<HtInterpretation> witness;
    bool witness_satisfies_first = false;

    bool equivalent() const noexcept { return !witness.has_value(); }
    explicit operator bool() const noexcept { return equivalent(); }
};

inline EquivalenceVerdict ht_equivalent(const Theory& t1, const Theory& t2, std::size_t cap = kDefaultEnumerationCap) {
    const Signature sig = unite(t1.signature(), t2.signature());
    check_cap(sig, cap);
    TheoryEvaluator e1(t1.formulas(), sig), e2(t2.formulas(), sig);
    EquivalenceVerdict verdict;
    sweep(sig, {&e1, &e2}, cap, [&](AtomMask x, AtomMask y, std::uint32_t sat) {
        if (verdict.witness || sat == 0 || sat == 3) return;
        verdict.witness.emplace(sig, x, y);
        verdict.witness_satisfies_first = sat == 1;
    });
    return verdict;
}

// All Y with (Y,Y) ⊨ T and no (X,Y) ⊨ T for X ⊂ Y, in canonical order.
inline std::vector<AtomSet> equilibrium_models(const Theory& t, std::size_t cap = kDefaultEnumerationCap) {
    const Signature& sig = t.signature();
    check_cap(sig, cap);
    TheoryEvaluator ev(t.formulas(), sig);
    std::vector<AtomSet> out;
    // Within a there-group the total point comes last.
    bool smaller_model = false;
    sweep(sig, {&ev}, cap, [&](AtomMask x, AtomMask y, std::uint32_t sat) {
        if (x == 0) smaller_model = false;
        if (x != y) {
            smaller_model = smaller_model || sat;
            return;
        }
        if (sat && !smaller_model) out.emplace_back(sig, y);
    });
    return out;
}

// Behavioural probe of strong equivalence: do t1 ∪ context and t2 ∪ context have the
// same equilibrium models? Evaluated over the union of all three signatures.
inline bool strong_equivalence_probe(const Theory& t1, const Theory& t2, const Theory& context,
                                     std::size_t cap = kDefaultEnumerationCap) {
    const Signature sig = unite(unite(t1.signature(), t2.signature()), context.signature());
    check_cap(sig, cap);
    return equilibrium_models(merge(t1, context).rebased(sig), cap) ==
           equilibrium_models(merge(t2, context).rebased(sig), cap);
}

} // namespace htlp
