#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "htlp/classify.hpp"
#include "htlp/formula.hpp"

namespace htlp {

// Finite list of formulas together with the signature they are interpreted over.
// The signature always contains every atom that occurs in the formulas.
class Theory {
public:
    Theory() = default;

    explicit Theory(std::vector<Formula> formulas, const Signature& extra = {})
        : formulas_(std::move(formulas)), signature_(unite(atoms_of(formulas_), extra)) {}

    Theory(std::initializer_list<Formula> formulas) : Theory(std::vector<Formula>(formulas)) {}

    const std::vector<Formula>& formulas() const& noexcept { return formulas_; }
    std::vector<Formula> formulas() && { return std::move(formulas_); }
    const Signature& signature() const noexcept { return signature_; }
    bool empty() const noexcept { return formulas_.empty(); }
    std::size_t size() const noexcept { return formulas_.size(); }

    // Same formulas over a larger signature.
    Theory rebased(const Signature& sig) const {
        if (!sig.includes(signature_))
            throw SignatureMismatch("target signature does not contain the theory's atoms");
        Theory t = *this;
        t.signature_ = sig;
        return t;
    }

    // Union of formulas over the union signature.
    friend Theory merge(const Theory& a, const Theory& b) {
        std::vector<Formula> fs = a.formulas_;
        fs.insert(fs.end(), b.formulas_.begin(), b.formulas_.end());
        return Theory(std::move(fs), unite(a.signature_, b.signature_));
    }

private:
    std::vector<Formula> formulas_;
    Signature signature_;
};

// body -> head over nested expressions.
class Rule {
public:
    Rule(Formula body, Formula head) : body_(std::move(body)), head_(std::move(head)) {
        if (!is_nested_expression(body_) || !is_nested_expression(head_))
            throw std::invalid_argument("rule body and head must be nested expressions");
    }

    // top -> head
    static Rule fact(Formula head) { return Rule(Formula::top(), std::move(head)); }

    // A top-level implication between nested expressions is split into body and head
    // (so "F -> bot" keeps F as its body); any other nested expression G becomes top -> G.
    static Rule from_formula(const Formula& f) {
        if (f.is_implies() && !f.is_top() && is_nested_expression(f.left()) && is_nested_expression(f.right()))
            return Rule(f.left(), f.right());
        if (is_nested_expression(f)) return fact(f);
        throw std::invalid_argument("formula is not a rule");
    }

    const Formula& body() const noexcept { return body_; }
    const Formula& head() const noexcept { return head_; }

    Formula as_formula() const { return Formula::implies(body_, head_); }

    bool is_nonnested() const {
        return conjunction_literals(body_).has_value() && disjunction_literals(head_).has_value();
    }

    friend auto operator<=>(const Rule&, const Rule&) = default;
    friend bool operator==(const Rule&, const Rule&) = default;

private:
    Formula body_;
    Formula head_;
};

// A finite program: ordered list of rules over a signature.
class Program {
public:
    Program() = default;

    explicit Program(std::vector<Rule> rules, const Signature& extra = {}) : rules_(std::move(rules)) {
        std::vector<Formula> fs;
        fs.reserve(rules_.size());
        for (const auto& r : rules_) fs.push_back(r.as_formula());
        signature_ = unite(atoms_of(fs), extra);
    }

    const std::vector<Rule>& rules() const& noexcept { return rules_; }
    std::vector<Rule> rules() && { return std::move(rules_); }
    const Signature& signature() const noexcept { return signature_; }
    bool empty() const noexcept { return rules_.empty(); }
    std::size_t size() const noexcept { return rules_.size(); }

    bool is_nonnested() const {
        return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_nonnested(); });
    }

    Theory as_theory() const {
        std::vector<Formula> fs;
        fs.reserve(rules_.size());
        for (const auto& r : rules_) fs.push_back(r.as_formula());
        return Theory(std::move(fs), signature_);
    }

    // The conjunction of the rules; top for the empty program.
    Formula as_formula() const {
        std::vector<Formula> fs;
        for (const auto& r : rules_) fs.push_back(r.as_formula());
        return Formula::conj_all(fs);
    }

    // Drops repeated rules, keeping first occurrences in place.
    Program deduplicated() const {
        std::vector<Rule> out;
        std::set<Rule> seen;
        for (const auto& r : rules_)
            if (seen.insert(r).second) out.push_back(r);
        return Program(std::move(out), signature_);
    }

private:
    std::vector<Rule> rules_;
    Signature signature_;
};

} // namespace htlp
