#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "htlp/errors.hpp"

namespace htlp {

// Identifier grammar for atoms: [a-z][A-Za-z0-9_]*
inline bool is_valid_atom_name(std::string_view name) {
    if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

// Words the parser treats as keywords; they cannot name atoms.
inline bool is_reserved_word(std::string_view name) {
    return name == "bot" || name == "top" || name == "not";
}

enum class Connective : std::uint8_t { Bottom, Atom, And, Or, Implies };

// Immutable propositional formula over the primitives bottom, atoms, and, or, implies.
// Negation, top and equivalence are stored in their expanded form. Copies share structure.
class Formula {
    struct Node {
        Connective kind;
        std::string name;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

public:
    // Default-constructed formula is bottom.
    Formula() : node_(bottom_node()) {}

    static Formula bottom() { return Formula{}; }

    static Formula atom(std::string name) {
        if (!is_valid_atom_name(name) || is_reserved_word(name))
            throw std::invalid_argument("invalid atom name '" + name + "'");
        return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), nullptr, nullptr}));
    }

    static Formula conj(const Formula& l, const Formula& r) { return binary(Connective::And, l, r); }
    static Formula disj(const Formula& l, const Formula& r) { return binary(Connective::Or, l, r); }
    static Formula implies(const Formula& l, const Formula& r) { return binary(Connective::Implies, l, r); }
    static Formula neg(const Formula& f) { return implies(f, bottom()); }
    static Formula top() { return implies(bottom(), bottom()); }
    static Formula equiv(const Formula& l, const Formula& r) { return conj(implies(l, r), implies(r, l)); }

    // Left-folded conjunction; top when empty.
    static Formula conj_all(const std::vector<Formula>& fs) {
        if (fs.empty()) return top();
        Formula acc = fs.front();
        for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
        return acc;
    }

    // Left-folded disjunction; bottom when empty.
    static Formula disj_all(const std::vector<Formula>& fs) {
        if (fs.empty()) return bottom();
        Formula acc = fs.front();
        for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
        return acc;
    }

    Connective kind() const noexcept { return node_->kind; }
    bool is_bottom() const noexcept { return kind() == Connective::Bottom; }
    bool is_atom() const noexcept { return kind() == Connective::Atom; }
    bool is_and() const noexcept { return kind() == Connective::And; }
    bool is_or() const noexcept { return kind() == Connective::Or; }
    bool is_implies() const noexcept { return kind() == Connective::Implies; }

    // Implies(F, Bottom)
    bool is_negation() const noexcept { return is_implies() && node_->right->kind == Connective::Bottom; }
    // Implies(Bottom, Bottom)
    bool is_top() const noexcept { return is_negation() && node_->left->kind == Connective::Bottom; }

    // Atom name; empty for non-atoms.
    const std::string& name() const noexcept { return node_->name; }

    // Children of binary nodes. Calling these on a leaf is a logic error.
    Formula left() const { return Formula(node_->left); }
    Formula right() const { return Formula(node_->right); }

    // Total structural order: kind, then name, then children left to right.
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) { return compare(a.node_.get(), b.node_.get()); }
    friend bool operator==(const Formula& a, const Formula& b) { return compare(a.node_.get(), b.node_.get()) == 0; }

    std::size_t size() const {
        std::size_t n = 1;
        if (node_->left) n += Formula(node_->left).size();
        if (node_->right) n += Formula(node_->right).size();
        return n;
    }

    std::size_t depth() const {
        std::size_t d = 0;
        if (node_->left) d = std::max(d, Formula(node_->left).depth());
        if (node_->right) d = std::max(d, Formula(node_->right).depth());
        return d + 1;
    }

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static std::shared_ptr<const Node> bottom_node() {
        static const auto node = std::make_shared<const Node>(Node{Connective::Bottom, {}, nullptr, nullptr});
        return node;
    }

    static Formula binary(Connective k, const Formula& l, const Formula& r) {
        return Formula(std::make_shared<const Node>(Node{k, {}, l.node_, r.node_}));
    }

    static std::strong_ordering compare(const Node* a, const Node* b) {
        if (a == b) return std::strong_ordering::equal;
        if (auto c = a->kind <=> b->kind; c != 0) return c;
        if (a->kind == Connective::Atom) return a->name.compare(b->name) <=> 0;
        if (a->kind == Connective::Bottom) return std::strong_ordering::equal;
        if (auto c = compare(a->left.get(), b->left.get()); c != 0) return c;
        return compare(a->right.get(), b->right.get());
    }

    std::shared_ptr<const Node> node_;
};

using AtomMask = std::uint64_t;

// Largest signature representable by AtomMask.
inline constexpr std::size_t kMaxSignatureAtoms = 63;

// Finite set of atoms kept in lexicographic name order. Atom i of the signature
// corresponds to bit i of an AtomMask.
class Signature {
public:
    Signature() : atoms_(std::make_shared<const std::vector<std::string>>()) {}

    explicit Signature(std::vector<std::string> names) {
        for (const auto& n : names)
            if (!is_valid_atom_name(n) || is_reserved_word(n))
                throw std::invalid_argument("invalid atom name '" + n + "'");
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        atoms_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    Signature(std::initializer_list<std::string> names) : Signature(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return atoms_->size(); }
    bool empty() const noexcept { return atoms_->empty(); }
    const std::vector<std::string>& atoms() const noexcept { return *atoms_; }
    const std::string& operator[](std::size_t i) const { return (*atoms_)[i]; }
    auto begin() const noexcept { return atoms_->begin(); }
    auto end() const noexcept { return atoms_->end(); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = std::lower_bound(atoms_->begin(), atoms_->end(), name);
        if (it == atoms_->end() || *it != name) return std::nullopt;
        return static_cast<std::size_t>(it - atoms_->begin());
    }

    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    bool includes(const Signature& other) const {
        return std::includes(atoms_->begin(), atoms_->end(), other.begin(), other.end());
    }

    // Mask with every atom of the signature set.
    AtomMask full_mask() const {
        if (size() > kMaxSignatureAtoms) throw BoundExceeded("signature too large for an atom mask");
        return size() == 0 ? 0 : (AtomMask{1} << size()) - 1;
    }

    AtomMask mask_of(const std::vector<std::string>& names) const {
        AtomMask m = 0;
        for (const auto& n : names) {
            auto i = index_of(n);
            if (!i) throw SignatureMismatch("atom '" + n + "' is not in the signature");
            m |= AtomMask{1} << *i;
        }
        return m;
    }

    std::vector<std::string> names_of(AtomMask m) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (m >> i & 1) out.push_back((*atoms_)[i]);
        return out;
    }

    friend Signature unite(const Signature& a, const Signature& b) {
        std::vector<std::string> names;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(names));
        Signature s;
        s.atoms_ = std::make_shared<const std::vector<std::string>>(std::move(names));
        return s;
    }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> atoms_;
};

namespace detail {
inline void collect_atoms(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind()) {
    case Connective::Bottom: return;
    case Connective::Atom: out.push_back(f.name()); return;
    default:
        collect_atoms(f.left(), out);
        collect_atoms(f.right(), out);
    }
}
} // namespace detail

// Atoms occurring in f, canonical order.
inline Signature atoms_of(const Formula& f) {
    std::vector<std::string> names;
    detail::collect_atoms(f, names);
    return Signature(std::move(names));
}

inline Signature atoms_of(const std::vector<Formula>& fs) {
    std::vector<std::string> names;
    for (const auto& f : fs) detail::collect_atoms(f, names);
    return Signature(std::move(names));
}

} // namespace htlp
