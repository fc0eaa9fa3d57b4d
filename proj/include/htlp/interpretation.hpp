#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "htlp/errors.hpp"
#include "htlp/formula.hpp"

namespace htlp {

inline constexpr std::size_t kDefaultEnumerationCap = 16;

// Canonical listing order for atom sets: by cardinality, then by mask value.
inline bool canonical_less(AtomMask a, AtomMask b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
}

// A set of atoms drawn from a signature.
class AtomSet {
public:
    AtomSet(Signature over, AtomMask mask) : over_(std::move(over)), mask_(mask) {
        if (mask_ & ~over_.full_mask()) throw InvalidInterpretation("atom set exceeds its signature");
    }

    AtomSet(Signature over, const std::vector<std::string>& names)
        : AtomSet(over, over.mask_of(names)) {}

    const Signature& over() const noexcept { return over_; }
    AtomMask mask() const noexcept { return mask_; }
    std::vector<std::string> names() const { return over_.names_of(mask_); }

    friend bool operator==(const AtomSet& a, const AtomSet& b) {
        return a.mask_ == b.mask_ && a.over_ == b.over_;
    }

private:
    Signature over_;
    AtomMask mask_;
};

// "∅" for the empty set, otherwise names separated by blanks.
inline std::string to_string(const Signature& sig, AtomMask m) {
    if (m == 0) return "\xE2\x88\x85";
    std::string out;
    for (const auto& n : sig.names_of(m)) {
        if (!out.empty()) out += ' ';
        out += n;
    }
    return out;
}

inline std::string to_string(const AtomSet& s) { return to_string(s.over(), s.mask()); }

// Here-and-there interpretation (X, Y) with X ⊆ Y ⊆ Σ.
class HtInterpretation {
public:
    HtInterpretation(Signature over, AtomMask here, AtomMask there)
        : over_(std::move(over)), here_(here), there_(there) {
        if (here_ & ~there_) throw InvalidInterpretation("here set is not contained in there set");
        if (there_ & ~over_.full_mask()) throw InvalidInterpretation("there set is not contained in the signature");
    }

    HtInterpretation(const Signature& over, const std::vector<std::string>& here,
                     const std::vector<std::string>& there)
        : HtInterpretation(over, over.mask_of(here), over.mask_of(there)) {}

    const Signature& over() const noexcept { return over_; }
    AtomMask here() const noexcept { return here_; }
    AtomMask there() const noexcept { return there_; }
    bool total() const noexcept { return here_ == there_; }

    // Same sets over a larger signature.
    HtInterpretation rebased(const Signature& sig) const {
        if (!sig.includes(over_)) throw SignatureMismatch("target signature does not contain the interpretation's atoms");
        return HtInterpretation(sig, over_.names_of(here_), over_.names_of(there_));
    }

    friend bool operator==(const HtInterpretation& a, const HtInterpretation& b) {
        return a.here_ == b.here_ && a.there_ == b.there_ && a.over_ == b.over_;
    }

    // Canonical order: there set first, then here set.
    friend bool operator<(const HtInterpretation& a, const HtInterpretation& b) {
        if (a.there_ != b.there_) return canonical_less(a.there_, b.there_);
        return a.here_ < b.here_;
    }

private:
    Signature over_;
    AtomMask here_;
    AtomMask there_;
};

// "X | Y", e.g. "∅ | p q".
inline std::string to_string(const HtInterpretation& i) {
    return to_string(i.over(), i.here()) + " | " + to_string(i.over(), i.there());
}

// Finite set of interpretations over one signature, kept sorted in canonical order.
class InterpretationSet {
public:
    explicit InterpretationSet(Signature over) : over_(std::move(over)) {}

    InterpretationSet(Signature over, std::vector<HtInterpretation> members)
        : over_(std::move(over)), members_(std::move(members)) {
        for (const auto& m : members_)
            if (!(m.over() == over_)) throw SignatureMismatch("interpretation set members must share one signature");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const Signature& over() const noexcept { return over_; }
    const std::vector<HtInterpretation>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(AtomMask here, AtomMask there) const {
        HtInterpretation probe(over_, here, there);
        return std::binary_search(members_.begin(), members_.end(), probe);
    }

    bool contains(const HtInterpretation& i) const { return contains(i.here(), i.there()); }

    // First (Y,Y) member lacking some (X,Y) with X ⊆ Y, reported as that missing pair.
    std::optional<std::pair<HtInterpretation, HtInterpretation>> total_closure_violation() const {
        for (const auto& m : members_) {
            if (!m.total()) continue;
            const AtomMask y = m.there();
            // Ascending enumeration of the submasks of y.
            for (AtomMask x = 0;; x = (x - y) & y) {
                if (!contains(x, y)) return std::make_pair(m, HtInterpretation(over_, x, y));
                if (x == y) break;
            }
        }
        return std::nullopt;
    }

    bool is_total_closed() const { return !total_closure_violation().has_value(); }

    friend bool operator==(const InterpretationSet& a, const InterpretationSet& b) {
        return a.over_ == b.over_ && a.members_ == b.members_;
    }

private:
    Signature over_;
    std::vector<HtInterpretation> members_;
};

inline void check_cap(const Signature& sig, std::size_t cap) {
    if (sig.size() > cap || sig.size() > kMaxSignatureAtoms) throw CapExceeded(sig.size(), cap);
}

// Calls fn(here, there) for all 3^|Σ| interpretations in canonical order.
template <typename Fn>
void for_each_interpretation(const Signature& sig, Fn&& fn) {
    const AtomMask full = sig.full_mask();
    std::vector<AtomMask> theres;
    theres.reserve(std::size_t{1} << sig.size());
    for (AtomMask y = 0;; ++y) {
        theres.push_back(y);
        if (y == full) break;
    }
    std::stable_sort(theres.begin(), theres.end(), canonical_less);
    for (AtomMask y : theres) {
        for (AtomMask x = 0;; x = (x - y) & y) {
            fn(x, y);
            if (x == y) break;
        }
    }
}

inline InterpretationSet enumerate_interpretations(const Signature& sig, std::size_t cap = kDefaultEnumerationCap) {
    check_cap(sig, cap);
    std::vector<HtInterpretation> all;
    for_each_interpretation(sig, [&](AtomMask x, AtomMask y) { all.emplace_back(sig, x, y); });
    return InterpretationSet(sig, std::move(all));
}

} // namespace htlp
