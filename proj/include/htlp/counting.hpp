#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "htlp/errors.hpp"

namespace htlp {

// Number of programs over n atoms up to strong equivalence.
struct ProgramCount {
    std::size_t n;
    mpz_class value;

    std::string decimal() const { return value.get_str(10); }
};

// Largest n accepted by count_formula. The decimal value for n atoms has roughly
// 0.3 * 3^n digits, so n = 16 already yields a multi-megabyte integer.
inline constexpr std::size_t kMaxCountAtoms = 16;
inline constexpr std::size_t kMaxRawBruteforceAtoms = 2;
inline constexpr std::size_t kMaxBruteforceAtoms = 4;

// Factor contributed by every there set of size i.
struct CountFactor {
    std::size_t i;
    mpz_class sets_of_size_i;  // C(n, i)
    mpz_class per_set;         // 2^(2^i - 1) + 1
};

inline std::vector<CountFactor> count_factors(std::size_t n) {
    if (n > kMaxCountAtoms)
        throw BoundExceeded("n = " + std::to_string(n) + " exceeds the supported maximum " + std::to_string(kMaxCountAtoms));
    std::vector<CountFactor> out;
    for (std::size_t i = 0; i <= n; ++i) {
        CountFactor f{i, 0, 0};
        mpz_bin_uiui(f.sets_of_size_i.get_mpz_t(), n, i);
        mpz_setbit(f.per_set.get_mpz_t(), (std::uint64_t{1} << i) - 1);
        f.per_set += 1;
        out.push_back(std::move(f));
    }
    return out;
}

// Product over i = 0..n of (2^(2^i - 1) + 1)^C(n,i), exact.
inline ProgramCount count_formula(std::size_t n) {
    ProgramCount c{n, 1};
    for (const auto& f : count_factors(n)) {
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), f.per_set.get_mpz_t(), f.sets_of_size_i.get_ui());
        c.value *= power;
    }
    return c;
}

namespace detail {

// Interpretations (X,Y) over n atoms as (here, there) pairs, grouped by there set.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> all_pairs(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t y = 0; y < (1u << n); ++y)
        for (std::uint32_t x = 0; x < (1u << n); ++x)
            if ((x & ~y) == 0) out.emplace_back(x, y);
    return out;
}

} // namespace detail

// Filters every subset of the 3^n interpretations for total-closedness.
inline ProgramCount count_total_closed_raw(std::size_t n) {
    if (n > kMaxRawBruteforceAtoms)
        throw BoundExceeded("raw subset enumeration supports at most " + std::to_string(kMaxRawBruteforceAtoms) + " atoms");
    const auto pairs = detail::all_pairs(n);
    const std::size_t m = pairs.size();
    // For each total member: the mask of everything sharing its there set.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> closure;  // (total bit, group mask)
    for (std::size_t j = 0; j < m; ++j) {
        if (pairs[j].first != pairs[j].second) continue;
        std::uint32_t group = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (pairs[k].second == pairs[j].second) group |= 1u << k;
        closure.emplace_back(1u << j, group);
    }
    std::uint64_t count = 0;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        bool closed = true;
        for (const auto& [total, group] : closure)
            if ((s & total) && (s & group) != group) {
                closed = false;
                break;
            }
        count += closed;
    }
    return {n, mpz_class(static_cast<unsigned long>(count))};
}

// Number of admissible S_Y for one there set of the given size, by direct enumeration
// of the subsets of {(X,Y) : X ⊆ Y}.
inline std::uint64_t count_closed_groups(std::size_t there_size) {
    const std::size_t members = std::size_t{1} << there_size;  // X ⊆ Y; index members-1 is (Y,Y)
    const std::uint64_t full = (std::uint64_t{1} << members) - 1;
    const std::uint64_t total_bit = std::uint64_t{1} << (members - 1);
    std::uint64_t count = 0;
    for (std::uint64_t s = 0;; ++s) {
        if (!(s & total_bit) || s == full) ++count;
        if (s == full) break;
    }
    return count;
}

// Product over every Y ⊆ Σ of the number of admissible S_Y.
inline ProgramCount count_total_closed_per_y(std::size_t n) {
    if (n > kMaxBruteforceAtoms)
        throw BoundExceeded("brute-force counting supports at most " + std::to_string(kMaxBruteforceAtoms) + " atoms");
    ProgramCount c{n, 1};
    for (std::uint32_t y = 0; y < (1u << n); ++y)
        c.value *= static_cast<unsigned long>(count_closed_groups(static_cast<std::size_t>(std::popcount(y))));
    return c;
}

// Raw subset filter where feasible, per-Y product otherwise.
inline ProgramCount count_bruteforce(std::size_t n) {
    if (n <= kMaxRawBruteforceAtoms) return count_total_closed_raw(n);
    return count_total_closed_per_y(n);
}

} // namespace htlp
