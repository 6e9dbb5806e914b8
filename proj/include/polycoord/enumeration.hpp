#ifndef POLYCOORD_ENUMERATION_HPP
#define POLYCOORD_ENUMERATION_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

#include "polycoord/errors.hpp"
#include "polycoord/profile.hpp"

namespace polycoord::detail {

inline void require_within_cap(std::size_t n, std::size_t cap, const char *what) {
    if (cap == 0) {
        throw InvalidInput("enumeration cap must be positive");
    }
    if (n > cap || n >= 63) {
        throw InstanceTooLarge(std::string(what) + ": " + std::to_string(n) +
                               " vertices exceeds the enumeration cap of " + std::to_string(cap));
    }
}

/// Lexicographic rank of a profile: vertex 0 is the most significant bit and
/// b counts as 1, so comparing ranks compares action strings.
inline std::uint64_t lex_rank_bit(std::size_t n, Vertex v) { return std::uint64_t{1} << (n - 1 - v); }

/**
 * Walks all 2^n profiles in Gray-code order starting from all-a. Calls
 * `on_flip(v)` before vertex v changes action (the profile still shows the
 * old action), then `visit(rank)` for the new profile. `visit` is called
 * first for the starting profile.
 */
template <typename OnFlip, typename Visit>
void gray_walk(StrategyProfile &profile, OnFlip &&on_flip, Visit &&visit) {
    const std::size_t n = profile.size();
    std::uint64_t rank = 0;
    visit(rank);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(step));
        const Vertex v = n - 1 - bit;
        on_flip(v);
        profile[v] = flip(profile[v]);
        rank ^= std::uint64_t{1} << bit;
        visit(rank);
    }
}

inline StrategyProfile profile_from_rank(std::size_t n, std::uint64_t rank) {
    StrategyProfile p(n);
    for (Vertex v = 0; v < n; ++v) {
        if (rank & lex_rank_bit(n, v)) {
            p[v] = Action::B;
        }
    }
    return p;
}

} // namespace polycoord::detail

#endif // POLYCOORD_ENUMERATION_HPP
