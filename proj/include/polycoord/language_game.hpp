#ifndef POLYCOORD_LANGUAGE_GAME_HPP
#define POLYCOORD_LANGUAGE_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polycoord/game.hpp"
#include "polycoord/mwop.hpp"

namespace polycoord {

/// Threshold game: every edge is G^c with the endpoints' own thresholds.
struct ThresholdGame {
    Graph graph;
    std::vector<Rational> gamma;

    /// Throws InvalidInput unless there is one gamma per vertex, each in [0, 1].
    void validate() const;
};

enum class Group : std::uint8_t { A, B };

/// Two-type threshold game with group thresholds 0 <= gamma_B <= gamma_A <= 1.
struct LanguageGame {
    Graph graph;
    std::vector<Group> group;
    Rational gamma_A;
    Rational gamma_B;

    void validate() const;
    const Rational &gamma_of(Vertex v) const { return group.at(v) == Group::A ? gamma_A : gamma_B; }
    ThresholdGame as_threshold_game() const;
};

/// Each edge {i, j} becomes G^c with the lower id as row player.
PolymatrixGame to_polymatrix(const ThresholdGame &tg);
PolymatrixGame to_polymatrix(const LanguageGame &lg);

/// No-profitable-flip test for one threshold player with `na` neighbours on a
/// and `nb` on b, written in cross-multiplied form (weak inequalities).
bool threshold_player_content(const Rational &gamma, Action own, std::size_t na, std::size_t nb);

/// Neighbour-ratio characterisation of Nash equilibria in threshold games.
bool neighbour_ratio_nash_check(const ThresholdGame &tg, const StrategyProfile &profile);
bool neighbour_ratio_nash_check(const LanguageGame &lg, const StrategyProfile &profile);

enum class LanguageCase { MonotoneAllB, MonotoneAllA, Extremal, HardBruteForced };

const char *to_string(LanguageCase c);

struct LanguageSolveReport {
    LanguageCase which = LanguageCase::HardBruteForced;
    StrategyProfile profile;
    Rational welfare;
    /// Minimum cut value (Extremal case only).
    std::optional<Rational> cut_value;
};

/// Requires gamma_A <= 1/2 (all-b) or gamma_B >= 1/2 (all-a); when both
/// hold, all-a is returned. Throws PreconditionViolated otherwise.
LanguageSolveReport solve_monotone(const LanguageGame &lg);

/// Requires gamma_B = 0 and gamma_A = 1. Solves by a directed minimum cut
/// over the components of G[A] and G[B].
LanguageSolveReport solve_extremal(const LanguageGame &lg);

/// Welfare-optimal pure equilibrium by exhaustive search. Throws NoPureNE or
/// InstanceTooLarge.
struct BestNe {
    StrategyProfile profile;
    Rational welfare;
};
BestNe brute_force_best_ne(const PolymatrixGame &game, std::size_t cap = kDefaultEnumerationCap);

/// Monotone cases, then the extremal case, else exhaustive search.
LanguageSolveReport solve_language(const LanguageGame &lg, std::size_t cap = kDefaultEnumerationCap);

} // namespace polycoord

#endif // POLYCOORD_LANGUAGE_GAME_HPP
