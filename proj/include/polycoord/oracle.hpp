#ifndef POLYCOORD_ORACLE_HPP
#define POLYCOORD_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "polycoord/game.hpp"
#include "polycoord/hypergraph.hpp"
#include "polycoord/mwop.hpp"

namespace polycoord {

/// Default vertex cap for exhaustive cut enumeration.
inline constexpr std::size_t kDefaultCutCap = 20;

// Exhaustive oracles. Every one of them walks all candidates, breaks ties
// lexicographically (a < b, then vertex order), re-verifies its witness by
// independent evaluation, and throws InstanceTooLarge above its cap.

struct ProfileValue {
    StrategyProfile profile;
    Rational value;
};

ProfileValue brute_welfare_max(const PolymatrixGame &game, std::size_t cap = kDefaultEnumerationCap);

/// Throws NotAPotentialGame if some edge lacks a potential.
ProfileValue brute_potential_max(const PolymatrixGame &game, std::size_t cap = kDefaultEnumerationCap);

/// All pure Nash equilibria in lexicographic order.
std::vector<StrategyProfile> enumerate_pure_ne(const PolymatrixGame &game,
                                               std::size_t cap = kDefaultEnumerationCap);

/// Welfare-maximal pure Nash equilibrium. Throws NoPureNE if there is none.
ProfileValue brute_best_ne(const PolymatrixGame &game, std::size_t cap = kDefaultEnumerationCap);

struct MaxCutResult {
    /// Side of each vertex, a or b; vertex 0 is always on side a.
    StrategyProfile partition;
    std::size_t cut_size = 0;
};

MaxCutResult brute_max_cut(const Graph &graph, std::size_t cap = kDefaultCutCap);

struct TransversalResult {
    std::vector<Vertex> set; ///< ascending
    std::size_t size = 0;
};

/// Minimum-cardinality hitting set; among equal sizes the lexicographically
/// smallest sorted vertex list wins.
TransversalResult brute_min_transversal(const Hypergraph3 &h, std::size_t cap = kDefaultEnumerationCap);

} // namespace polycoord

#endif // POLYCOORD_ORACLE_HPP
