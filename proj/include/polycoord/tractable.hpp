#ifndef POLYCOORD_TRACTABLE_HPP
#define POLYCOORD_TRACTABLE_HPP

#include <optional>
#include <vector>

#include "polycoord/game.hpp"
#include "polycoord/mincut.hpp"
#include "polycoord/mwop.hpp"

namespace polycoord {

/**
 * Auxiliary undirected graph for an MWOP instance whose arc matrices all
 * satisfy m_aa + m_bb >= m_ab + m_ba.
 *
 * Vertices 0..n-1 are the instance vertices, `source()` = n stands for action a
 * and `sink()` = n+1 for action b. Every instance vertex has one source edge and one
 * sink edge; every arc contributes one vertex-vertex edge. Raw weights may be
 * negative; the shifted weight subtracts `shift` (the minimum raw weight) from
 * every terminal edge so that all weights become non-negative.
 *
 * For every partition P, the shifted weight of the induced source-sink cut equals
 * -value(P) - n * shift.
 */
struct AuxGraph {
    struct Edge {
        Vertex u;
        Vertex v;
        Rational raw_weight;
        Rational shifted_weight;
    };

    std::size_t n = 0;
    Rational shift;
    std::vector<Edge> edges;

    Vertex source() const { return n; }
    Vertex sink() const { return n + 1; }

    /// The source-sink cut problem over the shifted weights.
    CutGraph cut_graph() const;
    /// shifted weight of the cut {source} + a-players versus {sink} + b-players.
    Rational cut_weight_of(const StrategyProfile &partition) const;
};

/// Throws PropertyViolated if some arc matrix fails the diagonal-dominance
/// property.
AuxGraph build_aux_graph(const MwopInstance &inst);

enum class SolveStatus { SolvedTrivialA, SolvedTrivialB, SolvedMinCut, Hard };

const char *to_string(SolveStatus s);

struct SolveReport {
    SolveStatus status = SolveStatus::Hard;
    std::optional<StrategyProfile> profile;
    std::optional<Rational> value;
};

/// Min source-sink cut of the auxiliary graph. Throws PropertyViolated unless
/// every arc matrix has Property (iii).
SolveReport solve_by_min_cut(const MwopInstance &inst);

/// Polynomial-time MWOP: all-a, all-b, or a source-sink minimum cut, dispatched on
/// classify_instance. Returns status Hard (without a profile) otherwise.
SolveReport solve_mwop(const MwopInstance &inst);

/// MWOP instance whose arcs follow each edge's stored orientation, with the
/// welfare matrix (resp. potential matrix) on every arc.
MwopInstance welfare_instance(const PolymatrixGame &game);
MwopInstance potential_instance(const PolymatrixGame &game);

SolveReport maximize_welfare(const PolymatrixGame &game);
/// Throws NotAPotentialGame when some edge game has no exact potential.
SolveReport maximize_potential(const PolymatrixGame &game);

} // namespace polycoord

#endif // POLYCOORD_TRACTABLE_HPP
