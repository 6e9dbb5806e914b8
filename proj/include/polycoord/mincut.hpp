#ifndef POLYCOORD_MINCUT_HPP
#define POLYCOORD_MINCUT_HPP

#include <cstddef>
#include <vector>

#include "polycoord/profile.hpp"
#include "polycoord/rational.hpp"

namespace polycoord {

/// Weighted graph with a distinguished source and sink. Undirected and
/// directed edges may be mixed; parallel edges are allowed.
struct CutGraph {
    struct Edge {
        Vertex u;
        Vertex v;
        Rational weight;
        bool directed = false;
    };

    std::size_t num_vertices = 0;
    Vertex source = 0;
    Vertex sink = 1;
    std::vector<Edge> edges;

    void add_undirected(Vertex u, Vertex v, Rational w) { edges.push_back({u, v, std::move(w), false}); }
    void add_arc(Vertex u, Vertex v, Rational w) { edges.push_back({u, v, std::move(w), true}); }
};

struct CutResult {
    Rational value;
    /// Value of the maximum flow that certified the cut; equals `value`.
    Rational flow_value;
    /// Membership of each vertex in the source side.
    std::vector<bool> source_side;

    std::vector<Vertex> source_side_vertices() const;
};

/// Weight crossing from `source_side` to its complement: directed edges count
/// only when leaving the source side, undirected edges count either way.
Rational cut_weight(const CutGraph &g, const std::vector<bool> &source_side);

/// Merges edges with the same endpoints (and, for directed edges, the same
/// direction) by summing their weights. Output order is sorted by endpoints,
/// undirected edges first.
CutGraph merge_parallel_edges(const CutGraph &g);

/// Exact minimum source-sink cut via Dinic's max-flow. The source side is
/// the set of vertices reachable from the source in the final residual graph.
/// Throws NegativeWeight on a negative edge weight and InvalidInput on a bad
/// source/sink.
CutResult min_st_cut(const CutGraph &g);

} // namespace polycoord

#endif // POLYCOORD_MINCUT_HPP
