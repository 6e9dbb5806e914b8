#ifndef POLYCOORD_HYPERGRAPH_HPP
#define POLYCOORD_HYPERGRAPH_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "polycoord/profile.hpp"

namespace polycoord {

/// 3-uniform hypergraph on vertices 0..n-1.
class Hypergraph3 {
public:
    using Hyperedge = std::array<Vertex, 3>;

    Hypergraph3() = default;
    explicit Hypergraph3(std::size_t n) : n_(n) {}
    /// Throws InvalidInput on repeated vertices inside an edge, out-of-range
    /// ids, or a repeated hyperedge.
    Hypergraph3(std::size_t n, const std::vector<Hyperedge> &edges);

    void add_edge(Hyperedge e);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Hyperedge> &edges() const { return edges_; }

    /// `members` is a membership mask of size num_vertices().
    bool is_transversal(const std::vector<bool> &members) const;
    bool is_transversal(const std::vector<Vertex> &set) const;

private:
    std::size_t n_ = 0;
    std::vector<Hyperedge> edges_;
};

} // namespace polycoord

#endif // POLYCOORD_HYPERGRAPH_HPP
