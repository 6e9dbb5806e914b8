#include "polycoord/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "polycoord/errors.hpp"

namespace polycoord {

Hypergraph3::Hypergraph3(std::size_t n, const std::vector<Hyperedge> &edges) : n_(n) {
    for (const auto &e : edges) {
        add_edge(e);
    }
}

void Hypergraph3::add_edge(Hyperedge e) {
    for (Vertex v : e) {
        if (v >= n_) {
            throw InvalidInput("hyperedge vertex " + std::to_string(v) + " out of range");
        }
    }
    Hyperedge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] == sorted[1] || sorted[1] == sorted[2]) {
        throw InvalidInput("hyperedge must have three distinct vertices");
    }
    for (const auto &f : edges_) {
        Hyperedge g = f;
        std::sort(g.begin(), g.end());
        if (g == sorted) {
            throw InvalidInput("repeated hyperedge");
        }
    }
    edges_.push_back(e);
}

bool Hypergraph3::is_transversal(const std::vector<bool> &members) const {
    if (members.size() != n_) {
        throw InvalidInput("membership mask has the wrong size");
    }
    return std::all_of(edges_.begin(), edges_.end(), [&](const Hyperedge &e) {
        return members[e[0]] || members[e[1]] || members[e[2]];
    });
}

bool Hypergraph3::is_transversal(const std::vector<Vertex> &set) const {
    std::vector<bool> members(n_, false);
    for (Vertex v : set) {
        if (v >= n_) {
            throw InvalidInput("vertex " + std::to_string(v) + " out of range");
        }
        members[v] = true;
    }
    return is_transversal(members);
}

} // namespace polycoord
