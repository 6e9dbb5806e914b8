#ifndef POLYCOORD_GAME_HPP
#define POLYCOORD_GAME_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "polycoord/profile.hpp"
#include "polycoord/rational.hpp"

namespace polycoord {

/// Undirected simple graph on vertices 0..n-1. Edges are kept in insertion
/// order with their given endpoint order.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), adjacency_(n) {}
    /// Throws InvalidInput on self-loops, out-of-range ids or repeated pairs.
    Graph(std::size_t n, const std::vector<Edge> &edges);

    void add_edge(Vertex u, Vertex v);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<Vertex> &neighbours(Vertex v) const { return adjacency_.at(v); }
    bool has_edge(Vertex u, Vertex v) const;

    static Graph complete(std::size_t n);

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// The two-player game on one edge. `row` holds the row player's payoffs
/// indexed (s_row, s_col); `col` holds the column player's payoffs indexed
/// (s_col, s_row).
struct PayoffBimatrix {
    Matrix2 row;
    Matrix2 col;

    friend bool operator==(const PayoffBimatrix &, const PayoffBimatrix &) = default;
};

/// Pure-coordination game G^c with thresholds gamma_i (row) and gamma_j (col).
PayoffBimatrix coordination_bimatrix(const Rational &gamma_row, const Rational &gamma_col);
/// Anti-coordination game G^s with thresholds gamma_i (row) and gamma_j (col).
PayoffBimatrix anti_coordination_bimatrix(const Rational &gamma_row, const Rational &gamma_col);

enum class EdgeClass { PureCoordination, AntiCoordination, Other };

const char *to_string(EdgeClass c);

/// Binary-action polymatrix game. Every edge records which endpoint is the
/// row player of its bimatrix.
class PolymatrixGame {
public:
    struct Edge {
        Vertex row;
        Vertex col;
        PayoffBimatrix payoff;
    };

    PolymatrixGame() = default;
    explicit PolymatrixGame(std::size_t n) : n_(n), incident_(n) {}

    /// Adds edge {row, col} with `row` as the row player. Throws InvalidInput
    /// on self-loops, out-of-range ids and parallel edges.
    void add_edge(Vertex row, Vertex col, PayoffBimatrix payoff);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    /// Indices into edges() of the edges incident to v.
    const std::vector<std::size_t> &incident(Vertex v) const { return incident_.at(v); }

    Graph underlying_graph() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Payoff of `player` on edge `e` when the endpoints play the given profile.
Rational edge_payoff(const PolymatrixGame::Edge &e, Vertex player, const StrategyProfile &profile);

Rational utility(const PolymatrixGame &game, const StrategyProfile &profile, Vertex player);
Rational welfare(const PolymatrixGame &game, const StrategyProfile &profile);

struct NashReport {
    bool equilibrium = false;
    /// Every player strictly loses by deviating.
    bool strict = false;
    /// Players that strictly gain by flipping, ascending.
    std::vector<Vertex> deviators;
};

NashReport is_nash(const PolymatrixGame &game, const StrategyProfile &profile);

EdgeClass classify_edge(const PayoffBimatrix &bimatrix);

/// w(s_i, s_j) = u_row(s_i, s_j) + u_col(s_j, s_i).
Matrix2 welfare_matrix(const PayoffBimatrix &bimatrix);

/// Exact pairwise potential normalised to phi(b, b) = 0. Throws
/// NotAPotentialGame when the two routes to phi(a, a) disagree.
Matrix2 potential_matrix(const PayoffBimatrix &bimatrix);

Rational total_potential(const PolymatrixGame &game, const StrategyProfile &profile);

/// Throws InvalidInput unless profile covers exactly the game's vertices.
void require_profile_size(std::size_t n, const StrategyProfile &profile);

} // namespace polycoord

#endif // POLYCOORD_GAME_HPP
