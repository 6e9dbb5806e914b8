#include "polycoord/game.hpp"

#include <algorithm>
#include <string>

#include "polycoord/errors.hpp"

namespace polycoord {

namespace {

void check_endpoints(std::size_t n, Vertex u, Vertex v) {
    if (u >= n || v >= n) {
        throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} references a vertex outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) {
        throw InvalidInput("self-loop at vertex " + std::to_string(u));
    }
}

} // namespace

Graph::Graph(std::size_t n, const std::vector<Edge> &edges) : Graph(n) {
    for (const auto &[u, v] : edges) {
        add_edge(u, v);
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_endpoints(n_, u, v);
    if (has_edge(u, v)) {
        throw InvalidInput("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    edges_.emplace_back(u, v);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto &nu = adjacency_.at(u);
    const auto &nv = adjacency_.at(v);
    if (nv.size() < nu.size()) {
        return std::find(nv.begin(), nv.end(), u) != nv.end();
    }
    return std::find(nu.begin(), nu.end(), v) != nu.end();
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

PayoffBimatrix coordination_bimatrix(const Rational &gamma_row, const Rational &gamma_col) {
    return {{gamma_row, 0, 0, 1 - gamma_row}, {gamma_col, 0, 0, 1 - gamma_col}};
}

PayoffBimatrix anti_coordination_bimatrix(const Rational &gamma_row, const Rational &gamma_col) {
    return {{0, gamma_row, 1 - gamma_row, 0}, {0, gamma_col, 1 - gamma_col, 0}};
}

const char *to_string(EdgeClass c) {
    switch (c) {
    case EdgeClass::PureCoordination: return "PureCoordination";
    case EdgeClass::AntiCoordination: return "AntiCoordination";
    case EdgeClass::Other: return "Other";
    }
    return "Other";
}

void PolymatrixGame::add_edge(Vertex row, Vertex col, PayoffBimatrix payoff) {
    check_endpoints(n_, row, col);
    const bool scan_col = incident_[col].size() < incident_[row].size();
    const Vertex other = scan_col ? row : col;
    for (std::size_t idx : incident_[scan_col ? col : row]) {
        const Edge &e = edges_[idx];
        if (e.row == other || e.col == other) {
            throw InvalidInput("parallel edge {" + std::to_string(row) + "," + std::to_string(col) + "}");
        }
    }
    incident_[row].push_back(edges_.size());
    incident_[col].push_back(edges_.size());
    edges_.push_back({row, col, std::move(payoff)});
}

Graph PolymatrixGame::underlying_graph() const {
    Graph g(n_);
    for (const Edge &e : edges_) {
        g.add_edge(e.row, e.col);
    }
    return g;
}

void require_profile_size(std::size_t n, const StrategyProfile &profile) {
    if (profile.size() != n) {
        throw InvalidInput("profile has " + std::to_string(profile.size()) + " actions, expected " +
                           std::to_string(n));
    }
}

Rational edge_payoff(const PolymatrixGame::Edge &e, Vertex player, const StrategyProfile &profile) {
    const Action s_row = profile[e.row];
    const Action s_col = profile[e.col];
    if (player == e.row) {
        return e.payoff.row.at(s_row, s_col);
    }
    return e.payoff.col.at(s_col, s_row);
}

Rational utility(const PolymatrixGame &game, const StrategyProfile &profile, Vertex player) {
    require_profile_size(game.num_vertices(), profile);
    if (player >= game.num_vertices()) {
        throw InvalidInput("player " + std::to_string(player) + " out of range");
    }
    Rational total;
    for (std::size_t idx : game.incident(player)) {
        total += edge_payoff(game.edges()[idx], player, profile);
    }
    return total;
}

Rational welfare(const PolymatrixGame &game, const StrategyProfile &profile) {
    require_profile_size(game.num_vertices(), profile);
    Rational total;
    for (Vertex i = 0; i < game.num_vertices(); ++i) {
        total += utility(game, profile, i);
    }
    return total;
}

NashReport is_nash(const PolymatrixGame &game, const StrategyProfile &profile) {
    require_profile_size(game.num_vertices(), profile);
    // gain[i] = U_i(flip_i s) - U_i(s), accumulated edge by edge.
    std::vector<Rational> gain(game.num_vertices());
    for (const auto &e : game.edges()) {
        const Action r = profile[e.row];
        const Action c = profile[e.col];
        gain[e.row] += e.payoff.row.at(flip(r), c) - e.payoff.row.at(r, c);
        gain[e.col] += e.payoff.col.at(flip(c), r) - e.payoff.col.at(c, r);
    }
    NashReport report;
    report.strict = true;
    for (Vertex i = 0; i < game.num_vertices(); ++i) {
        if (gain[i].sign() > 0) {
            report.deviators.push_back(i);
        }
        if (gain[i].sign() >= 0) {
            report.strict = false;
        }
    }
    report.equilibrium = report.deviators.empty();
    return report;
}

EdgeClass classify_edge(const PayoffBimatrix &m) {
    using enum Action;
    // (s_r, s_c) is strict when neither player gains by a unilateral flip.
    auto strict_at = [&m](Action r, Action c) {
        return m.row.at(r, c) > m.row.at(flip(r), c) && m.col.at(c, r) > m.col.at(flip(c), r);
    };
    if (strict_at(A, A) && strict_at(B, B)) {
        return EdgeClass::PureCoordination;
    }
    if (strict_at(A, B) && strict_at(B, A)) {
        return EdgeClass::AntiCoordination;
    }
    return EdgeClass::Other;
}

Matrix2 welfare_matrix(const PayoffBimatrix &m) {
    using enum Action;
    Matrix2 w;
    for (Action r : {A, B}) {
        for (Action c : {A, B}) {
            w.at(r, c) = m.row.at(r, c) + m.col.at(c, r);
        }
    }
    return w;
}

Matrix2 potential_matrix(const PayoffBimatrix &m) {
    using enum Action;
    Matrix2 phi;
    phi.bb = 0;
    phi.ab = m.row.at(A, B) - m.row.at(B, B);
    phi.ba = m.col.at(A, B) - m.col.at(B, B);
    const Rational via_row = phi.ba + m.row.at(A, A) - m.row.at(B, A);
    const Rational via_col = phi.ab + m.col.at(A, A) - m.col.at(B, A);
    if (via_row != via_col) {
        throw NotAPotentialGame("edge game has no exact potential: phi(a,a) is " + via_row.str() +
                                " along one path and " + via_col.str() + " along the other");
    }
    phi.aa = via_row;
    return phi;
}

Rational total_potential(const PolymatrixGame &game, const StrategyProfile &profile) {
    require_profile_size(game.num_vertices(), profile);
    Rational total;
    for (const auto &e : game.edges()) {
        total += potential_matrix(e.payoff).at(profile[e.row], profile[e.col]);
    }
    return total;
}

} // namespace polycoord
