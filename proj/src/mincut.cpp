#include "polycoord/mincut.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "polycoord/errors.hpp"

namespace polycoord {

namespace {

class Dinic {
public:
    explicit Dinic(std::size_t n) : adjacency_(n), level_(n), next_(n) {}

    void add_arc(Vertex u, Vertex v, const Rational &cap) {
        adjacency_[u].push_back(arcs_.size());
        arcs_.push_back({v, cap});
        adjacency_[v].push_back(arcs_.size());
        arcs_.push_back({u, Rational(0)});
    }

    Rational max_flow(Vertex s, Vertex t) {
        Rational flow;
        while (build_levels(s, t)) {
            std::fill(next_.begin(), next_.end(), 0);
            for (;;) {
                Rational pushed = augment(s, t, std::nullopt);
                if (pushed.is_zero()) {
                    break;
                }
                flow += pushed;
            }
        }
        return flow;
    }

    std::vector<bool> reachable_from(Vertex s) const {
        std::vector<bool> seen(adjacency_.size(), false);
        std::deque<Vertex> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (std::size_t id : adjacency_[u]) {
                const Arc &a = arcs_[id];
                if (!seen[a.to] && a.residual.sign() > 0) {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        Vertex to;
        Rational residual;
    };

    bool build_levels(Vertex s, Vertex t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<Vertex> queue{s};
        level_[s] = 0;
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (std::size_t id : adjacency_[u]) {
                const Arc &a = arcs_[id];
                if (level_[a.to] < 0 && a.residual.sign() > 0) {
                    level_[a.to] = level_[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    // Blocking-flow DFS; `limit` absent means unbounded (at the source).
    Rational augment(Vertex u, Vertex t, const std::optional<Rational> &limit) {
        if (u == t) {
            return *limit;
        }
        for (std::size_t &i = next_[u]; i < adjacency_[u].size(); ++i) {
            const std::size_t id = adjacency_[u][i];
            Arc &a = arcs_[id];
            if (a.residual.sign() <= 0 || level_[a.to] != level_[u] + 1) {
                continue;
            }
            const Rational bound = limit ? min(*limit, a.residual) : a.residual;
            Rational pushed = augment(a.to, t, bound);
            if (pushed.sign() > 0) {
                a.residual -= pushed;
                arcs_[id ^ 1].residual += pushed;
                return pushed;
            }
        }
        return Rational(0);
    }

    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

void validate(const CutGraph &g) {
    if (g.source >= g.num_vertices || g.sink >= g.num_vertices) {
        throw InvalidInput("source or sink outside the vertex range");
    }
    if (g.source == g.sink) {
        throw InvalidInput("source and sink coincide");
    }
    for (const auto &e : g.edges) {
        if (e.u >= g.num_vertices || e.v >= g.num_vertices) {
            throw InvalidInput("cut edge references a vertex outside the range");
        }
        if (e.weight.sign() < 0) {
            throw NegativeWeight("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") has negative weight " + e.weight.str());
        }
    }
}

} // namespace

std::vector<Vertex> CutResult::source_side_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < source_side.size(); ++v) {
        if (source_side[v]) {
            out.push_back(v);
        }
    }
    return out;
}

Rational cut_weight(const CutGraph &g, const std::vector<bool> &source_side) {
    Rational total;
    for (const auto &e : g.edges) {
        const bool su = source_side.at(e.u);
        const bool sv = source_side.at(e.v);
        if (e.directed ? (su && !sv) : (su != sv)) {
            total += e.weight;
        }
    }
    return total;
}

CutGraph merge_parallel_edges(const CutGraph &g) {
    // Key: (directed, first, second); undirected pairs are stored with
    // first < second.
    std::map<std::tuple<bool, Vertex, Vertex>, Rational> merged;
    for (const auto &e : g.edges) {
        Vertex a = e.u;
        Vertex b = e.v;
        if (!e.directed && b < a) {
            std::swap(a, b);
        }
        merged[{e.directed, a, b}] += e.weight;
    }
    CutGraph out{g.num_vertices, g.source, g.sink, {}};
    out.edges.reserve(merged.size());
    for (const auto &[key, w] : merged) {
        const auto &[directed, a, b] = key;
        out.edges.push_back({a, b, w, directed});
    }
    return out;
}

CutResult min_st_cut(const CutGraph &g) {
    validate(g);
    const CutGraph simple = merge_parallel_edges(g);
    Dinic dinic(simple.num_vertices);
    for (const auto &e : simple.edges) {
        if (e.u == e.v || e.weight.is_zero()) {
            continue;
        }
        dinic.add_arc(e.u, e.v, e.weight);
        if (!e.directed) {
            dinic.add_arc(e.v, e.u, e.weight);
        }
    }
    CutResult result;
    result.flow_value = dinic.max_flow(simple.source, simple.sink);
    result.source_side = dinic.reachable_from(simple.source);
    result.value = cut_weight(g, result.source_side);
    if (result.value != result.flow_value) {
        throw std::logic_error("min_st_cut: cut weight " + result.value.str() + " differs from flow " +
                               result.flow_value.str());
    }
    return result;
}

} // namespace polycoord
