#include "polycoord/tractable.hpp"

#include <string>

#include "polycoord/errors.hpp"

namespace polycoord {

CutGraph AuxGraph::cut_graph() const {
    CutGraph g;
    g.num_vertices = n + 2;
    g.source = source();
    g.sink = sink();
    g.edges.reserve(edges.size());
    for (const auto &e : edges) {
        g.add_undirected(e.u, e.v, e.shifted_weight);
    }
    return g;
}

Rational AuxGraph::cut_weight_of(const StrategyProfile &partition) const {
    std::vector<bool> side(n + 2, false);
    for (Vertex v = 0; v < n; ++v) {
        side[v] = partition[v] == Action::A;
    }
    side[source()] = true;
    return cut_weight(cut_graph(), side);
}

AuxGraph build_aux_graph(const MwopInstance &inst) {
    const std::size_t n = inst.num_vertices();
    AuxGraph aux;
    aux.n = n;
    std::vector<Rational> wx(n);
    std::vector<Rational> wy(n);
    const Rational half(1, 2);

    std::vector<AuxGraph::Edge> inner;
    inner.reserve(inst.arcs().size());
    for (const auto &arc : inst.arcs()) {
        const Matrix2 &m = arc.m;
        if (!classify_matrix(m).prop_iii) {
            throw PropertyViolated("arc (" + std::to_string(arc.tail) + "," + std::to_string(arc.head) +
                                   ") has m_aa + m_bb < m_ab + m_ba");
        }
        inner.push_back({arc.tail, arc.head, (m.aa + m.bb - m.ab - m.ba) * half, {}});
        wx[arc.tail] -= m.bb * half;
        wx[arc.head] -= m.bb * half;
        wy[arc.tail] += (m.ba - m.aa - m.ab) * half;
        wy[arc.head] += (m.ab - m.aa - m.ba) * half;
    }

    bool first = true;
    auto track = [&](const Rational &w) {
        if (first || w < aux.shift) {
            aux.shift = w;
            first = false;
        }
    };
    for (const auto &e : inner) {
        track(e.raw_weight);
    }
    for (Vertex v = 0; v < n; ++v) {
        track(wx[v]);
        track(wy[v]);
    }

    aux.edges.reserve(inner.size() + 2 * n);
    for (auto &e : inner) {
        e.shifted_weight = e.raw_weight;
        aux.edges.push_back(std::move(e));
    }
    for (Vertex v = 0; v < n; ++v) {
        aux.edges.push_back({aux.source(), v, wx[v], wx[v] - aux.shift});
        aux.edges.push_back({aux.sink(), v, wy[v], wy[v] - aux.shift});
    }
    return aux;
}

const char *to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::SolvedTrivialA: return "SolvedTrivialA";
    case SolveStatus::SolvedTrivialB: return "SolvedTrivialB";
    case SolveStatus::SolvedMinCut: return "SolvedMinCut";
    case SolveStatus::Hard: return "Hard";
    }
    return "Hard";
}

SolveReport solve_by_min_cut(const MwopInstance &inst) {
    const std::size_t n = inst.num_vertices();
    const AuxGraph aux = build_aux_graph(inst);
    const CutResult cut = min_st_cut(aux.cut_graph());
    StrategyProfile partition(n, Action::B);
    for (Vertex v = 0; v < n; ++v) {
        if (cut.source_side[v]) {
            partition[v] = Action::A;
        }
    }
    SolveReport report;
    report.status = SolveStatus::SolvedMinCut;
    report.value = -cut.value - Rational(static_cast<long>(n)) * aux.shift;
    report.profile = std::move(partition);
    if (instance_value(inst, *report.profile) != *report.value) {
        throw std::logic_error("solve_by_min_cut: cut identity violated");
    }
    return report;
}

SolveReport solve_mwop(const MwopInstance &inst) {
    const std::size_t n = inst.num_vertices();
    SolveReport report;
    switch (classify_instance(inst)) {
    case MwopClass::AllPropI:
        report.status = SolveStatus::SolvedTrivialA;
        report.profile = StrategyProfile(n, Action::A);
        break;
    case MwopClass::AllPropII:
        report.status = SolveStatus::SolvedTrivialB;
        report.profile = StrategyProfile(n, Action::B);
        break;
    case MwopClass::AllPropIII:
        return solve_by_min_cut(inst);
    case MwopClass::Hard:
        report.status = SolveStatus::Hard;
        return report;
    }
    report.value = instance_value(inst, *report.profile);
    return report;
}

MwopInstance welfare_instance(const PolymatrixGame &game) {
    MwopInstance inst(game.num_vertices());
    for (const auto &e : game.edges()) {
        inst.add_arc(e.row, e.col, welfare_matrix(e.payoff));
    }
    return inst;
}

MwopInstance potential_instance(const PolymatrixGame &game) {
    MwopInstance inst(game.num_vertices());
    for (const auto &e : game.edges()) {
        inst.add_arc(e.row, e.col, potential_matrix(e.payoff));
    }
    return inst;
}

SolveReport maximize_welfare(const PolymatrixGame &game) { return solve_mwop(welfare_instance(game)); }

SolveReport maximize_potential(const PolymatrixGame &game) { return solve_mwop(potential_instance(game)); }

} // namespace polycoord
