#include "polycoord/mwop.hpp"

#include <string>

#include "polycoord/enumeration.hpp"
#include "polycoord/errors.hpp"

namespace polycoord {

void MwopInstance::add_arc(Vertex tail, Vertex head, Matrix2 m) {
    if (tail >= n_ || head >= n_) {
        throw InvalidInput("arc (" + std::to_string(tail) + "," + std::to_string(head) +
                           ") references a vertex outside 0.." + std::to_string(n_) + "-1");
    }
    if (tail == head) {
        throw InvalidInput("self-loop arc at vertex " + std::to_string(tail));
    }
    for (std::size_t idx : incident_[tail]) {
        const Arc &a = arcs_[idx];
        if (a.tail == tail && a.head == head) {
            throw InvalidInput("repeated arc (" + std::to_string(tail) + "," + std::to_string(head) + ")");
        }
        if (a.tail == head && a.head == tail) {
            throw InvalidInput("arcs (" + std::to_string(tail) + "," + std::to_string(head) +
                               ") and its reverse both present; instance must be an oriented graph");
        }
    }
    incident_[tail].push_back(arcs_.size());
    incident_[head].push_back(arcs_.size());
    arcs_.push_back({tail, head, std::move(m)});
}

Rational instance_value(const MwopInstance &inst, const StrategyProfile &partition) {
    if (partition.size() != inst.num_vertices()) {
        throw InvalidInput("partition has " + std::to_string(partition.size()) + " entries, expected " +
                           std::to_string(inst.num_vertices()));
    }
    Rational total;
    for (const auto &arc : inst.arcs()) {
        total += arc_weight(arc.m, partition[arc.tail], partition[arc.head]);
    }
    return total;
}

PropertySet classify_matrix(const Matrix2 &m) {
    PropertySet p;
    p.prop_i = m.aa >= m.ab && m.aa >= m.ba && m.aa >= m.bb;
    p.prop_ii = m.bb >= m.aa && m.bb >= m.ab && m.bb >= m.ba;
    p.prop_iii = m.aa + m.bb >= m.ab + m.ba;
    return p;
}

const char *to_string(MwopClass c) {
    switch (c) {
    case MwopClass::AllPropI: return "AllPropI";
    case MwopClass::AllPropII: return "AllPropII";
    case MwopClass::AllPropIII: return "AllPropIII";
    case MwopClass::Hard: return "Hard";
    }
    return "Hard";
}

MwopClass classify_instance(const MwopInstance &inst) {
    bool all_i = true;
    bool all_ii = true;
    bool all_iii = true;
    for (const auto &arc : inst.arcs()) {
        const PropertySet p = classify_matrix(arc.m);
        all_i = all_i && p.prop_i;
        all_ii = all_ii && p.prop_ii;
        all_iii = all_iii && p.prop_iii;
    }
    if (all_i) {
        return MwopClass::AllPropI;
    }
    if (all_ii) {
        return MwopClass::AllPropII;
    }
    if (all_iii) {
        return MwopClass::AllPropIII;
    }
    return MwopClass::Hard;
}

MwopSolution brute_force_mwop(const MwopInstance &inst, std::size_t cap) {
    const std::size_t n = inst.num_vertices();
    detail::require_within_cap(n, cap, "brute_force_mwop");

    StrategyProfile profile(n, Action::A);
    Rational value = instance_value(inst, profile);
    Rational best = value;
    std::uint64_t best_rank = 0;

    detail::gray_walk(
        profile,
        [&](Vertex v) {
            for (std::size_t idx : inst.incident(v)) {
                const auto &arc = inst.arcs()[idx];
                const Action t = profile[arc.tail];
                const Action h = profile[arc.head];
                const Action t2 = arc.tail == v ? flip(t) : t;
                const Action h2 = arc.head == v ? flip(h) : h;
                value += arc_weight(arc.m, t2, h2) - arc_weight(arc.m, t, h);
            }
        },
        [&](std::uint64_t rank) {
            if (value > best || (value == best && rank < best_rank)) {
                best = value;
                best_rank = rank;
            }
        });

    MwopSolution sol{detail::profile_from_rank(n, best_rank), best};
    if (instance_value(inst, sol.partition) != sol.value) {
        throw std::logic_error("brute_force_mwop: witness does not re-evaluate to the optimum");
    }
    return sol;
}

} // namespace polycoord
