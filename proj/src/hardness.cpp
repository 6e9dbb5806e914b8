#include "polycoord/hardness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polycoord/errors.hpp"

namespace polycoord {

namespace {

Rational count_q(std::uint64_t k) { return Rational(static_cast<long>(k)); }

std::uint64_t pairs(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

void require_thresholds(const Rational &gamma_A, const Rational &gamma_B) {
    const Rational half(1, 2);
    if (!(gamma_B > 0 && gamma_B < half && gamma_A > half && gamma_A <= 1)) {
        throw PreconditionViolated("reduction needs 0 < gamma_B < 1/2 < gamma_A <= 1, got gamma_A=" +
                                   gamma_A.str() + " gamma_B=" + gamma_B.str());
    }
}

// Smallest integer c with (c - 1) * slope > bound, for slope > 0.
std::int64_t smallest_exceeding(const Rational &bound, const Rational &slope) {
    return (bound / slope).floor().to_int64() + 2;
}

std::size_t count_a(const StrategyProfile &p, std::size_t begin, std::size_t end) {
    const auto &acts = p.actions();
    return static_cast<std::size_t>(std::count(acts.begin() + static_cast<std::ptrdiff_t>(begin),
                                               acts.begin() + static_cast<std::ptrdiff_t>(end), Action::A));
}

void require_size(const ReductionInstance &inst, const StrategyProfile &p) {
    if (p.size() != inst.num_vertices()) {
        throw InvalidInput("profile has " + std::to_string(p.size()) + " entries, reduction has " +
                           std::to_string(inst.num_vertices()) + " vertices");
    }
}

// Both-a and both-b tallies for edges whose endpoints are in groups (A,A),
// (A,B) and (B,B).
struct EdgeTally {
    std::uint64_t aa_a = 0, aa_b = 0;
    std::uint64_t ab_a = 0, ab_b = 0;
    std::uint64_t bb_a = 0, bb_b = 0;

    void add(Group g, Group h, Action s, Action t) {
        if (s != t) {
            return;
        }
        const bool on_a = s == Action::A;
        if (g == Group::A && h == Group::A) {
            (on_a ? aa_a : aa_b) += 1;
        } else if (g == Group::B && h == Group::B) {
            (on_a ? bb_a : bb_b) += 1;
        } else {
            (on_a ? ab_a : ab_b) += 1;
        }
    }

    Rational value(const Rational &gA, const Rational &gB) const {
        return count_q(aa_a) * (2 * gA) + count_q(aa_b) * (2 - 2 * gA) + count_q(ab_a) * (gA + gB) +
               count_q(ab_b) * (2 - gA - gB) + count_q(bb_a) * (2 * gB) + count_q(bb_b) * (2 - 2 * gB);
    }
};

Rational tally_edges(const ReductionInstance &inst, const ReductionInstance::EdgeList &edges,
                     const StrategyProfile &p) {
    EdgeTally t;
    for (const auto &[u, v] : edges) {
        t.add(inst.group_of(u), inst.group_of(v), p[u], p[v]);
    }
    return t.value(inst.gamma_A(), inst.gamma_B());
}

} // namespace

ReductionConstants compute_constants(const Hypergraph3 &h, const Rational &gamma_A, const Rational &gamma_B) {
    require_thresholds(gamma_A, gamma_B);
    const Rational m = count_q(h.num_edges());
    const Rational nv = count_q(h.num_vertices());
    const Rational one_minus_b = 1 - gamma_B;

    ReductionConstants c;
    c.block_size = (3 * m * one_minus_b / (gamma_B * (1 - 2 * gamma_B))).ceil().to_int64();
    c.theta = 6 * m + 2 * nv * Rational(c.block_size);

    const Rational attach_b_slope = one_minus_b * (gamma_A - gamma_B) / gamma_B;
    c.attach_b = std::max<std::int64_t>(1, (c.theta / attach_b_slope).floor().to_int64() + 1);

    const Rational upper = Rational(c.attach_b + 3) * one_minus_b / gamma_B;
    c.attach_a = upper.is_integer() ? upper.to_int64() - 1 : upper.floor().to_int64();
    if (Rational(c.attach_a) <= upper - 1 / gamma_B) {
        throw std::logic_error("no admissible attach_a below " + upper.str());
    }

    const Rational q = c.theta + 2 * m * Rational(c.attach_a + c.attach_b);
    c.clique_a_size = std::max(c.attach_a, smallest_exceeding(q, 2 * gamma_A - 1));
    c.clique_b_size = std::max(c.attach_b, smallest_exceeding(q, 1 - 2 * gamma_B));
    if (h.num_edges() > 0) {
        const std::int64_t ratio_floor = 1 + (m * gamma_B / one_minus_b).ceil().to_int64();
        c.clique_b_size = std::max(c.clique_b_size, ratio_floor);
    }
    return c;
}

ConstantsCheck check_constants(const Hypergraph3 &h, const Rational &gamma_A, const Rational &gamma_B,
                               const ReductionConstants &c) {
    require_thresholds(gamma_A, gamma_B);
    const Rational m = count_q(h.num_edges());
    const Rational nv = count_q(h.num_vertices());
    const Rational gA = gamma_A;
    const Rational gB = gamma_B;

    const auto block_holds = [&](std::int64_t size) { return Rational(size) >= 3 * m * (1 - gB) / (gB * (1 - 2 * gB)); };
    const auto attach_b_holds = [&](std::int64_t count) {
        return count >= 1 && Rational(count) * (1 - gB) * (gA - gB) / gB > c.theta;
    };
    const auto attach_a_holds = [&](std::int64_t count) {
        const Rational as_q(count);
        return as_q < Rational(c.attach_b + 3) * (1 - gB) / gB && as_q > Rational(c.attach_b + 3) * (1 - gB) / gB - 1 / gB;
    };
    const Rational q = c.theta + 2 * m * Rational(c.attach_a + c.attach_b);
    const auto clique_a_holds = [&](std::int64_t size) { return size >= c.attach_a && Rational(size - 1) * (2 * gA - 1) > q; };
    const auto clique_b_holds = [&](std::int64_t size) {
        if (size < c.attach_b || !(Rational(size - 1) * (1 - 2 * gB) > q)) {
            return false;
        }
        return h.num_edges() == 0 || Rational(size - 1) / m >= gB / (1 - gB);
    };

    ConstantsCheck r;
    r.block_size_ok = block_holds(c.block_size) && (c.block_size == 0 || !block_holds(c.block_size - 1));
    r.theta_ok = c.theta == 6 * m + 2 * nv * Rational(c.block_size);
    r.attach_b_ok = attach_b_holds(c.attach_b);
    r.attach_b_minimal = !attach_b_holds(c.attach_b - 1);
    r.attach_a_ok = attach_a_holds(c.attach_a);
    r.attach_a_largest = !(Rational(c.attach_a + 1) < Rational(c.attach_b + 3) * (1 - gB) / gB);
    r.clique_a_ok = clique_a_holds(c.clique_a_size);
    r.clique_a_minimal = !clique_a_holds(c.clique_a_size - 1);
    r.clique_b_ok = clique_b_holds(c.clique_b_size);
    r.clique_b_minimal = !clique_b_holds(c.clique_b_size - 1);
    return r;
}

ReductionInstance::ReductionInstance(Hypergraph3 h, Rational gamma_A, Rational gamma_B,
                                     ReductionConstants constants)
    : h_(std::move(h)), gamma_A_(std::move(gamma_A)), gamma_B_(std::move(gamma_B)),
      constants_(std::move(constants)) {
    require_thresholds(gamma_A_, gamma_B_);
    const auto &c = constants_;
    if (c.block_size < 0 || c.attach_a < 0 || c.attach_b < 0 || c.attach_a > c.clique_a_size || c.attach_b > c.clique_b_size) {
        throw InvalidInput("reduction constants need 0 <= attach_a <= clique_a_size, 0 <= attach_b <= clique_b_size and block_size >= 0");
    }

    for (std::size_t e = 0; e < h_.num_edges(); ++e) {
        const Vertex r = hyperedge_vertex(e);
        for (std::size_t k = 0; k < attach_a(); ++k) {
            clique_links_.emplace_back(r, clique_a_begin() + k);
        }
        for (std::size_t k = 0; k < attach_b(); ++k) {
            clique_links_.emplace_back(r, clique_b_begin() + k);
        }
        for (Vertex u : h_.edges()[e]) {
            incidence_links_.emplace_back(r, vertex_copy(u));
        }
    }
    for (Vertex u = 0; u < h_.num_vertices(); ++u) {
        for (std::size_t k = 0; k < block_size(); ++k) {
            block_links_.emplace_back(vertex_copy(u), block_begin(u) + k);
        }
    }
    baseline_welfare_ = 2 * gamma_A_ * count_q(pairs(clique_a_size())) + 2 * (1 - gamma_B_) * count_q(pairs(clique_b_size())) +
              count_q(h_.num_edges()) * count_q(attach_a()) * (gamma_A_ + gamma_B_);
}

std::size_t ReductionInstance::num_vertices() const {
    return clique_a_size() + clique_b_size() + h_.num_edges() + h_.num_vertices() * (1 + block_size());
}

std::uint64_t ReductionInstance::num_clique_edges() const { return pairs(clique_a_size()) + pairs(clique_b_size()); }

std::uint64_t ReductionInstance::num_edges() const {
    return num_clique_edges() + clique_links_.size() + incidence_links_.size() + block_links_.size();
}

LanguageGame ReductionInstance::materialise(std::uint64_t max_edges) const {
    if (num_edges() > max_edges) {
        throw InstanceTooLarge("reduction has " + std::to_string(num_edges()) + " edges, limit is " +
                               std::to_string(max_edges));
    }
    LanguageGame lg;
    lg.graph = Graph(num_vertices());
    lg.gamma_A = gamma_A_;
    lg.gamma_B = gamma_B_;
    lg.group.resize(num_vertices());
    for (Vertex v = 0; v < num_vertices(); ++v) {
        lg.group[v] = group_of(v);
    }
    const auto add_clique = [&](Vertex begin, std::size_t size) {
        for (Vertex u = begin; u < begin + size; ++u) {
            for (Vertex v = u + 1; v < begin + size; ++v) {
                lg.graph.add_edge(u, v);
            }
        }
    };
    add_clique(clique_a_begin(), clique_a_size());
    add_clique(clique_b_begin(), clique_b_size());
    for (const EdgeList *list : {&clique_links_, &incidence_links_, &block_links_}) {
        for (const auto &[u, v] : *list) {
            lg.graph.add_edge(u, v);
        }
    }
    return lg;
}

ReductionInstance build_reduction(const Hypergraph3 &h, const Rational &gamma_A, const Rational &gamma_B) {
    return ReductionInstance(h, gamma_A, gamma_B, compute_constants(h, gamma_A, gamma_B));
}

Rational compute_baseline_welfare(const ReductionInstance &inst) { return inst.baseline_welfare(); }

StrategyProfile extension_profile(const ReductionInstance &inst, const std::vector<bool> &members) {
    const Hypergraph3 &h = inst.hypergraph();
    if (members.size() != h.num_vertices()) {
        throw InvalidInput("membership mask has " + std::to_string(members.size()) + " entries, hypergraph has " +
                           std::to_string(h.num_vertices()) + " vertices");
    }
    StrategyProfile p(inst.num_vertices(), Action::B);
    for (Vertex v = inst.clique_a_begin(); v < inst.clique_a_begin() + inst.clique_a_size(); ++v) {
        p[v] = Action::A;
    }
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        p[inst.hyperedge_vertex(e)] = Action::A;
    }
    for (Vertex u = 0; u < h.num_vertices(); ++u) {
        if (!members[u]) {
            continue;
        }
        p[inst.vertex_copy(u)] = Action::A;
        for (std::size_t k = 0; k < inst.block_size(); ++k) {
            p[inst.block_begin(u) + k] = Action::A;
        }
    }
    return p;
}

StrategyProfile extension_profile(const ReductionInstance &inst, const std::vector<Vertex> &transversal) {
    std::vector<bool> members(inst.hypergraph().num_vertices(), false);
    for (Vertex u : transversal) {
        if (u >= members.size()) {
            throw InvalidInput("vertex " + std::to_string(u) + " is not in the hypergraph");
        }
        members[u] = true;
    }
    return extension_profile(inst, members);
}

WelfareBreakdown reduction_welfare(const ReductionInstance &inst, const StrategyProfile &profile) {
    require_size(inst, profile);
    const Rational &gA = inst.gamma_A();
    const Rational &gB = inst.gamma_B();

    const std::size_t ka = count_a(profile, inst.clique_a_begin(), inst.clique_a_begin() + inst.clique_a_size());
    const std::size_t kb = count_a(profile, inst.clique_b_begin(), inst.clique_b_begin() + inst.clique_b_size());

    WelfareBreakdown w;
    w.cliques = count_q(pairs(ka)) * (2 * gA) + count_q(pairs(inst.clique_a_size() - ka)) * (2 - 2 * gA) +
           count_q(pairs(kb)) * (2 * gB) + count_q(pairs(inst.clique_b_size() - kb)) * (2 - 2 * gB);
    w.clique_links = tally_edges(inst, inst.clique_links(), profile);
    w.incidence = tally_edges(inst, inst.incidence_links(), profile);
    w.blocks = tally_edges(inst, inst.block_links(), profile);
    return w;
}

Rational extension_welfare_formula(const ReductionInstance &inst, std::size_t transversal_size, const Rational &epsilon) {
    const Rational block = count_q(inst.block_size());
    const Rational &gB = inst.gamma_B();
    return inst.baseline_welfare() + epsilon + count_q(inst.hypergraph().num_vertices()) * block * (2 - 2 * gB) -
           count_q(transversal_size) * 2 * block * (1 - 2 * gB);
}

ExtensionWelfare extension_welfare(const ReductionInstance &inst, const std::vector<Vertex> &transversal) {
    if (!inst.hypergraph().is_transversal(transversal)) {
        throw NotATransversal("vertex set does not meet every hyperedge");
    }
    std::vector<Vertex> distinct = transversal;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const WelfareBreakdown w = reduction_welfare(inst, extension_profile(inst, distinct));
    ExtensionWelfare out;
    out.welfare = w.total();
    out.epsilon_T = w.incidence;
    out.formula = extension_welfare_formula(inst, distinct.size(), w.incidence);
    return out;
}

std::int64_t recover_transversal_size(const ReductionInstance &inst, const Rational &welfare_opt) {
    if (inst.block_size() == 0) {
        return 0;
    }
    const Rational block = count_q(inst.block_size());
    const Rational &gB = inst.gamma_B();
    const Rational numer =
        inst.baseline_welfare() + count_q(inst.hypergraph().num_vertices()) * block * (2 - 2 * gB) - welfare_opt;
    return (numer / (2 * block * (1 - 2 * gB))).ceil().to_int64();
}

Rational clique_gap_bound(std::size_t n, const Rational &gamma, Group type) {
    if (n < 2) {
        throw PreconditionViolated("clique gap bound needs n >= 2");
    }
    const Rational half(1, 2);
    const Rational k = count_q(n);
    if (type == Group::A) {
        if (!(gamma > half)) {
            throw PreconditionViolated("type A clique bound needs gamma > 1/2, got " + gamma.str());
        }
        return min(2 * gamma * (k - 1), k * (k - 1) * (2 * gamma - 1));
    }
    if (!(gamma < half)) {
        throw PreconditionViolated("type B clique bound needs gamma < 1/2, got " + gamma.str());
    }
    return min(2 * (1 - gamma) * (k - 1), k * (k - 1) * (1 - 2 * gamma));
}

bool reduction_nash_check(const ReductionInstance &inst, const StrategyProfile &profile) {
    require_size(inst, profile);
    const Hypergraph3 &h = inst.hypergraph();
    const std::size_t m = h.num_edges();

    std::size_t r_on_a = 0;
    for (std::size_t e = 0; e < m; ++e) {
        r_on_a += profile[inst.hyperedge_vertex(e)] == Action::A ? 1 : 0;
    }

    // A clique splits into four classes: attached to R or not, times action.
    const auto clique_ok = [&](Vertex begin, std::size_t size, std::size_t attached, const Rational &gamma) {
        const std::size_t on_a = count_a(profile, begin, begin + size);
        const std::size_t attached_a = count_a(profile, begin, begin + attached);
        const std::size_t count[2][2] = {{attached_a, attached - attached_a},
                                         {on_a - attached_a, (size - attached) - (on_a - attached_a)}};
        for (int unattached = 0; unattached < 2; ++unattached) {
            for (Action own : {Action::A, Action::B}) {
                if (count[unattached][own == Action::A ? 0 : 1] == 0) {
                    continue;
                }
                std::size_t na = on_a - (own == Action::A ? 1 : 0);
                std::size_t nb = (size - 1) - na;
                if (unattached == 0) {
                    na += r_on_a;
                    nb += m - r_on_a;
                }
                if (!threshold_player_content(gamma, own, na, nb)) {
                    return false;
                }
            }
        }
        return true;
    };
    if (!clique_ok(inst.clique_a_begin(), inst.clique_a_size(), m > 0 ? inst.attach_a() : 0, inst.gamma_A()) ||
        !clique_ok(inst.clique_b_begin(), inst.clique_b_size(), m > 0 ? inst.attach_b() : 0, inst.gamma_B())) {
        return false;
    }

    const std::size_t attached_a = count_a(profile, inst.clique_a_begin(), inst.clique_a_begin() + inst.attach_a()) +
                                   count_a(profile, inst.clique_b_begin(), inst.clique_b_begin() + inst.attach_b());
    const Rational &gB = inst.gamma_B();
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t na = attached_a;
        for (Vertex u : h.edges()[e]) {
            na += profile[inst.vertex_copy(u)] == Action::A ? 1 : 0;
        }
        const std::size_t nb = inst.attach_a() + inst.attach_b() + 3 - na;
        if (!threshold_player_content(gB, profile[inst.hyperedge_vertex(e)], na, nb)) {
            return false;
        }
    }

    std::vector<std::size_t> r_na(h.num_vertices(), 0);
    std::vector<std::size_t> degree(h.num_vertices(), 0);
    for (std::size_t e = 0; e < m; ++e) {
        for (Vertex u : h.edges()[e]) {
            ++degree[u];
            r_na[u] += profile[inst.hyperedge_vertex(e)] == Action::A ? 1 : 0;
        }
    }
    for (Vertex u = 0; u < h.num_vertices(); ++u) {
        const Action prime = profile[inst.vertex_copy(u)];
        const std::size_t z_a = count_a(profile, inst.block_begin(u), inst.block_begin(u) + inst.block_size());
        const std::size_t na = r_na[u] + z_a;
        const std::size_t nb = degree[u] + inst.block_size() - na;
        if (!threshold_player_content(gB, prime, na, nb)) {
            return false;
        }
        const std::size_t prime_a = prime == Action::A ? 1 : 0;
        if (z_a > 0 && !threshold_player_content(gB, Action::A, prime_a, 1 - prime_a)) {
            return false;
        }
        if (z_a < inst.block_size() && !threshold_player_content(gB, Action::B, prime_a, 1 - prime_a)) {
            return false;
        }
    }
    return true;
}

std::vector<Vertex> reduction_deviators(const ReductionInstance &inst, const StrategyProfile &profile) {
    require_size(inst, profile);
    const std::size_t n = inst.num_vertices();
    std::vector<std::size_t> na(n, 0);
    std::vector<std::size_t> nb(n, 0);

    const auto add_clique = [&](Vertex begin, std::size_t size) {
        const std::size_t on_a = count_a(profile, begin, begin + size);
        for (Vertex v = begin; v < begin + size; ++v) {
            na[v] += on_a - (profile[v] == Action::A ? 1 : 0);
            nb[v] += (size - 1) - (on_a - (profile[v] == Action::A ? 1 : 0));
        }
    };
    add_clique(inst.clique_a_begin(), inst.clique_a_size());
    add_clique(inst.clique_b_begin(), inst.clique_b_size());
    for (const auto *list : {&inst.clique_links(), &inst.incidence_links(), &inst.block_links()}) {
        for (const auto &[u, v] : *list) {
            (profile[v] == Action::A ? na : nb)[u] += 1;
            (profile[u] == Action::A ? na : nb)[v] += 1;
        }
    }

    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        if (!threshold_player_content(inst.gamma_of(v), profile[v], na[v], nb[v])) {
            out.push_back(v);
        }
    }
    return out;
}

ExtensionReport verify_extension(const ReductionInstance &inst, const StrategyProfile &profile) {
    require_size(inst, profile);
    const Hypergraph3 &h = inst.hypergraph();
    ExtensionReport r;

    r.anchors_placed = count_a(profile, inst.clique_a_begin(), inst.clique_a_begin() + inst.clique_a_size()) == inst.clique_a_size() &&
                count_a(profile, inst.clique_b_begin(), inst.clique_b_begin() + inst.clique_b_size()) == 0;
    for (std::size_t e = 0; e < h.num_edges() && r.anchors_placed; ++e) {
        r.anchors_placed = profile[inst.hyperedge_vertex(e)] == Action::A;
    }

    r.hyperedges_covered = true;
    for (const auto &edge : h.edges()) {
        r.hyperedges_covered = r.hyperedges_covered && std::any_of(edge.begin(), edge.end(), [&](Vertex u) {
                        return profile[inst.vertex_copy(u)] == Action::A;
                    });
    }

    r.blocks_uniform = true;
    std::vector<Vertex> chosen;
    for (Vertex u = 0; u < h.num_vertices(); ++u) {
        const Action prime = profile[inst.vertex_copy(u)];
        const std::size_t z_a = count_a(profile, inst.block_begin(u), inst.block_begin(u) + inst.block_size());
        r.blocks_uniform = r.blocks_uniform && z_a == (prime == Action::A ? inst.block_size() : 0);
        if (prime == Action::A) {
            chosen.push_back(u);
        }
    }

    r.nash = reduction_nash_check(inst, profile);

    if (h.is_transversal(chosen)) {
        const WelfareBreakdown w = reduction_welfare(inst, profile);
        r.welfare_formula = w.total() == extension_welfare_formula(inst, chosen.size(), w.incidence);
    }
    return r;
}

ExtensionReport verify_extension(const ReductionInstance &inst, const std::vector<Vertex> &transversal) {
    return verify_extension(inst, extension_profile(inst, transversal));
}

} // namespace polycoord
