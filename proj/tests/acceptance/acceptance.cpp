// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact rational equality; there is no
// numeric tolerance anywhere. Seeds are fixed so every run sees the same
// instances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polycoord/hardness.hpp"
#include "polycoord/language_game.hpp"
#include "polycoord/mincut.hpp"
#include "polycoord/oracle.hpp"
#include "polycoord/tractable.hpp"
#include "random_instances.hpp"

using namespace polycoord;
using polycoord::testkit::Rng;
namespace t = polycoord::testkit;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

void fail(Verdict &v, const std::string &why) {
    if (v.pass) {
        v.detail = why;
    }
    v.pass = false;
}

Rational count_q(std::size_t k) { return Rational(static_cast<long>(k)); }

std::size_t random_size(Rng &rng, std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(t::uniform_int(rng, static_cast<long>(lo), static_cast<long>(hi)));
}

double random_density(Rng &rng) { return 0.15 + 0.1 * static_cast<double>(t::uniform_int(rng, 0, 5)); }

// 1. solve_mwop agrees with exhaustive search on Property-(iii) instances.
Verdict mwop_oracle_equivalence() {
    Rng rng(1001);
    Verdict v;
    int min_cut_branch = 0;
    for (int k = 0; k < 200; ++k) {
        const auto inst = t::random_prop3_instance(rng, random_size(rng, 1, 12), random_density(rng));
        const auto r = solve_mwop(inst);
        if (r.status == SolveStatus::Hard) {
            fail(v, "instance " + std::to_string(k) + " reported Hard");
            continue;
        }
        min_cut_branch += r.status == SolveStatus::SolvedMinCut ? 1 : 0;
        const auto brute = brute_force_mwop(inst);
        if (*r.value != brute.value) {
            fail(v, "instance " + std::to_string(k) + ": solver " + r.value->str() + " vs oracle " + brute.value.str());
        }
        if (t::naive_mwop_value(inst, *r.profile) != *r.value) {
            fail(v, "instance " + std::to_string(k) + ": partition does not re-evaluate to the value");
        }
    }
    v.detail = v.pass ? "200/200 exact matches (" + std::to_string(min_cut_branch) + " via min cut)" : v.detail;
    return v;
}

// 2. For every partition, the shifted weight of the induced source-sink cut equals
//    -value - n * shift.
Verdict cut_identity() {
    Rng rng(1002);
    Verdict v;
    std::size_t partitions = 0;
    for (int k = 0; k < 100; ++k) {
        const auto inst = t::random_prop3_instance(rng, random_size(rng, 1, 8), random_density(rng));
        const auto aux = build_aux_graph(inst);
        const CutGraph g = aux.cut_graph();
        const std::size_t n = inst.num_vertices();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const auto p = t::profile_from_bits(bits, n);
            std::vector<bool> side(n + 2, false);
            side[aux.source()] = true;
            for (Vertex i = 0; i < n; ++i) {
                side[i] = p[i] == Action::A;
            }
            ++partitions;
            if (cut_weight(g, side) != -t::naive_mwop_value(inst, p) - count_q(n) * aux.shift) {
                fail(v, "instance " + std::to_string(k) + " partition " + p.str());
            }
        }
    }
    v.detail = v.pass ? "100 instances, " + std::to_string(partitions) + " partitions, all exact" : v.detail;
    return v;
}

std::vector<ThresholdGame> threshold_games() {
    Rng rng(1003);
    std::vector<ThresholdGame> out;
    for (int k = 0; k < 100; ++k) {
        out.push_back(t::random_threshold_game(rng, random_size(rng, 1, 12), random_density(rng)));
    }
    return out;
}

// 3. Welfare maximisation on pure-coordination threshold games.
Verdict welfare_maximisation() {
    Verdict v;
    int k = 0;
    for (const auto &tg : threshold_games()) {
        const auto game = to_polymatrix(tg);
        const auto r = maximize_welfare(game);
        if (r.status == SolveStatus::Hard) {
            fail(v, "game " + std::to_string(k) + " reported Hard");
        } else if (*r.value != brute_welfare_max(game).value || t::naive_welfare(game, *r.profile) != *r.value) {
            fail(v, "game " + std::to_string(k) + ": value mismatch");
        }
        ++k;
    }
    v.detail = v.pass ? "100/100 exact matches" : v.detail;
    return v;
}

// 4. Potential maximisation on the same games; maximisers are equilibria.
Verdict potential_maximisation() {
    Verdict v;
    int k = 0;
    for (const auto &tg : threshold_games()) {
        const auto game = to_polymatrix(tg);
        const auto r = maximize_potential(game);
        if (r.status == SolveStatus::Hard) {
            fail(v, "game " + std::to_string(k) + " reported Hard");
        } else {
            if (*r.value != brute_potential_max(game).value || total_potential(game, *r.profile) != *r.value) {
                fail(v, "game " + std::to_string(k) + ": value mismatch");
            }
            if (!t::naive_is_nash(game, *r.profile)) {
                fail(v, "game " + std::to_string(k) + ": maximiser is not a Nash equilibrium");
            }
        }
        ++k;
    }
    v.detail = v.pass ? "100/100 exact matches, every maximiser is an equilibrium" : v.detail;
    return v;
}

// 5. gamma = 1/2 anti-coordination: welfare optimum is the max cut, and the
//    polynomial solver declines.
Verdict anti_coordination_max_cut() {
    Rng rng(1005);
    Verdict v;
    for (int k = 0; k < 50; ++k) {
        Graph g;
        do {
            g = t::random_graph(rng, random_size(rng, 2, 12), random_density(rng));
        } while (g.num_edges() == 0);
        PolymatrixGame game(g.num_vertices());
        for (const auto &[a, b] : g.edges()) {
            game.add_edge(a, b, anti_coordination_bimatrix(Rational(1, 2), Rational(1, 2)));
        }
        if (brute_welfare_max(game).value != count_q(brute_max_cut(g).cut_size)) {
            fail(v, "graph " + std::to_string(k) + ": welfare optimum differs from max cut");
        }
        if (maximize_welfare(game).status != SolveStatus::Hard) {
            fail(v, "graph " + std::to_string(k) + ": solver did not report Hard");
        }
    }
    v.detail = v.pass ? "50/50 graphs: welfare = max cut, all Hard" : v.detail;
    return v;
}

// 6. gamma_B = 0, gamma_A = 1: directed-cut solver equals the best equilibrium.
Verdict extremal_case() {
    Rng rng(1006);
    Verdict v;
    for (int k = 0; k < 100; ++k) {
        const auto lg = t::random_language_game(rng, random_size(rng, 1, 12), random_density(rng), Rational(1),
                                                Rational(0));
        const auto r = solve_extremal(lg);
        const auto game = to_polymatrix(lg);
        if (r.welfare != brute_force_best_ne(game).welfare) {
            fail(v, "game " + std::to_string(k) + ": welfare differs from best equilibrium");
        }
        std::size_t cross = 0;
        for (const auto &[a, b] : lg.graph.edges()) {
            cross += lg.group[a] != lg.group[b] ? 1 : 0;
        }
        const Rational recomputed = count_q(2 * lg.graph.num_edges()) - count_q(cross) - *r.cut_value;
        if (recomputed != r.welfare || t::naive_welfare(game, r.profile) != r.welfare) {
            fail(v, "game " + std::to_string(k) + ": 2|E| - |E(A,B)| - cut does not match");
        }
    }
    v.detail = v.pass ? "100/100 exact matches, cut identity recomputed" : v.detail;
    return v;
}

// 7. Monotone cases: the uniform profile is an equilibrium and is optimal
//    among equilibria.
Verdict monotone_cases() {
    Rng rng(1007);
    Verdict v;
    for (int k = 0; k < 100; ++k) {
        const bool low = k % 2 == 0;
        Rational ga = low ? Rational(t::uniform_int(rng, 0, 10), 20) : Rational(t::uniform_int(rng, 10, 20), 20);
        Rational gb = low ? Rational(t::uniform_int(rng, 0, 20), 20) : Rational(t::uniform_int(rng, 10, 20), 20);
        if (ga < gb) {
            std::swap(ga, gb);
        }
        if (low && ga > Rational(1, 2)) {
            ga = Rational(1, 2);
            gb = min(gb, ga);
        }
        const auto lg = t::random_language_game(rng, random_size(rng, 1, 12), random_density(rng), ga, gb);
        const auto game = to_polymatrix(lg);
        const std::size_t n = lg.graph.num_vertices();
        const StrategyProfile uniform(n, low ? Action::B : Action::A);
        if (!t::naive_is_nash(game, uniform)) {
            fail(v, "game " + std::to_string(k) + ": uniform profile is not an equilibrium");
        }
        const auto r = solve_monotone(lg);
        // Both branches apply at gamma_A = gamma_B = 1/2; all-a is returned then.
        const bool both = lg.gamma_A == Rational(1, 2) && lg.gamma_B == Rational(1, 2);
        if (!both && r.profile != uniform) {
            fail(v, "game " + std::to_string(k) + ": solver returned " + r.profile.str());
        }
        if (t::naive_welfare(game, uniform) != brute_force_best_ne(game).welfare || r.welfare != t::naive_welfare(game, uniform)) {
            fail(v, "game " + std::to_string(k) + ": welfare differs from best equilibrium");
        }
    }
    v.detail = v.pass ? "100/100 (50 all-b, 50 all-a) exact matches" : v.detail;
    return v;
}

// 8. Neighbour-ratio test agrees with the flip definition on every profile.
Verdict neighbour_ratio_equivalence() {
    Rng rng(1008);
    Verdict v;
    std::size_t profiles = 0;
    for (int k = 0; k < 50; ++k) {
        const auto tg = t::random_threshold_game(rng, random_size(rng, 1, 10), random_density(rng));
        const auto game = to_polymatrix(tg);
        const std::size_t n = tg.graph.num_vertices();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const auto s = t::profile_from_bits(bits, n);
            ++profiles;
            if (neighbour_ratio_nash_check(tg, s) != is_nash(game, s).equilibrium) {
                fail(v, "game " + std::to_string(k) + " profile " + s.str());
            }
        }
    }
    v.detail = v.pass ? "50 games, " + std::to_string(profiles) + " profiles, full agreement" : v.detail;
    return v;
}

// Calls visit(h) for every labelled 3-uniform hypergraph on exactly n
// vertices with at most max_edges edges.
void for_each_hypergraph(std::size_t n, std::size_t max_edges, const std::function<void(const Hypergraph3 &)> &visit) {
    const auto triples = t::all_triples(n);
    std::vector<Hypergraph3::Hyperedge> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t next) {
        visit(Hypergraph3(n, chosen));
        if (chosen.size() == max_edges) {
            return;
        }
        for (std::size_t i = next; i < triples.size(); ++i) {
            chosen.push_back(triples[i]);
            extend(i + 1);
            chosen.pop_back();
        }
    };
    extend(0);
}

// 9. Reduction round trip on every small hypergraph.
Verdict hardness_round_trip() {
    Verdict v;
    std::size_t hypergraphs = 0;
    std::size_t transversals = 0;
    std::string timing;
    for (const auto &[ga, gb] : {std::pair{Rational(3, 4), Rational(1, 4)}, std::pair{Rational(1), Rational(1, 4)}}) {
        const auto start = std::chrono::steady_clock::now();
        double slowest = 0;
        for (std::size_t nv = 0; nv <= 6; ++nv) {
            for_each_hypergraph(nv, 4, [&](const Hypergraph3 &h) {
                const auto h_start = std::chrono::steady_clock::now();
                ++hypergraphs;
                const std::string name = "|V|=" + std::to_string(nv) + " |E|=" + std::to_string(h.num_edges());
                const auto c = compute_constants(h, ga, gb);
                if (!check_constants(h, ga, gb, c).all()) {
                    fail(v, "constants fail their defining conditions for " + name);
                }
                const ReductionInstance inst(h, ga, gb, c);
                const Rational eps_bound = 2 * count_q(inst.block_size()) * (1 - 2 * gb);
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
                    std::vector<bool> members(nv);
                    std::size_t size = 0;
                    for (std::size_t u = 0; u < nv; ++u) {
                        members[u] = (mask >> u) & 1U;
                        size += members[u] ? 1 : 0;
                    }
                    if (!h.is_transversal(members)) {
                        continue;
                    }
                    ++transversals;
                    const auto profile = extension_profile(inst, members);
                    if (!reduction_nash_check(inst, profile)) {
                        fail(v, "extension of a transversal is not an equilibrium for " + name);
                    }
                    const auto w = reduction_welfare(inst, profile);
                    if (w.total() != extension_welfare_formula(inst, size, w.incidence)) {
                        fail(v, "welfare formula mismatch for " + name);
                    }
                    const bool eps_ok = w.incidence >= 0 && (h.num_edges() == 0 ? w.incidence.is_zero() : w.incidence < eps_bound);
                    if (!eps_ok || w.incidence > count_q(6 * h.num_edges())) {
                        fail(v, "epsilon_T out of range for " + name);
                    }
                }
                const auto opt = brute_min_transversal(h);
                const auto ext = extension_welfare(inst, opt.set);
                if (recover_transversal_size(inst, ext.welfare) != static_cast<std::int64_t>(opt.size)) {
                    fail(v, "recovered size differs from the minimum transversal for " + name);
                }
                slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - h_start).count());
            });
        }
        const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buffer[160];
        std::snprintf(buffer, sizeof buffer, "; (%s,%s): %.1fs total, slowest H %.3fs", ga.str().c_str(),
                      gb.str().c_str(), total, slowest);
        timing += buffer;
    }
    if (v.pass) {
        v.detail = std::to_string(hypergraphs) + " (H, gamma) pairs, " + std::to_string(transversals) +
                   " transversal extensions" + timing;
    }
    return v;
}

// 10. Complete one-type graphs: the uniform profile is optimal and every other
//     partition loses at least the clique gap bound.
Verdict clique_bounds() {
    Verdict v;
    std::size_t checked = 0;
    const auto run = [&](const Rational &gamma, Group type) {
        for (std::size_t n = 2; n <= 8; ++n) {
            const ThresholdGame tg{Graph::complete(n), std::vector<Rational>(n, gamma)};
            const auto game = to_polymatrix(tg);
            const StrategyProfile uniform(n, type == Group::A ? Action::A : Action::B);
            const Rational best = t::naive_welfare(game, uniform);
            if (brute_welfare_max(game).value != best) {
                fail(v, "uniform profile not optimal at n=" + std::to_string(n) + " gamma=" + gamma.str());
            }
            const Rational bound = clique_gap_bound(n, gamma, type);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                const auto p = t::profile_from_bits(bits, n);
                if (p == uniform) {
                    continue;
                }
                ++checked;
                if (best - t::naive_welfare(game, p) < bound) {
                    fail(v, "deficit below bound at n=" + std::to_string(n) + " gamma=" + gamma.str() + " " + p.str());
                }
            }
        }
    };
    for (const auto &g : {Rational(3, 5), Rational(3, 4), Rational(1)}) {
        run(g, Group::A);
    }
    for (const auto &g : {Rational(1, 4), Rational(2, 5)}) {
        run(g, Group::B);
    }
    v.detail = v.pass ? std::to_string(checked) + " non-optimal partitions, all deficits >= bound" : v.detail;
    return v;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        Verdict (*check)();
    };
    const Criterion criteria[] = {
        {1, "MWOP solver equals exhaustive search", mwop_oracle_equivalence},
        {2, "source-sink cut weight equals -value - n*shift", cut_identity},
        {3, "welfare maximisation on coordination games", welfare_maximisation},
        {4, "potential maximisation, maximiser is an equilibrium", potential_maximisation},
        {5, "gamma=1/2 anti-coordination welfare equals max cut", anti_coordination_max_cut},
        {6, "extremal language games via directed cut", extremal_case},
        {7, "monotone language games", monotone_cases},
        {8, "neighbour-ratio test equals flip definition", neighbour_ratio_equivalence},
        {9, "hardness reduction round trip", hardness_round_trip},
        {10, "clique gap bounds", clique_bounds},
    };
    std::printf("tolerance: exact rational equality for every comparison\n");
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  [%2d] %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs);
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
