#include "polycoord/language_game.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "polycoord/errors.hpp"
#include "polycoord/mincut.hpp"
#include "polycoord/oracle.hpp"

namespace polycoord {

namespace {

bool in_unit_interval(const Rational &g) { return g.sign() >= 0 && g <= Rational(1); }

// Component label of every vertex of G[group], restricted to vertices of that
// group (others get -1), plus the number of components.
std::pair<std::vector<long>, std::size_t> components_of(const LanguageGame &lg, Group which) {
    const std::size_t n = lg.graph.num_vertices();
    std::vector<long> label(n, -1);
    std::size_t count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (lg.group[s] != which || label[s] >= 0) {
            continue;
        }
        std::vector<Vertex> stack{s};
        label[s] = static_cast<long>(count);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : lg.graph.neighbours(u)) {
                if (lg.group[v] == which && label[v] < 0) {
                    label[v] = static_cast<long>(count);
                    stack.push_back(v);
                }
            }
        }
        ++count;
    }
    return {std::move(label), count};
}

} // namespace

void ThresholdGame::validate() const {
    if (gamma.size() != graph.num_vertices()) {
        throw InvalidInput("threshold game needs one gamma per vertex");
    }
    for (const auto &g : gamma) {
        if (!in_unit_interval(g)) {
            throw InvalidInput("threshold " + g.str() + " outside [0,1]");
        }
    }
}

void LanguageGame::validate() const {
    if (group.size() != graph.num_vertices()) {
        throw InvalidInput("language game needs one group label per vertex");
    }
    if (gamma_B.sign() < 0 || gamma_A < gamma_B || gamma_A > Rational(1)) {
        throw InvalidInput("language game requires 0 <= gamma_B <= gamma_A <= 1, got gamma_A=" +
                           gamma_A.str() + ", gamma_B=" + gamma_B.str());
    }
}

ThresholdGame LanguageGame::as_threshold_game() const {
    ThresholdGame tg{graph, {}};
    tg.gamma.reserve(graph.num_vertices());
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
        tg.gamma.push_back(gamma_of(v));
    }
    return tg;
}

PolymatrixGame to_polymatrix(const ThresholdGame &tg) {
    tg.validate();
    PolymatrixGame game(tg.graph.num_vertices());
    for (auto [u, v] : tg.graph.edges()) {
        if (v < u) {
            std::swap(u, v);
        }
        game.add_edge(u, v, coordination_bimatrix(tg.gamma[u], tg.gamma[v]));
    }
    return game;
}

PolymatrixGame to_polymatrix(const LanguageGame &lg) {
    lg.validate();
    return to_polymatrix(lg.as_threshold_game());
}

bool threshold_player_content(const Rational &gamma, Action own, std::size_t na, std::size_t nb) {
    const Rational a(static_cast<long>(na));
    const Rational b(static_cast<long>(nb));
    if (own == Action::A) {
        // Staying on a earns na*gamma, moving to b earns nb*(1-gamma).
        return nb == 0 || a * gamma >= b * (1 - gamma);
    }
    return na == 0 || b * (1 - gamma) >= a * gamma;
}

bool neighbour_ratio_nash_check(const ThresholdGame &tg, const StrategyProfile &profile) {
    tg.validate();
    require_profile_size(tg.graph.num_vertices(), profile);
    for (Vertex i = 0; i < tg.graph.num_vertices(); ++i) {
        std::size_t na = 0;
        for (Vertex j : tg.graph.neighbours(i)) {
            na += profile[j] == Action::A ? 1 : 0;
        }
        const std::size_t nb = tg.graph.neighbours(i).size() - na;
        if (!threshold_player_content(tg.gamma[i], profile[i], na, nb)) {
            return false;
        }
    }
    return true;
}

bool neighbour_ratio_nash_check(const LanguageGame &lg, const StrategyProfile &profile) {
    lg.validate();
    return neighbour_ratio_nash_check(lg.as_threshold_game(), profile);
}

const char *to_string(LanguageCase c) {
    switch (c) {
    case LanguageCase::MonotoneAllB: return "MonotoneAllB";
    case LanguageCase::MonotoneAllA: return "MonotoneAllA";
    case LanguageCase::Extremal: return "Extremal";
    case LanguageCase::HardBruteForced: return "HardBruteForced";
    }
    return "HardBruteForced";
}

LanguageSolveReport solve_monotone(const LanguageGame &lg) {
    lg.validate();
    const Rational half(1, 2);
    LanguageSolveReport report;
    const std::size_t n = lg.graph.num_vertices();
    if (lg.gamma_B >= half) {
        report.which = LanguageCase::MonotoneAllA;
        report.profile = StrategyProfile(n, Action::A);
    } else if (lg.gamma_A <= half) {
        report.which = LanguageCase::MonotoneAllB;
        report.profile = StrategyProfile(n, Action::B);
    } else {
        throw PreconditionViolated("monotone case needs gamma_A <= 1/2 or gamma_B >= 1/2");
    }
    report.welfare = welfare(to_polymatrix(lg), report.profile);
    return report;
}

LanguageSolveReport solve_extremal(const LanguageGame &lg) {
    lg.validate();
    if (!lg.gamma_B.is_zero() || lg.gamma_A != Rational(1)) {
        throw PreconditionViolated("extremal case needs gamma_B = 0 and gamma_A = 1");
    }
    const auto [comp_a, num_a] = components_of(lg, Group::A);
    const auto [comp_b, num_b] = components_of(lg, Group::B);

    std::vector<long> inner_a(num_a, 0);
    std::vector<long> inner_b(num_b, 0);
    std::map<std::pair<long, long>, long> cross; // (A-component, B-component) -> edge count
    long cross_total = 0;
    for (const auto &[u, v] : lg.graph.edges()) {
        const Group gu = lg.group[u];
        const Group gv = lg.group[v];
        if (gu == Group::A && gv == Group::A) {
            ++inner_a[comp_a[u]];
        } else if (gu == Group::B && gv == Group::B) {
            ++inner_b[comp_b[u]];
        } else {
            const Vertex a = gu == Group::A ? u : v;
            const Vertex b = gu == Group::A ? v : u;
            ++cross[{comp_a[a], comp_b[b]}];
            ++cross_total;
        }
    }

    // Vertices: x = 0, y = 1, A-components 2.., B-components after them.
    CutGraph d;
    d.num_vertices = 2 + num_a + num_b;
    d.source = 0;
    d.sink = 1;
    auto a_node = [](long k) { return static_cast<Vertex>(2 + k); };
    auto b_node = [num_a = num_a](long l) { return static_cast<Vertex>(2 + num_a + l); };
    Rational finite_total;
    for (std::size_t k = 0; k < num_a; ++k) {
        d.add_arc(0, a_node(static_cast<long>(k)), Rational(2 * inner_a[k]));
        finite_total += Rational(2 * inner_a[k]);
    }
    for (std::size_t l = 0; l < num_b; ++l) {
        d.add_arc(b_node(static_cast<long>(l)), 1, Rational(2 * inner_b[l]));
        finite_total += Rational(2 * inner_b[l]);
    }
    for (const auto &[key, count] : cross) {
        d.add_arc(a_node(key.first), b_node(key.second), Rational(count));
        finite_total += Rational(count);
    }
    const Rational infinite = finite_total + 1;
    for (const auto &[key, count] : cross) {
        d.add_arc(b_node(key.second), a_node(key.first), infinite);
    }

    const CutResult cut = min_st_cut(d);
    if (cut.value >= infinite) {
        throw InfiniteCut("minimum cut uses an infinite arc");
    }

    const std::size_t n = lg.graph.num_vertices();
    LanguageSolveReport report;
    report.which = LanguageCase::Extremal;
    report.profile = StrategyProfile(n, Action::B);
    for (Vertex v = 0; v < n; ++v) {
        const Vertex node = lg.group[v] == Group::A ? a_node(comp_a[v]) : b_node(comp_b[v]);
        if (cut.source_side[node]) {
            report.profile[v] = Action::A;
        }
    }
    report.cut_value = cut.value;
    report.welfare = Rational(2 * static_cast<long>(lg.graph.num_edges()) - cross_total) - cut.value;

    const PolymatrixGame game = to_polymatrix(lg);
    if (welfare(game, report.profile) != report.welfare || !neighbour_ratio_nash_check(lg, report.profile)) {
        throw std::logic_error("solve_extremal: cut does not correspond to an equilibrium of the stated welfare");
    }
    return report;
}

BestNe brute_force_best_ne(const PolymatrixGame &game, std::size_t cap) {
    ProfileValue best = brute_best_ne(game, cap);
    return {std::move(best.profile), std::move(best.value)};
}

LanguageSolveReport solve_language(const LanguageGame &lg, std::size_t cap) {
    lg.validate();
    const Rational half(1, 2);
    if (lg.gamma_A <= half || lg.gamma_B >= half) {
        return solve_monotone(lg);
    }
    if (lg.gamma_B.is_zero() && lg.gamma_A == Rational(1)) {
        return solve_extremal(lg);
    }
    BestNe best = brute_force_best_ne(to_polymatrix(lg), cap);
    LanguageSolveReport report;
    report.which = LanguageCase::HardBruteForced;
    report.profile = std::move(best.profile);
    report.welfare = std::move(best.welfare);
    return report;
}

} // namespace polycoord
