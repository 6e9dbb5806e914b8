#include "polycoord/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "polycoord/enumeration.hpp"
#include "polycoord/errors.hpp"

namespace polycoord {

namespace {

// Incremental bookkeeping for a Gray-code walk over a polymatrix game:
// running welfare, and each player's gain from flipping.
class GameWalker {
public:
    explicit GameWalker(const PolymatrixGame &game)
        : game_(game), profile_(game.num_vertices(), Action::A), gain_(game.num_vertices()) {
        for (const auto &e : game_.edges()) {
            welfare_ += pair_welfare(e, Action::A, Action::A);
            gain_[e.row] += row_gain(e, Action::A, Action::A);
            gain_[e.col] += col_gain(e, Action::A, Action::A);
        }
        for (const auto &g : gain_) {
            positive_ += g.sign() > 0 ? 1 : 0;
        }
    }

    StrategyProfile &profile() { return profile_; }
    const Rational &welfare() const { return welfare_; }
    bool is_equilibrium() const { return positive_ == 0; }

    void before_flip(Vertex v) {
        for (std::size_t idx : game_.incident(v)) {
            const auto &e = game_.edges()[idx];
            const Action r = profile_[e.row];
            const Action c = profile_[e.col];
            const Action r2 = e.row == v ? flip(r) : r;
            const Action c2 = e.col == v ? flip(c) : c;
            welfare_ += pair_welfare(e, r2, c2) - pair_welfare(e, r, c);
            adjust(e.row, row_gain(e, r2, c2) - row_gain(e, r, c));
            adjust(e.col, col_gain(e, r2, c2) - col_gain(e, r, c));
        }
    }

private:
    static Rational pair_welfare(const PolymatrixGame::Edge &e, Action r, Action c) {
        return e.payoff.row.at(r, c) + e.payoff.col.at(c, r);
    }
    static Rational row_gain(const PolymatrixGame::Edge &e, Action r, Action c) {
        return e.payoff.row.at(flip(r), c) - e.payoff.row.at(r, c);
    }
    static Rational col_gain(const PolymatrixGame::Edge &e, Action r, Action c) {
        return e.payoff.col.at(flip(c), r) - e.payoff.col.at(c, r);
    }

    void adjust(Vertex i, const Rational &delta) {
        if (delta.is_zero()) {
            return;
        }
        const bool was = gain_[i].sign() > 0;
        gain_[i] += delta;
        const bool now = gain_[i].sign() > 0;
        positive_ += static_cast<long>(now) - static_cast<long>(was);
    }

    const PolymatrixGame &game_;
    StrategyProfile profile_;
    std::vector<Rational> gain_;
    Rational welfare_;
    long positive_ = 0;
};

void require_witness(bool ok, const char *what) {
    if (!ok) {
        throw std::logic_error(std::string(what) + ": witness failed independent re-evaluation");
    }
}

} // namespace

ProfileValue brute_welfare_max(const PolymatrixGame &game, std::size_t cap) {
    const std::size_t n = game.num_vertices();
    detail::require_within_cap(n, cap, "brute_welfare_max");
    GameWalker walker(game);
    Rational best = walker.welfare();
    std::uint64_t best_rank = 0;
    detail::gray_walk(
        walker.profile(), [&](Vertex v) { walker.before_flip(v); },
        [&](std::uint64_t rank) {
            if (walker.welfare() > best || (walker.welfare() == best && rank < best_rank)) {
                best = walker.welfare();
                best_rank = rank;
            }
        });
    ProfileValue out{detail::profile_from_rank(n, best_rank), best};
    require_witness(welfare(game, out.profile) == out.value, "brute_welfare_max");
    return out;
}

ProfileValue brute_potential_max(const PolymatrixGame &game, std::size_t cap) {
    const std::size_t n = game.num_vertices();
    detail::require_within_cap(n, cap, "brute_potential_max");
    std::vector<Matrix2> phi;
    phi.reserve(game.num_edges());
    for (const auto &e : game.edges()) {
        phi.push_back(potential_matrix(e.payoff));
    }
    StrategyProfile profile(n, Action::A);
    Rational value;
    for (const auto &m : phi) {
        value += m.aa;
    }
    Rational best = value;
    std::uint64_t best_rank = 0;
    detail::gray_walk(
        profile,
        [&](Vertex v) {
            for (std::size_t idx : game.incident(v)) {
                const auto &e = game.edges()[idx];
                const Action r = profile[e.row];
                const Action c = profile[e.col];
                const Action r2 = e.row == v ? flip(r) : r;
                const Action c2 = e.col == v ? flip(c) : c;
                value += phi[idx].at(r2, c2) - phi[idx].at(r, c);
            }
        },
        [&](std::uint64_t rank) {
            if (value > best || (value == best && rank < best_rank)) {
                best = value;
                best_rank = rank;
            }
        });
    ProfileValue out{detail::profile_from_rank(n, best_rank), best};
    require_witness(total_potential(game, out.profile) == out.value, "brute_potential_max");
    require_witness(is_nash(game, out.profile).equilibrium, "brute_potential_max");
    return out;
}

std::vector<StrategyProfile> enumerate_pure_ne(const PolymatrixGame &game, std::size_t cap) {
    const std::size_t n = game.num_vertices();
    detail::require_within_cap(n, cap, "enumerate_pure_ne");
    GameWalker walker(game);
    std::vector<std::uint64_t> ranks;
    detail::gray_walk(
        walker.profile(), [&](Vertex v) { walker.before_flip(v); },
        [&](std::uint64_t rank) {
            if (walker.is_equilibrium()) {
                ranks.push_back(rank);
            }
        });
    std::sort(ranks.begin(), ranks.end());
    std::vector<StrategyProfile> out;
    out.reserve(ranks.size());
    for (std::uint64_t r : ranks) {
        out.push_back(detail::profile_from_rank(n, r));
        require_witness(is_nash(game, out.back()).equilibrium, "enumerate_pure_ne");
    }
    return out;
}

ProfileValue brute_best_ne(const PolymatrixGame &game, std::size_t cap) {
    const std::size_t n = game.num_vertices();
    detail::require_within_cap(n, cap, "brute_best_ne");
    GameWalker walker(game);
    bool found = false;
    Rational best;
    std::uint64_t best_rank = 0;
    detail::gray_walk(
        walker.profile(), [&](Vertex v) { walker.before_flip(v); },
        [&](std::uint64_t rank) {
            if (!walker.is_equilibrium()) {
                return;
            }
            if (!found || walker.welfare() > best || (walker.welfare() == best && rank < best_rank)) {
                best = walker.welfare();
                best_rank = rank;
                found = true;
            }
        });
    if (!found) {
        throw NoPureNE("game has no pure Nash equilibrium");
    }
    ProfileValue out{detail::profile_from_rank(n, best_rank), best};
    require_witness(is_nash(game, out.profile).equilibrium && welfare(game, out.profile) == out.value,
                    "brute_best_ne");
    return out;
}

MaxCutResult brute_max_cut(const Graph &graph, std::size_t cap) {
    const std::size_t n = graph.num_vertices();
    detail::require_within_cap(n, cap, "brute_max_cut");
    StrategyProfile side(n, Action::A);
    long crossing = 0;
    long best = 0;
    std::uint64_t best_rank = 0;
    detail::gray_walk(
        side,
        [&](Vertex v) {
            for (Vertex u : graph.neighbours(v)) {
                crossing += side[u] == side[v] ? 1 : -1;
            }
        },
        [&](std::uint64_t rank) {
            if (crossing > best || (crossing == best && rank < best_rank)) {
                best = crossing;
                best_rank = rank;
            }
        });
    MaxCutResult out{detail::profile_from_rank(n, best_rank), static_cast<std::size_t>(best)};
    std::size_t recount = 0;
    for (const auto &[u, v] : graph.edges()) {
        recount += out.partition[u] != out.partition[v] ? 1 : 0;
    }
    require_witness(recount == out.cut_size, "brute_max_cut");
    return out;
}

TransversalResult brute_min_transversal(const Hypergraph3 &h, std::size_t cap) {
    const std::size_t n = h.num_vertices();
    detail::require_within_cap(n, cap, "brute_min_transversal");
    // Sizes in increasing order; within a size, combinations in
    // lexicographic order, so the first hit is the answer.
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Vertex> combo(k);
        for (std::size_t i = 0; i < k; ++i) {
            combo[i] = i;
        }
        for (;;) {
            if (h.is_transversal(combo)) {
                return {combo, k};
            }
            // Advance to the next k-combination of 0..n-1.
            std::size_t i = k;
            while (i > 0 && combo[i - 1] == n - k + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++combo[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    throw std::logic_error("brute_min_transversal: the full vertex set is always a transversal");
}

} // namespace polycoord
