#ifndef POLYCOORD_HARDNESS_HPP
#define POLYCOORD_HARDNESS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "polycoord/hypergraph.hpp"
#include "polycoord/language_game.hpp"

namespace polycoord {

/**
 * Constants of the Minimum Transversal reduction for thresholds
 * 0 < gamma_B < 1/2 < gamma_A <= 1 (gA, gB below):
 *
 *   block_size    ceil(3|E| (1-gB) / (gB (1-2gB)))
 *   theta         6|E| + 2|V| block_size
 *   attach_b      smallest positive integer with attach_b (1-gB)(gA-gB)/gB > theta
 *   attach_a      largest integer strictly below (attach_b+3)(1-gB)/gB
 *   clique_a_size smallest integer >= attach_a with
 *                 (clique_a_size-1)(2gA-1) > theta + 2|E|(attach_a+attach_b)
 *   clique_b_size smallest integer >= attach_b with
 *                 (clique_b_size-1)(1-2gB) > theta + 2|E|(attach_a+attach_b)
 *                 and (clique_b_size-1)/|E| >= gB/(1-gB) (vacuous when |E| = 0)
 */
struct ReductionConstants {
    Rational theta;
    std::int64_t block_size = 0;
    std::int64_t attach_b = 0;
    std::int64_t attach_a = 0;
    std::int64_t clique_a_size = 0;
    std::int64_t clique_b_size = 0;

    friend bool operator==(const ReductionConstants &, const ReductionConstants &) = default;
};

/// Throws PreconditionViolated unless 0 < gamma_B < 1/2 < gamma_A <= 1.
ReductionConstants compute_constants(const Hypergraph3 &h, const Rational &gamma_A, const Rational &gamma_B);

/// Re-evaluation of every defining inequality, plus minimality of attach_b and
/// both clique sizes (value - 1 must fail) and maximality of attach_a (value + 1 must fail).
struct ConstantsCheck {
    bool block_size_ok = false;
    bool theta_ok = false;
    bool attach_b_ok = false;
    bool attach_b_minimal = false;
    bool attach_a_ok = false;
    bool attach_a_largest = false;
    bool clique_a_ok = false;
    bool clique_a_minimal = false;
    bool clique_b_ok = false;
    bool clique_b_minimal = false;

    bool all() const {
        return block_size_ok && theta_ok && attach_b_ok && attach_b_minimal && attach_a_ok && attach_a_largest && clique_a_ok && clique_a_minimal &&
               clique_b_ok && clique_b_minimal;
    }
};

ConstantsCheck check_constants(const Hypergraph3 &h, const Rational &gamma_A, const Rational &gamma_B,
                               const ReductionConstants &c);

/**
 * The reduction game with its cliques kept implicit.
 *
 * Vertex layout, in order: clique A (clique_a_size vertices, group A),
 * clique B, one hyperedge vertex r_e per hyperedge, one copy u' per
 * hypergraph vertex, then a block Z_u of block_size vertices per hypergraph
 * vertex. Everything outside clique A is group B. Clique edges are implied;
 * the remaining edge sets are explicit:
 *
 *   clique links:    r_e to the first attach_a vertices of clique A and the
 *                    first attach_b of clique B
 *   incidence links: r_e to u' for each u in e
 *   block links:     u' to every vertex of Z_u
 */
class ReductionInstance {
public:
    using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

    ReductionInstance(Hypergraph3 h, Rational gamma_A, Rational gamma_B, ReductionConstants constants);

    const Hypergraph3 &hypergraph() const { return h_; }
    const Rational &gamma_A() const { return gamma_A_; }
    const Rational &gamma_B() const { return gamma_B_; }
    const ReductionConstants &constants() const { return constants_; }
    const Rational &baseline_welfare() const { return baseline_welfare_; }

    std::size_t clique_a_size() const { return static_cast<std::size_t>(constants_.clique_a_size); }
    std::size_t clique_b_size() const { return static_cast<std::size_t>(constants_.clique_b_size); }
    std::size_t attach_a() const { return static_cast<std::size_t>(constants_.attach_a); }
    std::size_t attach_b() const { return static_cast<std::size_t>(constants_.attach_b); }
    std::size_t block_size() const { return static_cast<std::size_t>(constants_.block_size); }

    std::size_t num_vertices() const;
    Vertex clique_a_begin() const { return 0; }
    Vertex clique_b_begin() const { return clique_a_size(); }
    Vertex hyperedge_vertex(std::size_t e) const { return clique_a_size() + clique_b_size() + e; }
    Vertex vertex_copy(Vertex u) const { return clique_a_size() + clique_b_size() + h_.num_edges() + u; }
    Vertex block_begin(Vertex u) const { return clique_a_size() + clique_b_size() + h_.num_edges() + h_.num_vertices() + u * block_size(); }

    Group group_of(Vertex v) const { return v < clique_a_size() ? Group::A : Group::B; }
    const Rational &gamma_of(Vertex v) const { return group_of(v) == Group::A ? gamma_A_ : gamma_B_; }

    const EdgeList &clique_links() const { return clique_links_; }
    const EdgeList &incidence_links() const { return incidence_links_; }
    const EdgeList &block_links() const { return block_links_; }

    /// Number of edges inside the two cliques.
    std::uint64_t num_clique_edges() const;
    std::uint64_t num_edges() const;

    /// Explicit language game over the same vertices. Throws InstanceTooLarge
    /// when the edge count exceeds `max_edges`.
    LanguageGame materialise(std::uint64_t max_edges = 200'000) const;

private:
    Hypergraph3 h_;
    Rational gamma_A_;
    Rational gamma_B_;
    ReductionConstants constants_;
    Rational baseline_welfare_;
    EdgeList clique_links_;
    EdgeList incidence_links_;
    EdgeList block_links_;
};

ReductionInstance build_reduction(const Hypergraph3 &h, const Rational &gamma_A, const Rational &gamma_B);

/// Welfare without incidence and block links at the partition with clique A
/// and the hyperedge vertices on a and clique B on b.
Rational compute_baseline_welfare(const ReductionInstance &inst);

/// `members` is a membership mask over the hypergraph vertices.
StrategyProfile extension_profile(const ReductionInstance &inst, const std::vector<bool> &members);
StrategyProfile extension_profile(const ReductionInstance &inst, const std::vector<Vertex> &transversal);

/// Welfare contributed by each edge set, tallied edge by edge (clique edges
/// by counting actions within each clique).
struct WelfareBreakdown {
    Rational cliques;
    Rational clique_links;
    Rational incidence;
    Rational blocks;

    Rational total() const { return cliques + clique_links + incidence + blocks; }
};

WelfareBreakdown reduction_welfare(const ReductionInstance &inst, const StrategyProfile &profile);

/// baseline + epsilon + |V| block_size 2(1-gB) - |T| 2 block_size (1-2gB).
Rational extension_welfare_formula(const ReductionInstance &inst, std::size_t transversal_size, const Rational &epsilon);

struct ExtensionWelfare {
    Rational welfare;   ///< direct tally
    Rational epsilon_T; ///< contribution of the incidence links
    Rational formula;   ///< extension_welfare_formula(|T|, epsilon_T)
};

/// Throws NotATransversal when `transversal` misses some hyperedge.
ExtensionWelfare extension_welfare(const ReductionInstance &inst, const std::vector<Vertex> &transversal);

/// ceil((baseline + |V| block_size (2-2gB) - welfare) / (2 block_size (1-2gB))); 0 when H has no edges.
std::int64_t recover_transversal_size(const ReductionInstance &inst, const Rational &welfare_opt);

/// Lower bound on the welfare lost by any non-uniform partition of a
/// complete one-type threshold game on n >= 2 vertices. Type A requires
/// gamma > 1/2, type B requires gamma < 1/2.
Rational clique_gap_bound(std::size_t n, const Rational &gamma, Group type);

/// Nash test on the implicit game, one check per class of interchangeable
/// vertices.
bool reduction_nash_check(const ReductionInstance &inst, const StrategyProfile &profile);

/// Players with a profitable flip, found vertex by vertex from the explicit
/// edge lists.
std::vector<Vertex> reduction_deviators(const ReductionInstance &inst, const StrategyProfile &profile);

struct ExtensionReport {
    bool anchors_placed = false;     ///< clique A and every r_e on a, clique B on b
    bool hyperedges_covered = false; ///< every r_e has an incidence neighbour on a
    bool blocks_uniform = false;     ///< every {u'} + Z_u is monochromatic
    bool nash = false;               ///< profile is a Nash equilibrium
    bool welfare_formula = false; ///< direct welfare matches extension_welfare_formula

    bool all() const { return anchors_placed && hyperedges_covered && blocks_uniform && nash && welfare_formula; }
};

/// Checks an arbitrary profile. The welfare check uses T = {u : u' on a} and
/// fails when that T is not a transversal.
ExtensionReport verify_extension(const ReductionInstance &inst, const StrategyProfile &profile);
ExtensionReport verify_extension(const ReductionInstance &inst, const std::vector<Vertex> &transversal);

} // namespace polycoord

#endif // POLYCOORD_HARDNESS_HPP
