#ifndef POLYCOORD_MWOP_HPP
#define POLYCOORD_MWOP_HPP

#include <cstddef>
#include <vector>

#include "polycoord/profile.hpp"
#include "polycoord/rational.hpp"

namespace polycoord {

/// Default vertex cap for exhaustive 2^n searches.
inline constexpr std::size_t kDefaultEnumerationCap = 22;

/**
 * Maximum Weighted Orgraph Partition instance: an oriented graph on n
 * vertices with a 2x2 matrix on every arc. The tail of an arc indexes the
 * matrix row, the head indexes the column.
 */
class MwopInstance {
public:
    struct Arc {
        Vertex tail;
        Vertex head;
        Matrix2 m;
    };

    MwopInstance() = default;
    explicit MwopInstance(std::size_t n) : n_(n), incident_(n) {}

    /// Throws InvalidInput on self-loops, out-of-range ids, repeated arcs and
    /// 2-cycles (an instance may not hold both ij and ji).
    void add_arc(Vertex tail, Vertex head, Matrix2 m);

    std::size_t num_vertices() const { return n_; }
    const std::vector<Arc> &arcs() const { return arcs_; }
    const std::vector<std::size_t> &incident(Vertex v) const { return incident_.at(v); }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Arc weight under a partition: the entry selected by (tail side, head side).
inline const Rational &arc_weight(const Matrix2 &m, Action tail, Action head) { return m.at(tail, head); }

Rational instance_value(const MwopInstance &inst, const StrategyProfile &partition);

struct PropertySet {
    bool prop_i = false;   ///< m_aa is a maximum entry
    bool prop_ii = false;  ///< m_bb is a maximum entry
    bool prop_iii = false; ///< m_aa + m_bb >= m_ab + m_ba

    friend bool operator==(const PropertySet &, const PropertySet &) = default;
};

PropertySet classify_matrix(const Matrix2 &m);

enum class MwopClass { AllPropI, AllPropII, AllPropIII, Hard };

const char *to_string(MwopClass c);

/// First of I, II, III that every arc matrix satisfies; Hard otherwise.
MwopClass classify_instance(const MwopInstance &inst);

struct MwopSolution {
    StrategyProfile partition;
    Rational value;
};

/// Exhaustive maximisation over all 2^n partitions. Ties go to the
/// lexicographically smallest action string. Throws InstanceTooLarge when
/// n exceeds `cap`.
MwopSolution brute_force_mwop(const MwopInstance &inst, std::size_t cap = kDefaultEnumerationCap);

} // namespace polycoord

#endif // POLYCOORD_MWOP_HPP
