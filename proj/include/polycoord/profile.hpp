#ifndef POLYCOORD_PROFILE_HPP
#define POLYCOORD_PROFILE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polycoord/rational.hpp"

namespace polycoord {

using Vertex = std::size_t;

enum class Action : std::uint8_t { A = 0, B = 1 };

constexpr Action flip(Action s) { return s == Action::A ? Action::B : Action::A; }
constexpr char to_char(Action s) { return s == Action::A ? 'a' : 'b'; }

/// Total assignment of an action to every vertex. Doubles as an MWOP
/// partition (X_a, X_b).
class StrategyProfile {
public:
    StrategyProfile() = default;
    explicit StrategyProfile(std::size_t n, Action fill = Action::A) : actions_(n, fill) {}
    explicit StrategyProfile(std::vector<Action> actions) : actions_(std::move(actions)) {}

    /// Parses "abba..."; throws InvalidInput on any other character.
    static StrategyProfile parse(std::string_view text);

    std::size_t size() const { return actions_.size(); }
    Action operator[](Vertex v) const { return actions_[v]; }
    Action &operator[](Vertex v) { return actions_[v]; }
    const std::vector<Action> &actions() const { return actions_; }

    StrategyProfile flipped(Vertex v) const;
    std::size_t count(Action s) const;
    std::string str() const;

    friend bool operator==(const StrategyProfile &, const StrategyProfile &) = default;
    /// Lexicographic order with a < b.
    friend auto operator<=>(const StrategyProfile &lhs, const StrategyProfile &rhs) {
        return lhs.actions_ <=> rhs.actions_;
    }

private:
    std::vector<Action> actions_;
};

/// 2x2 rational matrix indexed by (row action, column action).
struct Matrix2 {
    Rational aa, ab, ba, bb;

    const Rational &at(Action row, Action col) const {
        if (row == Action::A) {
            return col == Action::A ? aa : ab;
        }
        return col == Action::A ? ba : bb;
    }
    Rational &at(Action row, Action col) {
        return const_cast<Rational &>(static_cast<const Matrix2 &>(*this).at(row, col));
    }

    Matrix2 transposed() const { return {aa, ba, ab, bb}; }
    Matrix2 scaled(const Rational &c) const { return {aa * c, ab * c, ba * c, bb * c}; }

    friend bool operator==(const Matrix2 &, const Matrix2 &) = default;
};

} // namespace polycoord

#endif // POLYCOORD_PROFILE_HPP
