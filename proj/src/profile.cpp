#include "polycoord/profile.hpp"

#include <algorithm>

#include "polycoord/errors.hpp"

namespace polycoord {

StrategyProfile StrategyProfile::parse(std::string_view text) {
    std::vector<Action> actions;
    actions.reserve(text.size());
    for (char c : text) {
        if (c == 'a') {
            actions.push_back(Action::A);
        } else if (c == 'b') {
            actions.push_back(Action::B);
        } else {
            throw InvalidInput(std::string("profile contains invalid action '") + c + "'");
        }
    }
    return StrategyProfile(std::move(actions));
}

StrategyProfile StrategyProfile::flipped(Vertex v) const {
    StrategyProfile out = *this;
    out.actions_.at(v) = flip(out.actions_[v]);
    return out;
}

std::size_t StrategyProfile::count(Action s) const {
    return static_cast<std::size_t>(std::count(actions_.begin(), actions_.end(), s));
}

std::string StrategyProfile::str() const {
    std::string out(actions_.size(), 'a');
    for (std::size_t i = 0; i < actions_.size(); ++i) {
        out[i] = to_char(actions_[i]);
    }
    return out;
}

} // namespace polycoord
