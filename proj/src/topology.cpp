#include "agenttree/topology.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace agenttree {

Tree::Tree(int levels) : levels_(levels), agent_count_(0) {
    if (levels < 1 || levels > max_levels) {
        throw std::invalid_argument("levels must be in [1, " + std::to_string(max_levels) +
                                    "], got " + std::to_string(levels));
    }
    agent_count_ = (std::size_t{1} << levels) - 1;
}

void Tree::check_index(AgentIndex i) const {
    if (i >= agent_count_) {
        throw std::invalid_argument("agent index " + std::to_string(i) + " out of range [0, " +
                                    std::to_string(agent_count_) + ")");
    }
}

AgentIndex Tree::parent_of(AgentIndex i) const {
    check_index(i);
    return i == 0 ? 0 : (i - 1) / 2;
}

bool Tree::is_leaf(AgentIndex i) const {
    check_index(i);
    return 2 * i + 1 >= agent_count_;
}

std::pair<AgentIndex, AgentIndex> Tree::children_of(AgentIndex i) const {
    if (is_leaf(i)) return {i, i};
    return {2 * i + 1, 2 * i + 2};
}

Level Tree::level_of(AgentIndex i) const {
    check_index(i);
    return static_cast<Level>(std::bit_width(i + 1) - 1);
}

std::size_t Tree::agents_at_level(Level level) const {
    if (level >= static_cast<Level>(levels_)) {
        throw std::invalid_argument("level " + std::to_string(level) + " out of range");
    }
    return std::size_t{1} << level;
}

AgentIndex Tree::first_at_level(Level level) const {
    return agents_at_level(level) - 1;
}

Tree build_tree(int levels) { return Tree(levels); }

}  // namespace agenttree
