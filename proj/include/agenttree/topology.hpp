#pragma once

#include <cstddef>
#include <utility>

namespace agenttree {

using AgentIndex = std::size_t;
using Level = unsigned;

/// Complete binary agent tree with breadth-first index layout.
///
/// Agent 0 is the ur-parent (level 0). The children of agent i are 2i+1 and
/// 2i+2. Boundary conventions: the ur-parent is its own parent and every
/// bottom-level agent is its own pair of children, so neighbour lookups are
/// total functions over [0, N).
class Tree {
public:
    /// Throws std::invalid_argument unless 1 <= levels <= max_levels.
    explicit Tree(int levels);

    static constexpr int max_levels = 30;

    int levels() const noexcept { return levels_; }
    std::size_t agent_count() const noexcept { return agent_count_; }

    AgentIndex parent_of(AgentIndex i) const;
    std::pair<AgentIndex, AgentIndex> children_of(AgentIndex i) const;
    Level level_of(AgentIndex i) const;
    bool is_leaf(AgentIndex i) const;

    /// Number of agents on level `level` (2^level).
    std::size_t agents_at_level(Level level) const;
    /// First index on level `level`; the level occupies [first, first + count).
    AgentIndex first_at_level(Level level) const;

private:
    void check_index(AgentIndex i) const;

    int levels_;
    std::size_t agent_count_;
};

Tree build_tree(int levels);

}  // namespace agenttree
