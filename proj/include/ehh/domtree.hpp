#pragma once

#include "ehh/graph.hpp"

#include <functional>
#include <span>
#include <vector>

namespace ehh {

/// Called once per iteration of the stack loop with the current stack, bottom first.
using StackObserver = std::function<void(std::span<const int> stack)>;

/// Rooted dominating tree grown by the stack procedure: a vertex y is pushed
/// under the stack top x when y lies next to the tree, still has a neighbour
/// outside the tree's closed neighbourhood, and x is its only neighbour on the
/// stack. Keeps the push and deletion ranks of every node.
class DomTree {
public:
    /// Throws PreconditionError if g is disconnected, OutOfRangeError for a bad root.
    /// Among several eligible vertices the smallest id is pushed.
    static DomTree build(const Graph& g, int root, const StackObserver& observe = {});

    int root() const { return root_; }
    int host_order() const { return static_cast<int>(parent_.size()); }

    bool contains(int v) const { return v >= 0 && v < host_order() && push_rank_[static_cast<std::size_t>(v)] >= 0; }

    /// Parent of a node; the root is its own parent. -1 for non-nodes.
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    int push_rank(int v) const { return push_rank_[static_cast<std::size_t>(v)]; }
    int deletion_rank(int v) const { return deletion_rank_[static_cast<std::size_t>(v)]; }

    /// Nodes in push order.
    const std::vector<int>& nodes() const { return nodes_; }
    /// Children of a node in push order.
    const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }

    /// Root-to-v node sequence.
    std::vector<int> path_from_root(int v) const;

    /// a is an ancestor of b (every node is its own ancestor).
    bool is_ancestor(int a, int b) const
    {
        return enter_[static_cast<std::size_t>(a)] <= enter_[static_cast<std::size_t>(b)]
            && leave_[static_cast<std::size_t>(b)] <= leave_[static_cast<std::size_t>(a)];
    }

    int enter_time(int v) const { return enter_[static_cast<std::size_t>(v)]; }

private:
    int root_ = 0;
    std::vector<int> parent_;
    std::vector<int> push_rank_;
    std::vector<int> deletion_rank_;
    std::vector<int> nodes_;
    std::vector<std::vector<int>> children_;
    std::vector<int> enter_;
    std::vector<int> leave_;
};

/// m(N): the members of N with no proper ancestor in N. Throws
/// PreconditionError for an empty set or a member outside the tree.
VertexSet minimal_nodes(const DomTree& t, const VertexSet& nset);

/// R(N): the member of m(N) that left the stack first.
int set_root(const DomTree& t, const VertexSet& nset);

/// r(v) = R(N[v] ∩ T).
int vertex_root(const Graph& g, const DomTree& t, int v);

/// r(v) for every vertex of g.
std::vector<int> vertex_roots(const Graph& g, const DomTree& t);

/// One node descends from the other. Throws PreconditionError for non-members.
bool related(const DomTree& t, int a, int b);

} // namespace ehh
