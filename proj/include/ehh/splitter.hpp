#pragma once

#include "ehh/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ehh {

/// Rooted tree on nodes 0..m-1 with nonnegative integer weights. Node indices
/// double as the grouping order for hanging components; `label` breaks ties
/// between equally heavy children (smallest label wins).
class WeightedTree {
public:
    /// parent[root] == root for exactly one node. Throws ParameterError on
    /// cycles, several roots, negative weights or mismatched lengths.
    WeightedTree(std::vector<int> parent, std::vector<std::int64_t> weight, std::vector<int> label = {});

    int size() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    std::int64_t weight(int v) const { return weight_[static_cast<std::size_t>(v)]; }
    int label(int v) const { return label_[static_cast<std::size_t>(v)]; }
    std::int64_t total() const { return total_; }
    const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }

    /// Nodes with every parent before its children.
    const std::vector<int>& top_down() const { return top_down_; }

    bool is_ancestor(int a, int b) const
    {
        return enter_[static_cast<std::size_t>(a)] <= enter_[static_cast<std::size_t>(b)]
            && leave_[static_cast<std::size_t>(b)] <= leave_[static_cast<std::size_t>(a)];
    }
    bool related(int a, int b) const { return is_ancestor(a, b) || is_ancestor(b, a); }

    std::vector<std::int64_t> subtree_weights() const;
    std::vector<int> subtree(int v) const;

private:
    std::vector<int> parent_;
    std::vector<std::int64_t> weight_;
    std::vector<int> label_;
    std::vector<std::vector<int>> children_;
    std::vector<int> top_down_;
    std::vector<int> enter_;
    std::vector<int> leave_;
    std::int64_t total_ = 0;
    int root_ = -1;
};

struct RootPath {
    std::vector<int> path;
    std::int64_t weight = 0;
};

struct UnrelatedPair {
    std::vector<int> a;
    std::vector<int> b;
    std::int64_t weight_a = 0;
    std::int64_t weight_b = 0;
};

/// Either a root path carrying a quarter of the weight, or two unrelated node
/// sets carrying a quarter each. `rule` records which branch produced it:
/// 1 heavy path, 2 one heavy hanging subtree, 3 grouped hanging subtrees.
struct TreeSplit {
    std::variant<RootPath, UnrelatedPair> result;
    std::int64_t total = 0;
    int rule = 0;

    bool is_path() const { return std::holds_alternative<RootPath>(result); }
};

/// Always succeeds for total weight > 0; throws ParameterError for W == 0.
TreeSplit split(const WeightedTree& wt);

struct SplitCheck {
    bool ok = false;
    std::string reason;
};

/// Re-derives every TreeSplit invariant from the tree itself.
SplitCheck check_split(const WeightedTree& wt, const TreeSplit& s);

inline constexpr int kSplitOptimumNodes = 12;

/// Best min-side weight fraction over all root paths and all unrelated pairs,
/// found by enumeration. Refuses trees above kSplitOptimumNodes nodes.
Rational brute_force_split_optimum(const WeightedTree& wt);

/// Every unlabelled rooted tree with exactly `nodes` nodes, as parent arrays
/// (node 0 is the root, parent[i] < i). Limited to 10 nodes.
std::vector<std::vector<int>> enumerate_rooted_trees(int nodes);

struct ProbeRow {
    int nodes = 0;
    int shapes = 0;
    Rational min_optimum;
    Rational median_optimum; // lower median
};

/// Split optimum under uniform weights over all tree shapes with 1..max_nodes nodes.
std::vector<ProbeRow> probe_split_constant(int max_nodes);

} // namespace ehh
