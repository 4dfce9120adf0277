#include "ehh/domtree.hpp"

#include "ehh/errors.hpp"

#include <algorithm>

namespace ehh {

DomTree DomTree::build(const Graph& g, int root, const StackObserver& observe)
{
    const int n = g.order();
    if (root < 0 || root >= n)
        throw OutOfRangeError("root " + std::to_string(root) + " outside 0.." + std::to_string(n - 1));
    if (!is_connected(g))
        throw PreconditionError("dominating tree needs a connected graph; split into components first");

    DomTree t;
    t.root_ = root;
    t.parent_.assign(static_cast<std::size_t>(n), -1);
    t.push_rank_.assign(static_cast<std::size_t>(n), -1);
    t.deletion_rank_.assign(static_cast<std::size_t>(n), -1);
    t.children_.assign(static_cast<std::size_t>(n), {});

    Bitset in_tree(n);
    Bitset closed_nbhd(n); // N[T]
    Bitset on_stack(n);
    std::vector<int> stack;

    auto push = [&](int y, int father) {
        t.parent_[static_cast<std::size_t>(y)] = father;
        t.push_rank_[static_cast<std::size_t>(y)] = static_cast<int>(t.nodes_.size());
        t.nodes_.push_back(y);
        if (y != father)
            t.children_[static_cast<std::size_t>(father)].push_back(y);
        in_tree.set(y);
        closed_nbhd.set(y);
        closed_nbhd.unite(g.row(y));
        on_stack.set(y);
        stack.push_back(y);
    };

    push(root, root);
    int deleted = 0;
    while (!stack.empty()) {
        if (observe)
            observe(stack);
        const int x = stack.back();
        // Any eligible y is adjacent to x (x is its only stack neighbour), so
        // scanning N(x) in increasing order finds the smallest eligible id.
        int chosen = -1;
        for (int y : g.neighbors(x)) {
            if (in_tree.test(y))
                continue;
            if (!escapes(g.row(y), closed_nbhd.words()))
                continue; // not active
            if (count_and(g.row(y), on_stack.words()) != 1)
                continue;
            chosen = y;
            break;
        }
        if (chosen >= 0) {
            push(chosen, x);
        } else {
            stack.pop_back();
            on_stack.reset(x);
            t.deletion_rank_[static_cast<std::size_t>(x)] = deleted++;
        }
    }

    // Entry/exit labelling for descendance queries.
    t.enter_.assign(static_cast<std::size_t>(n), -1);
    t.leave_.assign(static_cast<std::size_t>(n), -1);
    int clock = 0;
    std::vector<std::pair<int, std::size_t>> walk{{root, 0}};
    t.enter_[static_cast<std::size_t>(root)] = clock++;
    while (!walk.empty()) {
        auto& [v, next_child] = walk.back();
        const auto& kids = t.children_[static_cast<std::size_t>(v)];
        if (next_child < kids.size()) {
            int c = kids[next_child++];
            t.enter_[static_cast<std::size_t>(c)] = clock++;
            walk.emplace_back(c, 0);
        } else {
            t.leave_[static_cast<std::size_t>(v)] = clock++;
            walk.pop_back();
        }
    }
    return t;
}

std::vector<int> DomTree::path_from_root(int v) const
{
    std::vector<int> out;
    while (true) {
        out.push_back(v);
        if (v == root_)
            break;
        v = parent(v);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

void require_members(const DomTree& t, const VertexSet& nset)
{
    if (nset.empty())
        throw PreconditionError("node set must be nonempty");
    for (int v : nset)
        if (!t.contains(v))
            throw PreconditionError("vertex " + std::to_string(v) + " is not a tree node");
}

} // namespace

VertexSet minimal_nodes(const DomTree& t, const VertexSet& nset)
{
    require_members(t, nset);
    std::vector<int> byEntry = nset.members();
    std::sort(byEntry.begin(), byEntry.end(), [&](int a, int b) { return t.enter_time(a) < t.enter_time(b); });
    // Ancestors precede descendants in entry order and the chosen intervals
    // are laminar, so only the last chosen node can contain the next one.
    std::vector<int> minimal;
    for (int v : byEntry)
        if (minimal.empty() || !t.is_ancestor(minimal.back(), v))
            minimal.push_back(v);
    return VertexSet(std::move(minimal), t.host_order());
}

int set_root(const DomTree& t, const VertexSet& nset)
{
    VertexSet m = minimal_nodes(t, nset);
    return *std::min_element(
        m.begin(), m.end(), [&](int a, int b) { return t.deletion_rank(a) < t.deletion_rank(b); });
}

namespace {

std::vector<int> closed_tree_nbhd(const Graph& g, const DomTree& t, int v)
{
    std::vector<int> hits;
    if (t.contains(v))
        hits.push_back(v);
    for (int u : g.neighbors(v))
        if (t.contains(u))
            hits.push_back(u);
    if (hits.empty())
        throw PreconditionError("vertex " + std::to_string(v) + " is not dominated by the tree");
    return hits;
}

} // namespace

int vertex_root(const Graph& g, const DomTree& t, int v)
{
    if (v < 0 || v >= g.order())
        throw OutOfRangeError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
    return set_root(t, VertexSet(closed_tree_nbhd(g, t, v), t.host_order()));
}

std::vector<int> vertex_roots(const Graph& g, const DomTree& t)
{
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        out[static_cast<std::size_t>(v)] = set_root(t, VertexSet(closed_tree_nbhd(g, t, v), t.host_order()));
    return out;
}

bool related(const DomTree& t, int a, int b)
{
    if (!t.contains(a) || !t.contains(b))
        throw PreconditionError("related() needs two tree nodes");
    return t.is_ancestor(a, b) || t.is_ancestor(b, a);
}

} // namespace ehh
