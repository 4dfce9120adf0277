#include "ehh/splitter.hpp"

#include "ehh/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace ehh {

WeightedTree::WeightedTree(std::vector<int> parent, std::vector<std::int64_t> weight, std::vector<int> label)
    : parent_(std::move(parent))
    , weight_(std::move(weight))
    , label_(std::move(label))
{
    const int m = size();
    if (m == 0)
        throw ParameterError("weighted tree needs at least one node");
    if (weight_.size() != parent_.size())
        throw ParameterError("weight list length differs from node count");
    if (label_.empty()) {
        label_.resize(parent_.size());
        for (int i = 0; i < m; ++i)
            label_[static_cast<std::size_t>(i)] = i;
    } else if (label_.size() != parent_.size()) {
        throw ParameterError("label list length differs from node count");
    }
    children_.assign(parent_.size(), {});
    for (int v = 0; v < m; ++v) {
        int p = parent_[static_cast<std::size_t>(v)];
        if (p < 0 || p >= m)
            throw ParameterError("parent of node " + std::to_string(v) + " out of range");
        if (weight_[static_cast<std::size_t>(v)] < 0)
            throw ParameterError("negative weight at node " + std::to_string(v));
        total_ += weight_[static_cast<std::size_t>(v)];
        if (p == v) {
            if (root_ >= 0)
                throw ParameterError("several roots");
            root_ = v;
        } else {
            children_[static_cast<std::size_t>(p)].push_back(v);
        }
    }
    if (root_ < 0)
        throw ParameterError("no root (parent[v] == v)");

    enter_.assign(parent_.size(), -1);
    leave_.assign(parent_.size(), -1);
    int clock = 0;
    std::vector<std::pair<int, std::size_t>> walk{{root_, 0}};
    enter_[static_cast<std::size_t>(root_)] = clock++;
    top_down_.push_back(root_);
    while (!walk.empty()) {
        auto& [v, next] = walk.back();
        const auto& kids = children_[static_cast<std::size_t>(v)];
        if (next < kids.size()) {
            int c = kids[next++];
            enter_[static_cast<std::size_t>(c)] = clock++;
            top_down_.push_back(c);
            walk.emplace_back(c, 0);
        } else {
            leave_[static_cast<std::size_t>(v)] = clock++;
            walk.pop_back();
        }
    }
    if (static_cast<int>(top_down_.size()) != m)
        throw ParameterError("parent map contains a cycle");
}

std::vector<std::int64_t> WeightedTree::subtree_weights() const
{
    std::vector<std::int64_t> sub = weight_;
    for (auto it = top_down_.rbegin(); it != top_down_.rend(); ++it)
        if (*it != root_)
            sub[static_cast<std::size_t>(parent(*it))] += sub[static_cast<std::size_t>(*it)];
    return sub;
}

std::vector<int> WeightedTree::subtree(int v) const
{
    std::vector<int> out{v};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int c : children(out[i]))
            out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::int64_t weight_of(const WeightedTree& wt, const std::vector<int>& nodes)
{
    std::int64_t w = 0;
    for (int v : nodes)
        w += wt.weight(v);
    return w;
}

bool quarter(std::int64_t part, std::int64_t total) { return 4 * part >= total; }

} // namespace

TreeSplit split(const WeightedTree& wt)
{
    const std::int64_t total = wt.total();
    if (total <= 0)
        throw ParameterError("cannot split a tree of total weight 0");
    const auto sub = wt.subtree_weights();

    // Descend into the heaviest child until a leaf.
    std::vector<int> path{wt.root()};
    std::vector<char> on_path(static_cast<std::size_t>(wt.size()), 0);
    on_path[static_cast<std::size_t>(wt.root())] = 1;
    while (!wt.children(path.back()).empty()) {
        int best = -1;
        for (int c : wt.children(path.back())) {
            if (best < 0 || sub[static_cast<std::size_t>(c)] > sub[static_cast<std::size_t>(best)]
                || (sub[static_cast<std::size_t>(c)] == sub[static_cast<std::size_t>(best)] && wt.label(c) < wt.label(best)))
                best = c;
        }
        path.push_back(best);
        on_path[static_cast<std::size_t>(best)] = 1;
    }

    TreeSplit out;
    out.total = total;
    const std::int64_t path_weight = weight_of(wt, path);
    if (quarter(path_weight, total)) {
        out.rule = 1;
        out.result = RootPath{std::move(path), path_weight};
        return out;
    }

    // Components of T - P are the subtrees hanging off path nodes; grouped in node order.
    std::vector<int> hanging;
    for (int x : path)
        for (int c : wt.children(x))
            if (!on_path[static_cast<std::size_t>(c)])
                hanging.push_back(c);
    std::sort(hanging.begin(), hanging.end());

    for (int z : hanging) {
        if (!quarter(sub[static_cast<std::size_t>(z)], total))
            continue;
        // z was passed over at its father x, so x's path child is at least as heavy.
        const int x = wt.parent(z);
        int path_child = -1;
        for (int c : wt.children(x))
            if (on_path[static_cast<std::size_t>(c)])
                path_child = c;
        UnrelatedPair pair;
        pair.a = wt.subtree(z);
        pair.b = wt.subtree(path_child);
        pair.weight_a = sub[static_cast<std::size_t>(z)];
        pair.weight_b = sub[static_cast<std::size_t>(path_child)];
        out.rule = 2;
        out.result = std::move(pair);
        auto chk = check_split(wt, out);
        if (!chk.ok)
            throw VerificationFailure("split/rule-2", chk.reason);
        return out;
    }

    UnrelatedPair pair;
    std::size_t i = 0;
    for (; i < hanging.size() && !quarter(pair.weight_a, total); ++i) {
        auto nodes = wt.subtree(hanging[i]);
        pair.a.insert(pair.a.end(), nodes.begin(), nodes.end());
        pair.weight_a += sub[static_cast<std::size_t>(hanging[i])];
    }
    for (; i < hanging.size(); ++i) {
        auto nodes = wt.subtree(hanging[i]);
        pair.b.insert(pair.b.end(), nodes.begin(), nodes.end());
        pair.weight_b += sub[static_cast<std::size_t>(hanging[i])];
    }
    std::sort(pair.a.begin(), pair.a.end());
    std::sort(pair.b.begin(), pair.b.end());
    out.rule = 3;
    out.result = std::move(pair);
    auto chk = check_split(wt, out);
    if (!chk.ok)
        throw VerificationFailure("split/rule-3", chk.reason);
    return out;
}

SplitCheck check_split(const WeightedTree& wt, const TreeSplit& s)
{
    auto fail = [](std::string why) { return SplitCheck{false, std::move(why)}; };
    if (s.total != wt.total())
        return fail("recorded total differs from the tree's weight");
    auto in_range = [&](int v) { return v >= 0 && v < wt.size(); };

    if (const auto* rp = std::get_if<RootPath>(&s.result)) {
        if (rp->path.empty() || rp->path.front() != wt.root())
            return fail("path does not start at the root");
        for (std::size_t i = 0; i < rp->path.size(); ++i) {
            if (!in_range(rp->path[i]))
                return fail("path node out of range");
            if (i > 0 && (rp->path[i] == wt.root() || wt.parent(rp->path[i]) != rp->path[i - 1]))
                return fail("path leaves the tree edges");
        }
        std::int64_t w = weight_of(wt, rp->path);
        if (w != rp->weight)
            return fail("recorded path weight is wrong");
        if (!quarter(w, wt.total()))
            return fail("path weight below a quarter");
        return {true, {}};
    }

    const auto& up = std::get<UnrelatedPair>(s.result);
    if (up.a.empty() || up.b.empty())
        return fail("empty side");
    for (int v : up.a)
        if (!in_range(v))
            return fail("node out of range");
    for (int v : up.b)
        if (!in_range(v))
            return fail("node out of range");
    std::int64_t wa = weight_of(wt, up.a), wb = weight_of(wt, up.b);
    if (wa != up.weight_a || wb != up.weight_b)
        return fail("recorded side weight is wrong");
    if (!quarter(wa, wt.total()) || !quarter(wb, wt.total()))
        return fail("side weight below a quarter");
    for (int a : up.a)
        for (int b : up.b)
            if (wt.related(a, b))
                return fail("nodes " + std::to_string(a) + " and " + std::to_string(b) + " are related");
    return {true, {}};
}

Rational brute_force_split_optimum(const WeightedTree& wt)
{
    if (wt.size() > kSplitOptimumNodes)
        throw RegimeError("split optimum enumeration is limited to " + std::to_string(kSplitOptimumNodes) + " nodes");
    if (wt.total() <= 0)
        throw ParameterError("cannot split a tree of total weight 0");

    std::int64_t best = 0;
    // Root paths.
    for (int v = 0; v < wt.size(); ++v) {
        std::int64_t w = 0;
        for (int u = v;; u = wt.parent(u)) {
            w += wt.weight(u);
            if (u == wt.root())
                break;
        }
        best = std::max(best, w);
    }

    // Unrelated pairs may be closed under descendants without losing weight,
    // so each side is a union of whole subtrees over one antichain. For each
    // node: give its whole subtree to A, to B, or leave it out and recurse.
    const auto sub = wt.subtree_weights();
    using Sums = std::set<std::pair<std::int64_t, std::int64_t>>;
    std::function<Sums(int)> options = [&](int v) {
        Sums acc{{0, 0}};
        for (int c : wt.children(v)) {
            Sums child = options(c), next;
            for (auto [a1, b1] : acc)
                for (auto [a2, b2] : child)
                    next.emplace(a1 + a2, b1 + b2);
            acc = std::move(next);
        }
        acc.emplace(sub[static_cast<std::size_t>(v)], 0);
        acc.emplace(0, sub[static_cast<std::size_t>(v)]);
        return acc;
    };
    for (auto [a, b] : options(wt.root()))
        best = std::max(best, std::min(a, b));
    return Rational(best, wt.total());
}

namespace {

std::string canonical_shape(const std::vector<std::vector<int>>& kids, int v)
{
    std::vector<std::string> parts;
    for (int c : kids[static_cast<std::size_t>(v)])
        parts.push_back(canonical_shape(kids, c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts)
        s += p;
    return s + ")";
}

} // namespace

std::vector<std::vector<int>> enumerate_rooted_trees(int nodes)
{
    if (nodes < 1 || nodes > 10)
        throw RegimeError("rooted tree enumeration supports 1..10 nodes");
    std::map<std::string, std::vector<int>> shapes;
    std::vector<int> parent(static_cast<std::size_t>(nodes), 0);
    std::function<void(int)> grow = [&](int i) {
        if (i == nodes) {
            std::vector<std::vector<int>> kids(static_cast<std::size_t>(nodes));
            for (int v = 1; v < nodes; ++v)
                kids[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(v);
            shapes.emplace(canonical_shape(kids, 0), parent);
            return;
        }
        for (int p = 0; p < i; ++p) {
            parent[static_cast<std::size_t>(i)] = p;
            grow(i + 1);
        }
    };
    grow(1);
    std::vector<std::vector<int>> out;
    for (auto& [key, par] : shapes)
        out.push_back(par);
    return out;
}

std::vector<ProbeRow> probe_split_constant(int max_nodes)
{
    std::vector<ProbeRow> rows;
    for (int m = 1; m <= max_nodes; ++m) {
        std::vector<Rational> optima;
        for (const auto& parent : enumerate_rooted_trees(m)) {
            WeightedTree wt(parent, std::vector<std::int64_t>(parent.size(), 1));
            optima.push_back(brute_force_split_optimum(wt));
        }
        std::sort(optima.begin(), optima.end());
        rows.push_back({m, static_cast<int>(optima.size()), optima.front(), optima[(optima.size() - 1) / 2]});
    }
    return rows;
}

} // namespace ehh
