#pragma once

#include "ehh/bitset.hpp"
#include "ehh/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ehh {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with one adjacency bit row per
/// vertex. Immutable once built; use GraphBuilder to construct one.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int row_words() const { return stride_; }

    bool adjacent(int u, int v) const
    {
        return (rows_[static_cast<std::size_t>(u) * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
    }

    std::span<const Word> row(int v) const
    {
        return {rows_.data() + static_cast<std::size_t>(v) * stride_, static_cast<std::size_t>(stride_)};
    }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::size_t edge_count() const;

    /// All edges (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    const std::string& name() const { return name_; }

    /// Structural equality; the name is ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;
    friend Graph complement(const Graph&);

    int n_ = 0;
    int stride_ = 0;
    std::vector<Word> rows_;
    std::string name_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n, std::string name = {});

    /// Throws OutOfRangeError for bad ids and ParameterError for self-loops.
    /// Adding an existing edge again is a no-op.
    GraphBuilder& add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    Graph build() &&;

private:
    Graph g_;
};

Graph make_graph(int n, std::span<const Edge> edges, std::string name = {});

/// Sorted, duplicate-free set of vertex ids of a host graph with host_order vertices.
class VertexSet {
public:
    VertexSet() = default;

    /// Throws OutOfRangeError for members outside 0..host_order-1 and
    /// ParameterError for duplicates.
    VertexSet(std::vector<int> members, int host_order);

    static VertexSet all(int host_order);
    static VertexSet from_bits(const Bitset& bits);

    int host_order() const { return host_n_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;

    const std::vector<int>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    int operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

    Bitset bits() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> members_;
    int host_n_ = 0;
};

/// Induced subgraph relabelled to 0..|s|-1, with the mapping in both directions.
struct Subgraph {
    Graph graph;
    std::vector<int> to_host;   // local id -> host id
    std::vector<int> from_host; // host id -> local id, -1 if absent

    /// Maps a set of local ids back to host ids.
    VertexSet lift(const VertexSet& local) const;
    std::vector<int> lift(std::span<const int> local) const;
};

Graph complement(const Graph& g);
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Open neighbourhood N(X) (vertices at distance exactly one) or, with
/// closed = true, N(X) together with X.
VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed);

/// Components ordered by their smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct DegreeStats {
    int max_degree = 0;
    std::vector<int> degrees;
};

DegreeStats degree_stats(const Graph& g);

/// Max degree <= eps * n, compared exactly. eps must lie in (0, 1].
bool is_sparse(const Graph& g, const Rational& eps);

/// Number of edges of g with both endpoints in s.
std::int64_t internal_edges(const Graph& g, const VertexSet& s);

} // namespace ehh
