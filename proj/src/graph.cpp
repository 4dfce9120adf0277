#include "ehh/graph.hpp"

#include "ehh/errors.hpp"

#include <algorithm>
#include <deque>

namespace ehh {

int Graph::degree(int v) const
{
    int d = 0;
    for (Word w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const
{
    std::vector<int> out;
    auto r = row(v);
    for (int wi = 0; wi < stride_; ++wi) {
        Word w = r[wi];
        while (w) {
            out.push_back(wi * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (Word w : rows_)
        twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(int n, std::string name)
{
    if (n < 0)
        throw ParameterError("negative vertex count");
    g_.n_ = n;
    g_.stride_ = words_for(n);
    g_.rows_.assign(static_cast<std::size_t>(n) * g_.stride_, 0);
    g_.name_ = std::move(name);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw OutOfRangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside 0.."
            + std::to_string(g_.n_ - 1));
    if (u == v)
        throw ParameterError("self-loop at vertex " + std::to_string(u));
    g_.rows_[static_cast<std::size_t>(u) * g_.stride_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    g_.rows_[static_cast<std::size_t>(v) * g_.stride_ + u / kWordBits] |= Word{1} << (u % kWordBits);
    return *this;
}

bool GraphBuilder::has_edge(int u, int v) const { return g_.adjacent(u, v); }

Graph GraphBuilder::build() && { return std::move(g_); }

Graph make_graph(int n, std::span<const Edge> edges, std::string name)
{
    GraphBuilder b(n, std::move(name));
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

VertexSet::VertexSet(std::vector<int> members, int host_order)
    : members_(std::move(members))
    , host_n_(host_order)
{
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        int v = members_[i];
        if (v < 0 || v >= host_n_)
            throw OutOfRangeError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(host_n_ - 1));
        if (i > 0 && members_[i - 1] == v)
            throw ParameterError("duplicate vertex " + std::to_string(v));
    }
}

VertexSet VertexSet::all(int host_order)
{
    VertexSet s;
    s.host_n_ = host_order;
    s.members_.resize(static_cast<std::size_t>(host_order));
    for (int i = 0; i < host_order; ++i)
        s.members_[static_cast<std::size_t>(i)] = i;
    return s;
}

VertexSet VertexSet::from_bits(const Bitset& bits)
{
    VertexSet s;
    s.host_n_ = bits.size();
    s.members_ = bits.members();
    return s;
}

bool VertexSet::contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Bitset VertexSet::bits() const
{
    Bitset b(host_n_);
    for (int v : members_)
        b.set(v);
    return b;
}

VertexSet Subgraph::lift(const VertexSet& local) const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(local.size()));
    for (int v : local)
        out.push_back(to_host[static_cast<std::size_t>(v)]);
    return VertexSet(std::move(out), static_cast<int>(from_host.size()));
}

std::vector<int> Subgraph::lift(std::span<const int> local) const
{
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local)
        out.push_back(to_host[static_cast<std::size_t>(v)]);
    return out;
}

Graph complement(const Graph& g)
{
    Graph c;
    c.n_ = g.n_;
    c.stride_ = g.stride_;
    c.rows_.resize(g.rows_.size());
    Word tail = (g.n_ % kWordBits) ? (Word{1} << (g.n_ % kWordBits)) - 1 : ~Word{0};
    for (int v = 0; v < g.n_; ++v) {
        for (int wi = 0; wi < g.stride_; ++wi) {
            std::size_t at = static_cast<std::size_t>(v) * g.stride_ + wi;
            Word w = ~g.rows_[at];
            if (wi == g.stride_ - 1)
                w &= tail;
            c.rows_[at] = w;
        }
        c.rows_[static_cast<std::size_t>(v) * g.stride_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }
    c.name_ = g.name_.empty() ? std::string{} : "co-" + g.name_;
    return c;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.host_order() != g.order())
        throw OutOfRangeError("vertex set belongs to a graph of another order");
    Subgraph sub;
    sub.to_host = s.members();
    sub.from_host.assign(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < s.size(); ++i)
        sub.from_host[static_cast<std::size_t>(s[i])] = i;
    GraphBuilder b(s.size());
    for (int i = 0; i < s.size(); ++i) {
        auto r = g.row(s[i]);
        for (int j = i + 1; j < s.size(); ++j) {
            int v = s[j];
            if ((r[v / kWordBits] >> (v % kWordBits)) & 1U)
                b.add_edge(i, j);
        }
    }
    sub.graph = std::move(b).build();
    return sub;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed)
{
    Bitset acc(g.order());
    for (int v : x)
        acc.unite(g.row(v));
    for (int v : x) {
        if (closed)
            acc.set(v);
        else
            acc.reset(v);
    }
    return VertexSet::from_bits(acc);
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int u : g.neighbors(comp[head]))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    comp.push_back(u);
                }
        out.emplace_back(std::move(comp), g.order());
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

DegreeStats degree_stats(const Graph& g)
{
    DegreeStats st;
    st.degrees.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        st.degrees[static_cast<std::size_t>(v)] = g.degree(v);
        st.max_degree = std::max(st.max_degree, st.degrees[static_cast<std::size_t>(v)]);
    }
    return st;
}

bool is_sparse(const Graph& g, const Rational& eps)
{
    if (eps <= Rational(0) || eps > Rational(1))
        throw ParameterError("sparsity coefficient must lie in (0, 1], got " + eps.str());
    return eps.bounds(degree_stats(g).max_degree, g.order());
}

std::int64_t internal_edges(const Graph& g, const VertexSet& s)
{
    Bitset mask = s.bits();
    std::int64_t twice = 0;
    for (int v : s)
        twice += count_and(g.row(v), mask.words());
    return twice / 2;
}

} // namespace ehh
