#include "fixtures.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace ehh::testing {

Graph path_graph(int n)
{
    GraphBuilder b(n, "P" + std::to_string(n));
    for (int i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph cycle_graph(int n)
{
    GraphBuilder b(n, "C" + std::to_string(n));
    for (int i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph complete_graph(int n)
{
    GraphBuilder b(n, "K" + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_edge(i, j);
    return std::move(b).build();
}

Graph edgeless_graph(int n) { return GraphBuilder(n).build(); }

Graph star_graph(int leaves)
{
    GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        b.add_edge(0, i);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    GraphBuilder out(a.order() + b.order());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(u + a.order(), v + a.order());
    return std::move(out).build();
}

Graph petersen_graph()
{
    GraphBuilder b(10, "petersen");
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

Graph branching_example_graph()
{
    using namespace bx;
    GraphBuilder b(9, "branching_example");
    const int edges[][2] = {{r, u}, {r, x2}, {r, w}, {u, x2}, {u, y1}, {u, y2}, {y2, z1}, {u, v}, {z1, y1},
        {z1, v}, {w, y4}, {v, w}};
    for (const auto& e : edges)
        b.add_edge(e[0], e[1]);
    return std::move(b).build();
}

Graph random_graph(int n, const Rational& p, Rng& rng)
{
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p))
                b.add_edge(i, j);
    return std::move(b).build();
}

Graph random_connected_graph(int n, const Rational& p, Rng& rng)
{
    Graph g = random_graph(n, p, rng);
    auto comps = connected_components(g);
    if (comps.size() == 1)
        return g;
    GraphBuilder b(n);
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
        const auto& a = comps[i].members();
        const auto& c = comps[i + 1].members();
        b.add_edge(a[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(a.size()) - 1))],
            c[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(c.size()) - 1))]);
    }
    return std::move(b).build();
}

namespace {

// Subset `mask` induces a cycle iff it has >= 3 vertices, every vertex has
// exactly two neighbours inside, and it is connected.
bool induces_cycle(const Graph& g, std::uint32_t mask)
{
    const int size = std::popcount(mask);
    if (size < 3)
        return false;
    std::vector<std::uint32_t> nb(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        if (mask >> v & 1U)
            for (int u = 0; u < g.order(); ++u)
                if ((mask >> u & 1U) && g.adjacent(u, v))
                    nb[static_cast<std::size_t>(v)] |= 1U << u;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v & 1U) && std::popcount(nb[static_cast<std::size_t>(v)]) != 2)
            return false;
    std::uint32_t seen = mask & (~mask + 1);
    for (std::uint32_t frontier = seen; frontier;) {
        std::uint32_t next = 0;
        for (int v = 0; v < g.order(); ++v)
            if (frontier >> v & 1U)
                next |= nb[static_cast<std::size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == mask;
}

} // namespace

std::vector<int> naive_induced_cycle_lengths(const Graph& g)
{
    if (g.order() > 16)
        throw std::invalid_argument("naive cycle enumeration limited to 16 vertices");
    std::vector<int> lengths;
    for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask)
        if (std::popcount(mask) >= 4 && induces_cycle(g, mask))
            lengths.push_back(std::popcount(mask));
    return lengths;
}

bool naive_has_long_hole(const Graph& g, int k)
{
    auto lengths = naive_induced_cycle_lengths(g);
    return std::any_of(lengths.begin(), lengths.end(), [k](int l) { return l >= k; });
}

Rational naive_split_optimum(const WeightedTree& wt)
{
    const int m = wt.size();
    if (m > 10)
        throw std::invalid_argument("naive split optimum limited to 10 nodes");
    const std::int64_t total = wt.total();
    std::int64_t best = 0; // best min-side weight, in units of total
    for (int v = 0; v < m; ++v) {
        std::int64_t w = 0;
        for (int x = v;; x = wt.parent(x)) {
            w += wt.weight(x);
            if (x == wt.root())
                break;
        }
        best = std::max(best, w);
    }
    std::vector<int> label(static_cast<std::size_t>(m), 0);
    std::int64_t combos = 1;
    for (int i = 0; i < m; ++i)
        combos *= 3;
    for (std::int64_t c = 0; c < combos; ++c) {
        std::int64_t rest = c;
        for (int i = 0; i < m; ++i) {
            label[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        std::int64_t wa = 0, wb = 0;
        bool ok = true;
        bool has_a = false, has_b = false;
        for (int a = 0; a < m && ok; ++a) {
            if (label[static_cast<std::size_t>(a)] != 1)
                continue;
            has_a = true;
            wa += wt.weight(a);
            for (int b = 0; b < m; ++b)
                if (label[static_cast<std::size_t>(b)] == 2 && wt.related(a, b)) {
                    ok = false;
                    break;
                }
        }
        if (!ok)
            continue;
        for (int b = 0; b < m; ++b)
            if (label[static_cast<std::size_t>(b)] == 2) {
                has_b = true;
                wb += wt.weight(b);
            }
        if (has_a && has_b)
            best = std::max(best, std::min(wa, wb));
    }
    return Rational(best, total);
}

DensityOptimum naive_density_optimum(const Graph& g, const Rational& eps)
{
    const int n = g.order();
    if (n > 16)
        throw std::invalid_argument("naive density search limited to 16 vertices");
    DensityOptimum best;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const int s = std::popcount(mask);
        std::int64_t edges = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((mask >> u & 1U) && (mask >> v & 1U) && g.adjacent(u, v))
                    ++edges;
        const std::int64_t pairs = static_cast<std::int64_t>(s) * (s - 1) / 2;
        if (eps.bounds(edges, pairs))
            best.stable = std::max(best.stable, s);
        if (eps.bounds(pairs - edges, pairs))
            best.clique = std::max(best.clique, s);
    }
    return best;
}

std::pair<int, int> naive_omega_alpha(const Graph& g)
{
    const int n = g.order();
    if (n > 20)
        throw std::invalid_argument("naive clique search limited to 20 vertices");
    int omega = 0, alpha = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        bool clique = true, stable = true;
        for (int u = 0; u < n && (clique || stable); ++u)
            for (int v = u + 1; v < n; ++v)
                if ((mask >> u & 1U) && (mask >> v & 1U)) {
                    if (g.adjacent(u, v))
                        stable = false;
                    else
                        clique = false;
                }
        if (clique)
            omega = std::max(omega, std::popcount(mask));
        if (stable)
            alpha = std::max(alpha, std::popcount(mask));
    }
    return {omega, alpha};
}

namespace {

PathFixture relabel(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& path, Rng& rng)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    PathFixture f{std::move(b).build(), {}};
    for (int p : path)
        f.path.push_back(perm[static_cast<std::size_t>(p)]);
    return f;
}

} // namespace

PathFixture caterpillar(int spine, int leaves, Rng& rng)
{
    const int n = spine * (leaves + 1);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> path(static_cast<std::size_t>(spine));
    std::iota(path.begin(), path.end(), 0);
    for (int i = 0; i + 1 < spine; ++i)
        edges.emplace_back(i, i + 1);
    int next = spine;
    for (int i = 0; i < spine; ++i)
        for (int l = 0; l < leaves; ++l)
            edges.emplace_back(i, next++);
    return relabel(n, edges, path, rng);
}

PathFixture clique_ladder(int spine, int t, Rng& rng)
{
    const int n = spine + (spine - 1) * t;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> path(static_cast<std::size_t>(spine));
    std::iota(path.begin(), path.end(), 0);
    int next = spine;
    for (int i = 0; i + 1 < spine; ++i) {
        edges.emplace_back(i, i + 1);
        const int first = next;
        for (int c = 0; c < t; ++c, ++next) {
            edges.emplace_back(i, next);
            edges.emplace_back(i + 1, next);
            for (int d = first; d < next; ++d)
                edges.emplace_back(d, next);
        }
    }
    return relabel(n, edges, path, rng);
}

Graph bounded_degree_tree(int n, int max_degree, int window, Rng& rng)
{
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<int> open; // vertices with spare degree, oldest first
    if (n > 0)
        open.push_back(0);
    for (int v = 1; v < n; ++v) {
        const std::int64_t lo = std::max<std::int64_t>(0, static_cast<std::int64_t>(open.size()) - window);
        const auto at = static_cast<std::size_t>(rng.uniform(lo, static_cast<std::int64_t>(open.size()) - 1));
        const int p = open[at];
        edges.emplace_back(p, v);
        if (++degree[static_cast<std::size_t>(p)] == max_degree)
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(at));
        ++degree[static_cast<std::size_t>(v)];
        open.push_back(v);
    }
    return relabel(n, edges, {}, rng).g;
}

} // namespace ehh::testing
