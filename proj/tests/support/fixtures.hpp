#pragma once
// Independent oracles and fixed graphs for the test suites. Nothing here calls
// into the library's own search code, so agreement is a genuine cross-check.

#include "ehh/generators.hpp"
#include "ehh/graph.hpp"
#include "ehh/splitter.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ehh::testing {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph petersen_graph();

/// Nine-vertex graph whose stack run branches twice: r=0, u=1, w=2, x2=3, y1=4, y2=5, v=6, z1=7, y4=8.
Graph branching_example_graph();
namespace bx {
inline constexpr int r = 0, u = 1, w = 2, x2 = 3, y1 = 4, y2 = 5, v = 6, z1 = 7, y4 = 8;
}

/// G(n, p) made connected by joining consecutive components with one random edge.
Graph random_connected_graph(int n, const Rational& p, Rng& rng);
Graph random_graph(int n, const Rational& p, Rng& rng);

/// Does g contain an induced cycle of length >= k? Plain subset enumeration, n <= 16.
bool naive_has_long_hole(const Graph& g, int k);
/// Lengths of all induced cycles (length >= 4), one entry per vertex subset.
std::vector<int> naive_induced_cycle_lengths(const Graph& g);

/// Best split value over all (A, B, unused) node labellings and all root paths,
/// as num/den of the total weight. 3^m enumeration, m <= 10.
Rational naive_split_optimum(const WeightedTree& wt);

/// Largest eps-stable set and eps-clique sizes by full subset enumeration, n <= 16.
struct DensityOptimum {
    int stable = 0;
    int clique = 0;
};
DensityOptimum naive_density_optimum(const Graph& g, const Rational& eps);

/// Exhaustive maximum clique / stable set by subset enumeration, n <= 20.
std::pair<int, int> naive_omega_alpha(const Graph& g);

/// Path-dominated fixtures. Both families are chordal (hence long-hole free), keep
/// every degree at most eps * n and are dominated by the induced path returned
/// in `path`.
struct PathFixture {
    Graph g;
    std::vector<int> path;
};
/// Spine of s vertices, each carrying `leaves` pendant vertices. Labels are shuffled.
PathFixture caterpillar(int spine, int leaves, Rng& rng);
/// Spine of s vertices; between spine vertices i and i+1 hangs a clique of
/// size t joined to both. Labels are shuffled.
PathFixture clique_ladder(int spine, int t, Rng& rng);

/// Random tree with every degree at most max_degree (>= 2); each new vertex
/// attaches to one of the `window` most recent vertices with spare degree.
Graph bounded_degree_tree(int n, int max_degree, int window, Rng& rng);

} // namespace ehh::testing
