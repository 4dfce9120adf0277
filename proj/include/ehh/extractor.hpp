#pragma once

#include "ehh/certificates.hpp"
#include "ehh/graph.hpp"
#include "ehh/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ehh {

/// Off-path vertices relative to a window I of k consecutive path vertices:
/// `left` have all path neighbours before I, `right` all after I, `inside`
/// have a neighbour in I.
struct WindowClassification {
    std::vector<int> path;
    int window_start = 0;
    int window_length = 0;
    VertexSet left;
    VertexSet right;
    VertexSet inside;
};

/// Throws PreconditionError unless `path` is an induced, dominating path of g
/// and the window fits. Throws LongHoleFound (with witness) when an off-path
/// vertex sees both sides of I but not I, or a left vertex is adjacent to a
/// right vertex.
WindowClassification classify_window(const Graph& g, std::span<const int> path, int window_start, int k);

/// Lower bound on min(|X|, |Y|) promised by extract_empty_pair.
Rational empty_pair_guarantee(int n, int path_length, int k, const Rational& eps);

/// Empty pair in a graph dominated by an induced path. Sides are augmented
/// with the path vertices before and after the best window; when the path
/// covers half the graph, the two path halves are also tried.
/// Needs max degree <= eps * n (PreconditionError otherwise).
BipartitePair extract_empty_pair(const Graph& g, std::span<const int> path, int k, const Rational& eps);

enum class DensityKind { eps_stable, eps_clique };

struct SparsityOutcome {
    DensityKind kind = DensityKind::eps_stable;
    VertexSet set;
    Rational eps;
    /// Edges of S (eps_stable) or non-edges of S (eps_clique) over |S| choose 2.
    Rational density;
    std::string method;
};

/// Largest verified eps-stable set or eps-clique that exact search (n <= 18)
/// or greedy peeling finds. eps must lie in [0, 1).
SparsityOutcome sparsify_or_dense(const Graph& g, const Rational& eps);

inline constexpr int kExactDensityOrder = 18;

/// Drops members of an eps-stable set whose degree inside it reaches
/// 2 * eps * |s|. Checks that at least half survive and that the survivors
/// induce a graph of max degree below 2 * eps * |s| <= 4 * eps * |S'|.
VertexSet clean_degree(const Graph& g, const VertexSet& s, const Rational& eps);

struct CleanDegreeStats {
    std::uint64_t invocations = 0;
    std::uint64_t violations = 0;
};

/// Process-wide tally of clean_degree postcondition checks.
CleanDegreeStats clean_degree_stats();

/// True iff S spans at most eps * (|S| choose 2) edges.
bool is_eps_stable(const Graph& g, const VertexSet& s, const Rational& eps);

} // namespace ehh
