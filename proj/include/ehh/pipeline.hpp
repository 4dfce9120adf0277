#pragma once

#include "ehh/certificates.hpp"
#include "ehh/graph.hpp"
#include "ehh/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ehh {

/// 1 / (8 (k + 2)): keeps the inside-window loss (k + 2) * eps * n below n / 8.
Rational default_eps(int k);

/// Raised by assemble_components_pair on a connected graph.
class NotApplicable : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Either an empty pair made of whole components, or the component holding
/// at least 3n/4 vertices that the caller should continue with.
struct ComponentAssembly {
    std::optional<BipartitePair> pair;
    std::optional<VertexSet> recurse_into;
};

ComponentAssembly assemble_components_pair(const Graph& g);

/// Verified empty or complete pair for a graph with no long hole and no long
/// anti-hole. Several routes are tried (component assembly of g and of its
/// complement, then sparsification, degree cleaning, dominating tree and tree
/// splitting) and the pair with the largest smaller side is returned.
/// Throws LongHoleFound (ids of g) when the input turns out to contain a long
/// hole or anti-hole, PreconditionError for fewer than 2 vertices.
BipartitePair strong_pair(const Graph& g, int k, const Rational& eps);

enum class CotreeKind { leaf, disjoint_union, join };

/// Cograph construction tree over host vertex ids.
class Cotree {
public:
    struct Node {
        CotreeKind kind = CotreeKind::leaf;
        int vertex = -1;
        std::vector<int> children;
    };

    static Cotree leaf(int v);
    static Cotree combine(CotreeKind kind, std::vector<Cotree> parts);

    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

    /// Leaf vertices, sorted.
    std::vector<int> leaves() const;
    int leaf_count() const;

    /// Builds a cotree from raw nodes (used when reading certificates back).
    static Cotree from_nodes(std::vector<Node> nodes, int root);

private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

/// Exact cotree of a cograph induced on `vertices` (throws PreconditionError
/// when it meets an induced P4).
Cotree cotree_of_cograph(const Graph& g, const VertexSet& vertices);

/// First leaf pair whose adjacency in g disagrees with the cotree, if any.
/// Also reports malformed trees (repeated or out-of-range leaves) as a pair (-1, -1).
std::optional<std::pair<int, int>> cotree_mismatch(const Graph& g, const Cotree& t);

struct P4FreeExtraction {
    Cotree cotree;
    std::vector<TraceStep> trace;
};

P4FreeExtraction p4free_extract(const Graph& g, int k, const Rational& eps);

struct CographOptimum {
    int omega = 0;
    int alpha = 0;
    std::vector<int> clique;
    std::vector<int> stable;
};

/// Clique/stable dynamic programme over the cotree. Throws ParameterError for
/// malformed trees.
CographOptimum cograph_alpha_omega(const Cotree& t);

/// Smallest min(|X|, |Y|) / level size over the trace (1/2 for an empty trace).
Rational observed_ratio(const std::vector<TraceStep>& trace);

/// Exponent c' with c^c' = 1/2.
double exponent_for_ratio(const Rational& c);

EHCertificate eh_extract(const Graph& g, int k, const Rational& eps);

} // namespace ehh
