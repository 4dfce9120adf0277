#pragma once

#include "ehh/certificates.hpp"
#include "ehh/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace ehh {

/// Graphs up to this order are searched exhaustively for long holes.
inline constexpr int kExhaustiveHoleOrder = 40;
/// Largest order accepted by oracle_max_clique_stable.
inline constexpr int kCliqueOracleOrder = 25;

enum class SearchStatus { found, none, unknown };

struct HoleSearch {
    SearchStatus status = SearchStatus::none;
    std::optional<HoleWitness> witness;
};

struct HoleSearchOptions {
    /// Induced-path extensions allowed before giving up with `unknown`.
    /// Only enforced above kExhaustiveHoleOrder.
    std::uint64_t expansion_budget = 50'000'000;
};

/// Induced cycle of length >= k, if any. Throws ParameterError for k < 4.
HoleSearch find_long_hole(const Graph& g, int k, const HoleSearchOptions& opts = {});

/// Same search on the complement; the witness is tagged as an anti-hole.
HoleSearch find_long_antihole(const Graph& g, int k, const HoleSearchOptions& opts = {});

std::optional<P4Witness> find_p4(const Graph& g);

bool is_valid_hole(const Graph& g, const HoleWitness& w);
bool is_valid_p4(const Graph& g, const P4Witness& w);

struct PairCheck {
    bool ok = false;
    /// (x, y) cross pair breaking the claimed kind, when there is one.
    std::optional<std::pair<int, int>> violation;
    std::string reason;
};

/// Throws OverlapError when X and Y intersect.
PairCheck verify_pair(const Graph& g, const BipartitePair& pair);

bool verify_clique_or_stable(const Graph& g, CertKind kind, const VertexSet& vertices);
bool verify_clique_or_stable(const Graph& g, const EHCertificate& cert);

struct CliqueStableOptimum {
    int omega = 0;
    int alpha = 0;
    std::vector<int> clique;
    std::vector<int> stable;
};

/// Exact omega and alpha by branch and bound. Refuses (RegimeError) above
/// kCliqueOracleOrder vertices.
CliqueStableOptimum oracle_max_clique_stable(const Graph& g);

} // namespace ehh
