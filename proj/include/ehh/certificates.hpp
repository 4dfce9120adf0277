#pragma once

#include "ehh/errors.hpp"
#include "ehh/graph.hpp"
#include "ehh/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace ehh {

enum class HoleKind { hole, antihole };

/// Cyclically ordered vertex list of an induced cycle (hole) or of an induced
/// cycle of the complement (anti-hole).
struct HoleWitness {
    std::vector<int> cycle;
    HoleKind kind = HoleKind::hole;

    int length() const { return static_cast<int>(cycle.size()); }
};

/// a-b-c-d with ab, bc, cd edges and ac, bd, ad non-edges.
struct P4Witness {
    std::array<int, 4> path{};
};

/// Raised whenever a construction runs into a hole that its input was
/// promised not to contain. The witness is always re-checkable.
class LongHoleFound : public PreconditionError {
public:
    explicit LongHoleFound(HoleWitness w)
        : PreconditionError("long hole of length " + std::to_string(w.length()) + " found")
        , witness_(std::move(w))
    {
    }

    const HoleWitness& witness() const { return witness_; }

private:
    HoleWitness witness_;
};

enum class PairKind { empty, complete };

/// Disjoint X, Y with no (empty) or all (complete) edges between them.
struct BipartitePair {
    PairKind kind = PairKind::empty;
    VertexSet x;
    VertexSet y;
    std::string provenance;

    int min_side() const { return std::min(x.size(), y.size()); }
};

enum class CertKind { clique, stable };

struct TraceStep {
    std::string stage;
    PairKind pair_kind = PairKind::empty;
    int level_size = 0;
    int x_size = 0;
    int y_size = 0;
};

struct EHConstants {
    int k = 0;
    Rational eps;
    Rational c_observed{1, 2};
    double c_prime = 1.0;
};

struct EHCertificate {
    CertKind kind = CertKind::stable;
    VertexSet vertices;
    int n = 0;
    int leaf_count = 0;
    std::vector<TraceStep> trace;
    EHConstants constants;

    int size() const { return vertices.size(); }
};

std::string to_string(HoleKind k);
std::string to_string(PairKind k);
std::string to_string(CertKind k);

} // namespace ehh
