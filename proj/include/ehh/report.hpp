#pragma once

#include "ehh/certificates.hpp"
#include "ehh/domtree.hpp"
#include "ehh/splitter.hpp"

#include <json.hpp>

namespace ehh {

using Json = nlohmann::ordered_json;

Json to_json(const HoleWitness& w);
Json to_json(const BipartitePair& p, int n);
Json to_json(const DomTree& t);
Json to_json(const TreeSplit& s);
Json to_json(const EHCertificate& c);

/// Certificate kinds accepted by `verify`.
enum class CertificateType { hole, pair, clique_stable };

struct ParsedCertificate {
    CertificateType type = CertificateType::pair;
    HoleWitness hole;
    BipartitePair pair;
    CertKind kind = CertKind::stable;
    std::vector<int> vertices;
};

/// Reads any JSON produced by to_json(HoleWitness|BipartitePair|EHCertificate),
/// also when wrapped as {"witness": ...} or check-class output.
/// Vertex ids are checked against n. Throws ParameterError on unknown shapes.
ParsedCertificate parse_certificate(const Json& j, int n);

} // namespace ehh
