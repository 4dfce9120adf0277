#include "ehh/report.hpp"

#include "ehh/errors.hpp"

namespace ehh {

Json to_json(const HoleWitness& w)
{
    return Json{{"kind", to_string(w.kind)}, {"length", w.length()}, {"cycle", w.cycle}};
}

Json to_json(const BipartitePair& p, int n)
{
    Json j;
    j["kind"] = to_string(p.kind);
    j["x"] = p.x.members();
    j["y"] = p.y.members();
    j["provenance"] = p.provenance;
    j["min_side"] = p.min_side();
    j["n"] = n;
    Rational c = n > 0 ? Rational(p.min_side(), n) : Rational(0);
    j["c_achieved"] = c.str();
    j["c_achieved_decimal"] = c.to_double();
    return j;
}

Json to_json(const DomTree& t)
{
    Json parents = Json::array(), push = Json::array(), del = Json::array();
    for (int v = 0; v < t.host_order(); ++v) {
        if (t.contains(v)) {
            parents.push_back(t.parent(v));
            push.push_back(t.push_rank(v));
            del.push_back(t.deletion_rank(v));
        } else {
            parents.push_back(nullptr);
            push.push_back(nullptr);
            del.push_back(nullptr);
        }
    }
    return Json{{"root", t.root()}, {"parents", parents}, {"push_order", push}, {"deletion_order", del}};
}

Json to_json(const TreeSplit& s)
{
    Json j;
    j["rule"] = s.rule;
    j["total"] = s.total;
    if (const auto* rp = std::get_if<RootPath>(&s.result)) {
        j["kind"] = "root_path";
        j["path"] = rp->path;
        j["weight"] = rp->weight;
    } else {
        const auto& up = std::get<UnrelatedPair>(s.result);
        j["kind"] = "unrelated_pair";
        j["a"] = up.a;
        j["b"] = up.b;
        j["weight_a"] = up.weight_a;
        j["weight_b"] = up.weight_b;
    }
    return j;
}

Json to_json(const EHCertificate& c)
{
    Json trace = Json::array();
    for (const auto& st : c.trace)
        trace.push_back(Json{{"stage", st.stage}, {"pair_kind", to_string(st.pair_kind)},
            {"sizes", {st.level_size, st.x_size, st.y_size}}});
    Json j;
    j["kind"] = to_string(c.kind);
    j["vertices"] = c.vertices.members();
    j["size"] = c.size();
    j["n"] = c.n;
    j["k"] = c.constants.k;
    j["eps"] = c.constants.eps.str();
    j["c_observed"] = c.constants.c_observed.str();
    j["c_prime"] = c.constants.c_prime;
    j["leaf_count"] = c.leaf_count;
    j["trace"] = trace;
    return j;
}

namespace {

std::vector<int> ids(const Json& j, const char* key, int n)
{
    if (!j.contains(key) || !j[key].is_array())
        throw ParameterError(std::string("certificate lacks array '") + key + "'");
    std::vector<int> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            throw ParameterError(std::string("non-integer id in '") + key + "'");
        int id = v.get<int>();
        if (id < 0 || id >= n)
            throw OutOfRangeError("certificate vertex " + std::to_string(id) + " outside the graph");
        out.push_back(id);
    }
    return out;
}

} // namespace

ParsedCertificate parse_certificate(const Json& j, int n)
{
    // Wrapped witnesses: the long-hole error report and check-class output.
    if (j.is_object() && !j.contains("kind")) {
        for (const char* key : {"witness", "hole", "antihole"})
            if (j.contains(key) && j[key].is_object())
                return parse_certificate(j[key], n);
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParameterError("certificate must be an object with a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    ParsedCertificate out;
    if (kind == "hole" || kind == "antihole") {
        out.type = CertificateType::hole;
        out.hole.kind = kind == "hole" ? HoleKind::hole : HoleKind::antihole;
        out.hole.cycle = ids(j, "cycle", n);
    } else if (kind == "empty" || kind == "complete") {
        out.type = CertificateType::pair;
        out.pair.kind = kind == "empty" ? PairKind::empty : PairKind::complete;
        out.pair.x = VertexSet(ids(j, "x", n), n);
        out.pair.y = VertexSet(ids(j, "y", n), n);
    } else if (kind == "clique" || kind == "stable") {
        out.type = CertificateType::clique_stable;
        out.kind = kind == "clique" ? CertKind::clique : CertKind::stable;
        out.vertices = ids(j, "vertices", n);
    } else {
        throw ParameterError("unknown certificate kind '" + kind + "'");
    }
    return out;
}

} // namespace ehh
