#include "ehh/oracle.hpp"

#include "ehh/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace ehh {

std::string to_string(HoleKind k) { return k == HoleKind::hole ? "hole" : "antihole"; }
std::string to_string(PairKind k) { return k == PairKind::empty ? "empty" : "complete"; }
std::string to_string(CertKind k) { return k == CertKind::clique ? "clique" : "stable"; }

namespace {

// Enumerates induced paths s = p0, p1, ..., pm with every vertex larger than s.
// A cycle is reported when a candidate closes back to s; requiring the closing
// vertex to exceed p1 makes every cycle appear once.
class HoleSearcher {
public:
    HoleSearcher(const Graph& g, int k, std::uint64_t budget)
        : g_(g)
        , k_(k)
        , budget_(budget)
    {
    }

    HoleSearch run()
    {
        const int n = g_.order();
        for (int s = 0; s < n && !found_ && !out_of_budget_; ++s) {
            start_ = s;
            above_.emplace(n);
            for (int v = s + 1; v < n; ++v)
                above_->set(v);
            for (int p1 : g_.neighbors(s)) {
                if (p1 <= s)
                    continue;
                path_ = {s, p1};
                Bitset forbidden(n);
                extend(forbidden);
                if (found_ || out_of_budget_)
                    break;
            }
        }
        HoleSearch out;
        if (found_) {
            out.status = SearchStatus::found;
            out.witness = HoleWitness{path_, HoleKind::hole};
        } else {
            out.status = out_of_budget_ ? SearchStatus::unknown : SearchStatus::none;
        }
        return out;
    }

private:
    // `forbidden` is the union of closed neighbourhoods of interior vertices p1..p(m-1).
    void extend(const Bitset& forbidden)
    {
        const int last = path_.back();
        Bitset cand(g_.order());
        cand.unite(g_.row(last));
        cand.intersect(above_->words());
        cand.subtract(forbidden.words());

        Bitset next_forbidden = forbidden;
        next_forbidden.unite(g_.row(last));
        next_forbidden.set(last);
        const bool closable = can_close(next_forbidden);

        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            if (budget_ && ++expansions_ > budget_) {
                out_of_budget_ = true;
                return;
            }
            if (g_.adjacent(v, start_)) {
                if (path_.size() >= 3 && v > path_[1] && static_cast<int>(path_.size()) + 1 >= k_) {
                    path_.push_back(v);
                    found_ = true;
                    return;
                }
                continue;
            }
            if (!closable)
                continue;
            path_.push_back(v);
            extend(next_forbidden);
            if (found_ || out_of_budget_)
                return;
            path_.pop_back();
        }
    }

    // Some neighbour of the start above p1 must stay usable as the closing vertex.
    bool can_close(const Bitset& forbidden) const
    {
        auto srow = g_.row(start_);
        auto fw = forbidden.words();
        auto aw = above_->words();
        const int p1 = path_[1];
        for (std::size_t i = 0; i < srow.size(); ++i) {
            Word w = srow[i] & aw[i] & ~fw[i];
            while (w) {
                int u = static_cast<int>(i) * kWordBits + std::countr_zero(w);
                if (u > p1)
                    return true;
                w &= w - 1;
            }
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    int start_ = 0;
    std::optional<Bitset> above_;
    std::vector<int> path_;
    bool found_ = false;
    bool out_of_budget_ = false;
};

void check_k(int k)
{
    if (k < 4)
        throw ParameterError("hole length bound k must be at least 4, got " + std::to_string(k));
}

} // namespace

HoleSearch find_long_hole(const Graph& g, int k, const HoleSearchOptions& opts)
{
    check_k(k);
    std::uint64_t budget = g.order() > kExhaustiveHoleOrder ? opts.expansion_budget : 0;
    return HoleSearcher(g, k, budget).run();
}

HoleSearch find_long_antihole(const Graph& g, int k, const HoleSearchOptions& opts)
{
    check_k(k);
    HoleSearch r = find_long_hole(complement(g), k, opts);
    if (r.witness)
        r.witness->kind = HoleKind::antihole;
    return r;
}

std::optional<P4Witness> find_p4(const Graph& g)
{
    const int n = g.order();
    for (int b = 0; b < n; ++b) {
        for (int c : g.neighbors(b)) {
            // a in N(b) \ N[c], d in N(c) \ N[b], a and d non-adjacent
            Bitset ends_a(n), ends_d(n);
            ends_a.unite(g.row(b));
            ends_a.subtract(g.row(c));
            ends_a.reset(c);
            ends_d.unite(g.row(c));
            ends_d.subtract(g.row(b));
            ends_d.reset(b);
            if (!ends_a.any() || !ends_d.any())
                continue;
            for (int a = ends_a.next(0); a >= 0; a = ends_a.next(a + 1)) {
                auto ra = g.row(a);
                auto dw = ends_d.words();
                for (std::size_t i = 0; i < dw.size(); ++i) {
                    Word w = dw[i] & ~ra[i];
                    if (w) {
                        int d = static_cast<int>(i) * kWordBits + std::countr_zero(w);
                        return P4Witness{{a, b, c, d}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_valid_hole(const Graph& g, const HoleWitness& w)
{
    const int len = w.length();
    if (len < 4)
        return false;
    std::vector<int> sorted = w.cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int v : w.cycle)
        if (v < 0 || v >= g.order())
            return false;
    const bool want_edge = w.kind == HoleKind::hole;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            bool edge = g.adjacent(w.cycle[static_cast<std::size_t>(i)], w.cycle[static_cast<std::size_t>(j)]);
            if (edge != (consecutive == want_edge))
                return false;
        }
    return true;
}

bool is_valid_p4(const Graph& g, const P4Witness& w)
{
    auto [a, b, c, d] = w.path;
    for (int v : w.path)
        if (v < 0 || v >= g.order())
            return false;
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        return false;
    return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) && !g.adjacent(b, d)
        && !g.adjacent(a, d);
}

PairCheck verify_pair(const Graph& g, const BipartitePair& pair)
{
    PairCheck out;
    if (pair.x.host_order() != g.order() || pair.y.host_order() != g.order()) {
        out.reason = "pair sides belong to a graph of another order";
        return out;
    }
    for (int v : pair.x)
        if (pair.y.contains(v))
            throw OverlapError("vertex " + std::to_string(v) + " lies on both sides of the pair");
    if (pair.x.empty() || pair.y.empty()) {
        out.reason = "empty side";
        return out;
    }
    Bitset ymask = pair.y.bits();
    for (int x : pair.x) {
        auto r = g.row(x);
        auto yw = ymask.words();
        for (std::size_t i = 0; i < yw.size(); ++i) {
            Word bad = pair.kind == PairKind::complete ? (yw[i] & ~r[i]) : (yw[i] & r[i]);
            if (bad) {
                int y = static_cast<int>(i) * kWordBits + std::countr_zero(bad);
                out.violation = std::make_pair(x, y);
                out.reason = pair.kind == PairKind::complete ? "missing cross edge" : "unexpected cross edge";
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

bool verify_clique_or_stable(const Graph& g, CertKind kind, const VertexSet& vertices)
{
    if (vertices.host_order() != g.order())
        return false;
    for (int i = 0; i < vertices.size(); ++i)
        for (int j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]) != (kind == CertKind::clique))
                return false;
    return true;
}

bool verify_clique_or_stable(const Graph& g, const EHCertificate& cert)
{
    return verify_clique_or_stable(g, cert.kind, cert.vertices);
}

namespace {

class MaxClique {
public:
    explicit MaxClique(std::vector<std::uint32_t> adj)
        : adj_(std::move(adj))
    {
    }

    std::vector<int> solve()
    {
        std::uint32_t all = adj_.empty() ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << adj_.size()) - 1);
        expand(all);
        return best_;
    }

private:
    void expand(std::uint32_t cand)
    {
        if (cand == 0) {
            if (current_.size() > best_.size())
                best_ = current_;
            return;
        }
        while (cand) {
            if (current_.size() + static_cast<std::size_t>(std::popcount(cand)) <= best_.size())
                return;
            int v = std::countr_zero(cand);
            current_.push_back(v);
            expand(cand & adj_[static_cast<std::size_t>(v)]);
            current_.pop_back();
            cand &= cand - 1;
        }
    }

    std::vector<std::uint32_t> adj_;
    std::vector<int> current_;
    std::vector<int> best_;
};

std::vector<std::uint32_t> masks(const Graph& g)
{
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
    return adj;
}

} // namespace

CliqueStableOptimum oracle_max_clique_stable(const Graph& g)
{
    if (g.order() > kCliqueOracleOrder)
        throw RegimeError("clique/stable oracle is limited to " + std::to_string(kCliqueOracleOrder)
            + " vertices, got " + std::to_string(g.order()));
    CliqueStableOptimum out;
    out.clique = MaxClique(masks(g)).solve();
    out.stable = MaxClique(masks(complement(g))).solve();
    out.omega = static_cast<int>(out.clique.size());
    out.alpha = static_cast<int>(out.stable.size());
    return out;
}

} // namespace ehh
