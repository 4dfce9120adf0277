#include "ehh/pipeline.hpp"

#include "ehh/domtree.hpp"
#include "ehh/errors.hpp"
#include "ehh/extractor.hpp"
#include "ehh/oracle.hpp"
#include "ehh/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace ehh {

Rational default_eps(int k) { return Rational(1, 8 * (k + 2)); }

ComponentAssembly assemble_components_pair(const Graph& g)
{
    auto comps = connected_components(g);
    if (comps.size() < 2)
        throw NotApplicable("graph is connected");
    const int n = g.order();
    ComponentAssembly out;
    auto largest = std::max_element(
        comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    if (4 * largest->size() >= 3 * n) {
        out.recurse_into = *largest;
        return out;
    }
    // Largest first into the lighter side: the sides differ by at most the
    // largest component, which is below 3n/4, so both reach n/4.
    std::stable_sort(
        comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<int> xs, ys;
    for (const auto& c : comps) {
        auto& side = xs.size() <= ys.size() ? xs : ys;
        side.insert(side.end(), c.begin(), c.end());
    }
    out.pair = BipartitePair{PairKind::empty, VertexSet(std::move(xs), n), VertexSet(std::move(ys), n), "components"};
    return out;
}

namespace {

PairKind flipped(PairKind k) { return k == PairKind::empty ? PairKind::complete : PairKind::empty; }

// Local ids -> host ids through a chain of induced subgraphs.
struct IdChain {
    std::vector<int> to_host;

    static IdChain identity(int n)
    {
        IdChain c;
        c.to_host.resize(static_cast<std::size_t>(n));
        std::iota(c.to_host.begin(), c.to_host.end(), 0);
        return c;
    }

    IdChain then(const Subgraph& sub) const
    {
        IdChain c;
        for (int v : sub.to_host)
            c.to_host.push_back(to_host[static_cast<std::size_t>(v)]);
        return c;
    }

    VertexSet lift(const VertexSet& local, int host_n) const
    {
        std::vector<int> out;
        for (int v : local)
            out.push_back(to_host[static_cast<std::size_t>(v)]);
        return VertexSet(std::move(out), host_n);
    }

    HoleWitness lift(HoleWitness w) const
    {
        for (int& v : w.cycle)
            v = to_host[static_cast<std::size_t>(v)];
        return w;
    }
};

// In the complement a hole of g becomes an anti-hole and vice versa.
HoleWitness complement_view(HoleWitness w)
{
    w.kind = w.kind == HoleKind::hole ? HoleKind::antihole : HoleKind::hole;
    return w;
}

// Dominating tree, r-weights, tree split and, for a root path, the windowed
// empty pair. `c` is connected and its ids lift to the working graph via chain.
std::optional<BipartitePair> tree_route(
    const Graph& c, const IdChain& chain, int host_n, int k, const Rational& eps)
{
    if (c.order() < 2)
        return std::nullopt;
    DomTree tree = DomTree::build(c, 0);
    std::vector<int> roots = vertex_roots(c, tree);

    const auto& nodes = tree.nodes();
    std::vector<int> parent_idx, labels;
    std::vector<std::int64_t> weight(nodes.size(), 0);
    for (int v : nodes) {
        parent_idx.push_back(tree.push_rank(tree.parent(v)));
        labels.push_back(v);
    }
    for (int r : roots)
        ++weight[static_cast<std::size_t>(tree.push_rank(r))];
    WeightedTree wt(std::move(parent_idx), std::move(weight), std::move(labels));
    TreeSplit sp = split(wt);

    auto members_rooted_in = [&](const std::vector<int>& idx) {
        std::vector<char> hit(nodes.size(), 0);
        for (int i : idx)
            hit[static_cast<std::size_t>(i)] = 1;
        std::vector<int> out;
        for (int x = 0; x < c.order(); ++x)
            if (hit[static_cast<std::size_t>(tree.push_rank(roots[static_cast<std::size_t>(x)]))])
                out.push_back(x);
        return VertexSet(std::move(out), c.order());
    };

    if (const auto* up = std::get_if<UnrelatedPair>(&sp.result)) {
        // No edge joins vertices whose roots are unrelated.
        BipartitePair p{PairKind::empty, chain.lift(members_rooted_in(up->a), host_n),
            chain.lift(members_rooted_in(up->b), host_n), "tree-split/unrelated-rule-" + std::to_string(sp.rule)};
        return p;
    }

    const auto& rp = std::get<RootPath>(sp.result);
    Subgraph dominated = induced_subgraph(c, members_rooted_in(rp.path));
    std::vector<int> local_path;
    for (int i : rp.path)
        local_path.push_back(dominated.from_host[static_cast<std::size_t>(nodes[static_cast<std::size_t>(i)])]);

    // The dominated part keeps a quarter of a 4eps-sparse graph: 16 eps relative
    // to its own size, unless it came from a component of the sparse graph, in
    // which case the observed ratio is used.
    const int d = dominated.graph.order();
    const int max_deg = degree_stats(dominated.graph).max_degree;
    Rational eps_d = Rational(16) * eps;
    if (!eps_d.bounds(max_deg, d))
        eps_d = Rational(max_deg, d);

    IdChain dchain = chain.then(dominated);
    try {
        BipartitePair p = extract_empty_pair(dominated.graph, local_path, k, eps_d);
        p.x = dchain.lift(p.x, host_n);
        p.y = dchain.lift(p.y, host_n);
        p.provenance = "tree-split/root-path/" + p.provenance;
        return p;
    } catch (const LongHoleFound& e) {
        throw LongHoleFound(dchain.lift(e.witness()));
    } catch (const NoPairFound&) {
        return std::nullopt;
    }
}

// Pipeline on a working graph w in which s is eps-stable. Returns an empty pair of w.
std::optional<BipartitePair> sparse_route(const Graph& w, const VertexSet& s, int k, const Rational& eps)
{
    VertexSet cleaned = clean_degree(w, s, eps);
    if (cleaned.size() < 2)
        return std::nullopt;
    Subgraph sparse = induced_subgraph(w, cleaned);
    IdChain chain = IdChain::identity(w.order()).then(sparse);

    if (!is_connected(sparse.graph)) {
        ComponentAssembly asm_ = assemble_components_pair(sparse.graph);
        if (asm_.pair) {
            return BipartitePair{PairKind::empty, chain.lift(asm_.pair->x, w.order()),
                chain.lift(asm_.pair->y, w.order()), "sparse/components"};
        }
        Subgraph big = induced_subgraph(sparse.graph, *asm_.recurse_into);
        return tree_route(big.graph, chain.then(big), w.order(), k, eps);
    }
    return tree_route(sparse.graph, chain, w.order(), k, eps);
}

void check_params(int k, const Rational& eps)
{
    if (k < 4)
        throw ParameterError("k must be at least 4, got " + std::to_string(k));
    if (eps <= Rational(0) || eps >= Rational(1))
        throw ParameterError("eps must lie in (0, 1), got " + eps.str());
}

} // namespace

BipartitePair strong_pair(const Graph& g, int k, const Rational& eps)
{
    check_params(k, eps);
    const int n = g.order();
    if (n < 2)
        throw PreconditionError("a pair needs at least two vertices");

    std::vector<BipartitePair> candidates;
    if (!is_connected(g)) {
        auto a = assemble_components_pair(g);
        if (a.pair)
            candidates.push_back(*a.pair);
    }
    const Graph co = complement(g);
    if (!is_connected(co)) {
        auto a = assemble_components_pair(co);
        if (a.pair) {
            a.pair->kind = PairKind::complete;
            a.pair->provenance = "co-components";
            candidates.push_back(*a.pair);
        }
    }

    SparsityOutcome density = sparsify_or_dense(g, eps);
    const bool via_complement = density.kind == DensityKind::eps_clique;
    try {
        auto p = sparse_route(via_complement ? co : g, density.set, k, eps);
        if (p) {
            if (via_complement) {
                p->kind = flipped(p->kind);
                p->provenance = "complement/" + p->provenance;
            }
            candidates.push_back(std::move(*p));
        }
    } catch (const LongHoleFound& e) {
        throw LongHoleFound(via_complement ? complement_view(e.witness()) : e.witness());
    }

    // Last resort for tiny inputs: a single edge or non-edge.
    if (candidates.empty()) {
        for (int u = 0; u < n && candidates.empty(); ++u)
            for (int v = u + 1; v < n; ++v) {
                candidates.push_back(BipartitePair{g.adjacent(u, v) ? PairKind::complete : PairKind::empty,
                    VertexSet({u}, n), VertexSet({v}, n), "single"});
                break;
            }
    }

    const BipartitePair* best = nullptr;
    for (const auto& c : candidates) {
        PairCheck chk = verify_pair(g, c);
        if (!chk.ok)
            throw VerificationFailure(c.provenance, chk.reason);
        if (!best || c.min_side() > best->min_side())
            best = &c;
    }
    return *best;
}

Cotree Cotree::leaf(int v)
{
    Cotree t;
    t.nodes_.push_back(Node{CotreeKind::leaf, v, {}});
    t.root_ = 0;
    return t;
}

Cotree Cotree::combine(CotreeKind kind, std::vector<Cotree> parts)
{
    if (kind == CotreeKind::leaf)
        throw ParameterError("combine needs an internal node kind");
    if (parts.size() == 1)
        return std::move(parts.front());
    Cotree t;
    t.nodes_.push_back(Node{kind, -1, {}});
    t.root_ = 0;
    for (auto& p : parts) {
        int offset = static_cast<int>(t.nodes_.size());
        t.nodes_[0].children.push_back(p.root_ + offset);
        for (auto& nd : p.nodes_) {
            for (int& c : nd.children)
                c += offset;
            t.nodes_.push_back(std::move(nd));
        }
    }
    return t;
}

Cotree Cotree::from_nodes(std::vector<Node> nodes, int root)
{
    Cotree t;
    t.nodes_ = std::move(nodes);
    t.root_ = root;
    return t;
}

std::vector<int> Cotree::leaves() const
{
    std::vector<int> out;
    for (const auto& nd : nodes_)
        if (nd.kind == CotreeKind::leaf)
            out.push_back(nd.vertex);
    std::sort(out.begin(), out.end());
    return out;
}

int Cotree::leaf_count() const
{
    return static_cast<int>(std::count_if(
        nodes_.begin(), nodes_.end(), [](const Node& nd) { return nd.kind == CotreeKind::leaf; }));
}

Cotree cotree_of_cograph(const Graph& g, const VertexSet& vertices)
{
    if (vertices.empty())
        throw ParameterError("empty vertex set");
    if (vertices.size() == 1)
        return Cotree::leaf(vertices[0]);
    Subgraph sub = induced_subgraph(g, vertices);
    CotreeKind kind = CotreeKind::disjoint_union;
    auto parts = connected_components(sub.graph);
    if (parts.size() == 1) {
        kind = CotreeKind::join;
        parts = connected_components(complement(sub.graph));
        if (parts.size() == 1)
            throw PreconditionError("vertex set induces a P4");
    }
    std::vector<Cotree> kids;
    for (const auto& p : parts)
        kids.push_back(cotree_of_cograph(g, sub.lift(p)));
    return Cotree::combine(kind, std::move(kids));
}

std::optional<std::pair<int, int>> cotree_mismatch(const Graph& g, const Cotree& t)
{
    const auto bad = std::make_pair(-1, -1);
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::optional<std::pair<int, int>> found;
    std::function<std::vector<int>(int)> visit = [&](int i) -> std::vector<int> {
        if (i < 0 || i >= t.node_count()) {
            found = bad;
            return {};
        }
        const auto& nd = t.node(i);
        if (nd.kind == CotreeKind::leaf) {
            if (nd.vertex < 0 || nd.vertex >= g.order() || seen[static_cast<std::size_t>(nd.vertex)] || !nd.children.empty()) {
                found = bad;
                return {};
            }
            seen[static_cast<std::size_t>(nd.vertex)] = 1;
            return {nd.vertex};
        }
        if (nd.children.empty()) {
            found = bad;
            return {};
        }
        std::vector<int> acc;
        const bool want = nd.kind == CotreeKind::join;
        for (int c : nd.children) {
            auto part = visit(c);
            if (found)
                return {};
            for (int a : acc)
                for (int b : part)
                    if (g.adjacent(a, b) != want) {
                        found = std::make_pair(std::min(a, b), std::max(a, b));
                        return {};
                    }
            acc.insert(acc.end(), part.begin(), part.end());
        }
        return acc;
    };
    visit(t.root());
    return found;
}

P4FreeExtraction p4free_extract(const Graph& g, int k, const Rational& eps)
{
    check_params(k, eps);
    P4FreeExtraction out;
    std::function<Cotree(const VertexSet&)> extract = [&](const VertexSet& s) -> Cotree {
        if (s.size() <= 3)
            return cotree_of_cograph(g, s);
        Subgraph sub = induced_subgraph(g, s);
        BipartitePair pair;
        try {
            pair = strong_pair(sub.graph, k, eps);
        } catch (const LongHoleFound& e) {
            HoleWitness w = e.witness();
            for (int& v : w.cycle)
                v = sub.to_host[static_cast<std::size_t>(v)];
            throw LongHoleFound(std::move(w));
        }
        out.trace.push_back(TraceStep{pair.provenance, pair.kind, s.size(), pair.x.size(), pair.y.size()});
        Cotree left = extract(sub.lift(pair.x));
        Cotree right = extract(sub.lift(pair.y));
        CotreeKind kind = pair.kind == PairKind::complete ? CotreeKind::join : CotreeKind::disjoint_union;
        std::vector<Cotree> parts;
        parts.push_back(std::move(left));
        parts.push_back(std::move(right));
        return Cotree::combine(kind, std::move(parts));
    };
    if (g.order() == 0)
        throw PreconditionError("empty graph");
    out.cotree = extract(VertexSet::all(g.order()));
    return out;
}

CographOptimum cograph_alpha_omega(const Cotree& t)
{
    std::function<CographOptimum(int)> solve = [&](int i) -> CographOptimum {
        if (i < 0 || i >= t.node_count())
            throw ParameterError("cotree child index out of range");
        const auto& nd = t.node(i);
        if (nd.kind == CotreeKind::leaf) {
            if (!nd.children.empty())
                throw ParameterError("cotree leaf with children");
            return {1, 1, {nd.vertex}, {nd.vertex}};
        }
        if (nd.children.empty())
            throw ParameterError("internal cotree node without children");
        CographOptimum acc;
        const bool join = nd.kind == CotreeKind::join;
        for (int c : nd.children) {
            CographOptimum part = solve(c);
            // union: cliques stay inside one child, stable sets add up; join: the reverse
            auto& summed = join ? acc.clique : acc.stable;
            auto& maxed = join ? acc.stable : acc.clique;
            auto& part_summed = join ? part.clique : part.stable;
            auto& part_maxed = join ? part.stable : part.clique;
            summed.insert(summed.end(), part_summed.begin(), part_summed.end());
            if (part_maxed.size() > maxed.size())
                maxed = std::move(part_maxed);
        }
        std::sort(acc.clique.begin(), acc.clique.end());
        std::sort(acc.stable.begin(), acc.stable.end());
        acc.omega = static_cast<int>(acc.clique.size());
        acc.alpha = static_cast<int>(acc.stable.size());
        return acc;
    };
    return solve(t.root());
}

Rational observed_ratio(const std::vector<TraceStep>& trace)
{
    Rational c(1, 2);
    for (const auto& st : trace)
        c = std::min(c, Rational(std::min(st.x_size, st.y_size), st.level_size));
    return c;
}

double exponent_for_ratio(const Rational& c)
{
    if (c <= Rational(0))
        return 0.0;
    return std::log(2.0) / std::log(1.0 / c.to_double());
}

EHCertificate eh_extract(const Graph& g, int k, const Rational& eps)
{
    P4FreeExtraction ex = p4free_extract(g, k, eps);
    if (auto bad = cotree_mismatch(g, ex.cotree))
        throw VerificationFailure("cotree", "leaf pair (" + std::to_string(bad->first) + ", "
                + std::to_string(bad->second) + ") disagrees with the graph");
    CographOptimum opt = cograph_alpha_omega(ex.cotree);
    const int leaves = ex.cotree.leaf_count();
    if (static_cast<std::int64_t>(opt.omega) * opt.alpha < leaves)
        throw VerificationFailure("cograph-dp", "omega * alpha below the leaf count");

    EHCertificate cert;
    cert.kind = opt.omega > opt.alpha ? CertKind::clique : CertKind::stable;
    cert.vertices = VertexSet(cert.kind == CertKind::clique ? opt.clique : opt.stable, g.order());
    cert.n = g.order();
    cert.leaf_count = leaves;
    cert.trace = std::move(ex.trace);
    cert.constants.k = k;
    cert.constants.eps = eps;
    cert.constants.c_observed = observed_ratio(cert.trace);
    cert.constants.c_prime = exponent_for_ratio(cert.constants.c_observed);

    if (!verify_clique_or_stable(g, cert))
        throw VerificationFailure("certificate", to_string(cert.kind) + " certificate does not verify");
    if (static_cast<std::int64_t>(cert.size()) * cert.size() < leaves)
        throw VerificationFailure("certificate", "size below the square root of the leaf count");
    return cert;
}

} // namespace ehh
