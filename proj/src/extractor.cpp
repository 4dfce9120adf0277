#include "ehh/extractor.hpp"

#include "ehh/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>

namespace ehh {

namespace {

// Positions of each vertex on the path and, for off-path vertices, the sorted
// positions of their path neighbours.
struct PathIndex {
    std::vector<int> path;
    std::vector<int> pos;                     // -1 off the path
    std::vector<std::vector<int>> path_nbrs;  // for off-path vertices
    std::vector<int> off_path;

    int length() const { return static_cast<int>(path.size()); }
};

PathIndex index_path(const Graph& g, std::span<const int> path)
{
    const int n = g.order();
    PathIndex ix;
    ix.path.assign(path.begin(), path.end());
    ix.pos.assign(static_cast<std::size_t>(n), -1);
    if (path.empty())
        throw PreconditionError("path is empty");
    for (int i = 0; i < ix.length(); ++i) {
        int v = ix.path[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n)
            throw OutOfRangeError("path vertex " + std::to_string(v) + " outside the graph");
        if (ix.pos[static_cast<std::size_t>(v)] >= 0)
            throw PreconditionError("path repeats vertex " + std::to_string(v));
        ix.pos[static_cast<std::size_t>(v)] = i;
    }
    Bitset on_path(n);
    for (int v : ix.path)
        on_path.set(v);
    for (int i = 0; i < ix.length(); ++i) {
        int v = ix.path[static_cast<std::size_t>(i)];
        int expected = (i > 0) + (i + 1 < ix.length());
        if (i > 0 && !g.adjacent(v, ix.path[static_cast<std::size_t>(i - 1)]))
            throw PreconditionError("path is broken between positions " + std::to_string(i - 1) + " and " + std::to_string(i));
        if (count_and(g.row(v), on_path.words()) != expected)
            throw PreconditionError("path is not induced (chord at position " + std::to_string(i) + ")");
    }
    ix.path_nbrs.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        if (ix.pos[static_cast<std::size_t>(v)] >= 0)
            continue;
        auto& nb = ix.path_nbrs[static_cast<std::size_t>(v)];
        for (int u : g.neighbors(v))
            if (ix.pos[static_cast<std::size_t>(u)] >= 0)
                nb.push_back(ix.pos[static_cast<std::size_t>(u)]);
        if (nb.empty())
            throw PreconditionError("path does not dominate vertex " + std::to_string(v));
        std::sort(nb.begin(), nb.end());
        ix.off_path.push_back(v);
    }
    return ix;
}

enum class Side : char { left, right, inside };

// v with path neighbours at a < I and b > I but none in I closes the induced
// cycle v, p_a, ..., p_b.
HoleWitness straddle_hole(const PathIndex& ix, int v, int before, int after)
{
    HoleWitness w;
    w.cycle.push_back(v);
    for (int i = before; i <= after; ++i)
        w.cycle.push_back(ix.path[static_cast<std::size_t>(i)]);
    return w;
}

// A left vertex u adjacent to a right vertex x closes u, p_a, ..., p_b, x with
// a the last path neighbour of u and b the first of x.
HoleWitness bridge_hole(const PathIndex& ix, int u, int x)
{
    HoleWitness w;
    w.cycle.push_back(u);
    int a = ix.path_nbrs[static_cast<std::size_t>(u)].back();
    int b = ix.path_nbrs[static_cast<std::size_t>(x)].front();
    for (int i = a; i <= b; ++i)
        w.cycle.push_back(ix.path[static_cast<std::size_t>(i)]);
    w.cycle.push_back(x);
    return w;
}

Side side_of(const PathIndex& ix, int v, int start, int k)
{
    const auto& nb = ix.path_nbrs[static_cast<std::size_t>(v)];
    const int end = start + k - 1;
    auto it = std::lower_bound(nb.begin(), nb.end(), start);
    if (it != nb.end() && *it <= end)
        return Side::inside;
    if (nb.back() < start)
        return Side::left;
    if (nb.front() > end)
        return Side::right;
    throw LongHoleFound(straddle_hole(ix, v, *(it - 1), *it));
}

void check_window(const PathIndex& ix, int start, int k)
{
    if (k < 1)
        throw ParameterError("window length must be positive");
    if (start < 0 || start + k > ix.length())
        throw PreconditionError("window [" + std::to_string(start) + ", " + std::to_string(start + k - 1)
            + "] does not fit a path of " + std::to_string(ix.length()) + " vertices");
}

} // namespace

WindowClassification classify_window(const Graph& g, std::span<const int> path, int window_start, int k)
{
    PathIndex ix = index_path(g, path);
    check_window(ix, window_start, k);
    std::vector<int> left, right, inside;
    std::vector<Side> side(static_cast<std::size_t>(g.order()), Side::inside);
    for (int v : ix.off_path) {
        Side s = side_of(ix, v, window_start, k);
        side[static_cast<std::size_t>(v)] = s;
        (s == Side::left ? left : s == Side::right ? right : inside).push_back(v);
    }
    for (int u : left)
        for (int x : g.neighbors(u))
            if (ix.pos[static_cast<std::size_t>(x)] < 0 && side[static_cast<std::size_t>(x)] == Side::right)
                throw LongHoleFound(bridge_hole(ix, u, x));
    WindowClassification out;
    out.path = ix.path;
    out.window_start = window_start;
    out.window_length = k;
    out.left = VertexSet(std::move(left), g.order());
    out.right = VertexSet(std::move(right), g.order());
    out.inside = VertexSet(std::move(inside), g.order());
    return out;
}

Rational empty_pair_guarantee(int n, int path_length, int k, const Rational& eps)
{
    if (2 * path_length >= n)
        return Rational((path_length - 1) / 2);
    return (Rational(n - path_length) - Rational(k + 2) * eps * Rational(n)) / Rational(2);
}

BipartitePair extract_empty_pair(const Graph& g, std::span<const int> path, int k, const Rational& eps)
{
    if (k < 1)
        throw ParameterError("window length must be positive");
    if (eps < Rational(0))
        throw ParameterError("negative sparsity coefficient");
    const int n = g.order();
    PathIndex ix = index_path(g, path);
    const int len = ix.length();
    if (!eps.bounds(degree_stats(g).max_degree, n))
        throw PreconditionError("max degree exceeds " + eps.str() + " * n");

    // A left-right edge for some window is exactly an edge whose endpoints'
    // path neighbours leave room for a window strictly between them.
    for (int u : ix.off_path)
        for (int x : g.neighbors(u)) {
            if (ix.pos[static_cast<std::size_t>(x)] >= 0)
                continue;
            if (ix.path_nbrs[static_cast<std::size_t>(u)].back() + k < ix.path_nbrs[static_cast<std::size_t>(x)].front())
                throw LongHoleFound(bridge_hole(ix, u, x));
        }

    int best_start = -1;
    int best_min = -1;
    std::vector<Side> prev;
    for (int s = 0; s + k <= len; ++s) {
        std::vector<Side> cur(static_cast<std::size_t>(n), Side::inside);
        int nl = 0, nr = 0;
        for (int v : ix.off_path) {
            Side sd = side_of(ix, v, s, k);
            cur[static_cast<std::size_t>(v)] = sd;
            nl += sd == Side::left;
            nr += sd == Side::right;
            if (!prev.empty()) {
                Side was = prev[static_cast<std::size_t>(v)];
                if ((was == Side::left && sd != Side::left) || (sd == Side::right && was != Side::right))
                    throw VerificationFailure("window-scan", "left shrank or right grew at window " + std::to_string(s));
            }
        }
        int left_aug = nl + s;
        int right_aug = nr + (len - s - k);
        int m = std::min(left_aug, right_aug);
        if (m > best_min) {
            best_min = m;
            best_start = s;
        }
        prev = std::move(cur);
    }

    BipartitePair pair;
    pair.kind = PairKind::empty;
    bool have = false;
    if (best_start >= 0 && best_min > 0) {
        std::vector<int> xs, ys;
        for (int v : ix.off_path) {
            Side sd = side_of(ix, v, best_start, k);
            if (sd == Side::left)
                xs.push_back(v);
            else if (sd == Side::right)
                ys.push_back(v);
        }
        for (int i = 0; i < best_start; ++i)
            xs.push_back(ix.path[static_cast<std::size_t>(i)]);
        for (int i = best_start + k; i < len; ++i)
            ys.push_back(ix.path[static_cast<std::size_t>(i)]);
        pair.x = VertexSet(std::move(xs), n);
        pair.y = VertexSet(std::move(ys), n);
        pair.provenance = "window[" + std::to_string(best_start) + "," + std::to_string(best_start + k - 1) + "]";
        have = true;
    }
    if (2 * len >= n) {
        const int half = (len - 1) / 2;
        if (half > 0 && (!have || half > pair.min_side())) {
            std::vector<int> xs(ix.path.begin(), ix.path.begin() + half);
            std::vector<int> ys(ix.path.begin() + half + 1, ix.path.end());
            pair.x = VertexSet(std::move(xs), n);
            pair.y = VertexSet(std::move(ys), n);
            pair.provenance = "path-halves";
            have = true;
        }
    }

    Rational promised = empty_pair_guarantee(n, len, k, eps);
    if (!have) {
        if (promised > Rational(0))
            throw VerificationFailure("extract-empty-pair", "no pair found although " + promised.str() + " was promised");
        throw NoPairFound("graph too small for a nonempty empty pair");
    }
    if (Rational(pair.min_side()) < promised)
        throw VerificationFailure("extract-empty-pair",
            "min side " + std::to_string(pair.min_side()) + " below guarantee " + promised.str());
    return pair;
}

bool is_eps_stable(const Graph& g, const VertexSet& s, const Rational& eps)
{
    std::int64_t sz = s.size();
    return eps.bounds(2 * internal_edges(g, s), sz * (sz - 1));
}

namespace {

struct Found {
    VertexSet set;
    Rational density;
};

Rational density_of(std::int64_t count, std::int64_t size)
{
    if (size < 2)
        return Rational(0);
    return Rational(2 * count, size * (size - 1));
}

// Removes the vertex of highest internal degree until the set is eps-stable.
Found peel(const Graph& g, const Rational& eps)
{
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::int64_t edges = 0;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        edges += deg[static_cast<std::size_t>(v)];
    }
    edges /= 2;
    std::int64_t size = n;
    while (size > 0 && !eps.bounds(2 * edges, size * (size - 1))) {
        int worst = -1;
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)] && (worst < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(worst)]))
                worst = v;
        alive[static_cast<std::size_t>(worst)] = 0;
        edges -= deg[static_cast<std::size_t>(worst)];
        --size;
        for (int u : g.neighbors(worst))
            if (alive[static_cast<std::size_t>(u)])
                --deg[static_cast<std::size_t>(u)];
    }
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)])
            members.push_back(v);
    return {VertexSet(std::move(members), n), density_of(edges, size)};
}

} // namespace

SparsityOutcome sparsify_or_dense(const Graph& g, const Rational& eps)
{
    if (eps < Rational(0) || eps >= Rational(1))
        throw ParameterError("eps must lie in [0, 1), got " + eps.str());
    const int n = g.order();
    SparsityOutcome out;
    out.eps = eps;

    if (n <= kExactDensityOrder) {
        out.method = "exact";
        const std::uint32_t full = n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        std::vector<std::uint8_t> edges(static_cast<std::size_t>(full) + 1, 0);
        std::uint32_t best_stable = 0, best_clique = 0;
        int stable_size = 0, clique_size = 0;
        for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
            int low = std::countr_zero(mask);
            std::uint32_t rest = mask & (mask - 1);
            int e = edges[rest] + std::popcount(adj[static_cast<std::size_t>(low)] & rest);
            edges[mask] = static_cast<std::uint8_t>(e);
            std::int64_t s = std::popcount(mask);
            std::int64_t pairs = s * (s - 1);
            if (s > stable_size && eps.bounds(2 * e, pairs)) {
                stable_size = static_cast<int>(s);
                best_stable = mask;
            }
            if (s > clique_size && eps.bounds(pairs - 2 * e, pairs)) {
                clique_size = static_cast<int>(s);
                best_clique = mask;
            }
            if (mask == full)
                break;
        }
        bool clique = clique_size > stable_size;
        std::uint32_t mask = clique ? best_clique : best_stable;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                members.push_back(v);
        std::int64_t s = static_cast<std::int64_t>(members.size());
        std::int64_t e = edges[mask];
        out.kind = clique ? DensityKind::eps_clique : DensityKind::eps_stable;
        out.density = density_of(clique ? s * (s - 1) / 2 - e : e, s);
        out.set = VertexSet(std::move(members), n);
        return out;
    }

    out.method = "peeling";
    Found sparse = peel(g, eps);
    Found dense = peel(complement(g), eps);
    if (dense.set.size() > sparse.set.size()) {
        out.kind = DensityKind::eps_clique;
        out.set = std::move(dense.set);
        out.density = dense.density;
    } else {
        out.kind = DensityKind::eps_stable;
        out.set = std::move(sparse.set);
        out.density = sparse.density;
    }
    return out;
}

namespace {

std::atomic<std::uint64_t> clean_calls{0};
std::atomic<std::uint64_t> clean_violations{0};

} // namespace

VertexSet clean_degree(const Graph& g, const VertexSet& s, const Rational& eps)
{
    if (eps <= Rational(0))
        throw ParameterError("degree cleaning needs eps > 0");
    if (!is_eps_stable(g, s, eps))
        throw PreconditionError("vertex set is not " + eps.str() + "-stable");

    const std::int64_t size = s.size();
    Bitset mask = s.bits();
    // keep v iff deg_S(v) < 2 * eps * |S|
    std::vector<int> kept;
    for (int v : s) {
        std::int64_t deg = count_and(g.row(v), mask.words());
        if (static_cast<__int128>(deg) * eps.den() < static_cast<__int128>(2) * eps.num() * size)
            kept.push_back(v);
    }
    VertexSet out(std::move(kept), g.order());

    ++clean_calls;
    Bitset kept_mask = out.bits();
    bool ok = 2 * static_cast<std::int64_t>(out.size()) >= size;
    for (int v : out) {
        std::int64_t deg = count_and(g.row(v), kept_mask.words());
        // deg < 2 eps |S| and deg <= 4 eps |S'|
        ok = ok && static_cast<__int128>(deg) * eps.den() < static_cast<__int128>(2) * eps.num() * size
            && eps.bounds(deg, 4 * static_cast<std::int64_t>(out.size()));
    }
    if (!ok) {
        ++clean_violations;
        throw VerificationFailure("clean-degree", "retention or sparsity bound violated");
    }
    return out;
}

CleanDegreeStats clean_degree_stats() { return {clean_calls.load(), clean_violations.load()}; }

} // namespace ehh
