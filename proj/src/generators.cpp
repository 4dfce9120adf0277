#include "ehh/generators.hpp"

#include "ehh/errors.hpp"
#include "ehh/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace ehh {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo)
        throw ParameterError("empty uniform range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
        return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::chance(const Rational& p)
{
    if (p <= Rational(0))
        return false;
    if (p >= Rational(1))
        return true;
    return uniform(0, p.den() - 1) < p.num();
}

Family parse_family(std::string_view name)
{
    if (name == "split")
        return Family::split;
    if (name == "cograph")
        return Family::cograph;
    if (name == "chordal_interval")
        return Family::chordal_interval;
    if (name == "gnp")
        return Family::gnp;
    if (name == "weighted_tree")
        return Family::weighted_tree;
    throw ParameterError("unknown family '" + std::string(name) + "'");
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::split:
        return "split";
    case Family::cograph:
        return "cograph";
    case Family::chordal_interval:
        return "chordal_interval";
    case Family::gnp:
        return "gnp";
    case Family::weighted_tree:
        return "weighted_tree";
    }
    return "?";
}

namespace {

void check_probability(const Rational& p, const char* what)
{
    if (p < Rational(0) || p > Rational(1))
        throw ParameterError(std::string(what) + " must lie in [0, 1]");
}

std::vector<int> random_labels(int n, Rng& rng)
{
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    rng.shuffle(label);
    return label;
}

Graph gen_split(const InstanceSpec& spec, Rng& rng)
{
    check_probability(spec.density, "split density");
    const int n = spec.n;
    const int clique = n / 2;
    auto label = random_labels(n, rng);
    GraphBuilder b(n, "split-" + std::to_string(n) + "-" + std::to_string(spec.seed));
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v)
            b.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    for (int u = 0; u < clique; ++u)
        for (int v = clique; v < n; ++v)
            if (rng.chance(spec.density))
                b.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    return std::move(b).build();
}

Graph gen_cograph(const InstanceSpec& spec, Rng& rng)
{
    if (spec.branching < 2)
        throw ParameterError("cograph branching must be at least 2");
    const int n = spec.n;
    auto label = random_labels(n, rng);
    GraphBuilder b(n, "cograph-" + std::to_string(n) + "-" + std::to_string(spec.seed));
    // Vertices lo..hi-1 form one cotree node; parts alternate between union and join.
    std::function<void(int, int, bool)> build = [&](int lo, int hi, bool join) {
        const int size = hi - lo;
        if (size <= 1)
            return;
        const int parts = static_cast<int>(rng.uniform(2, std::min(spec.branching, size)));
        std::vector<int> cuts;
        std::vector<int> pool(static_cast<std::size_t>(size - 1));
        std::iota(pool.begin(), pool.end(), lo + 1);
        rng.shuffle(pool);
        cuts.assign(pool.begin(), pool.begin() + (parts - 1));
        cuts.push_back(lo);
        cuts.push_back(hi);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            build(cuts[i], cuts[i + 1], !join);
        if (join)
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                for (int u = cuts[i]; u < cuts[i + 1]; ++u)
                    for (int v = cuts[i + 1]; v < hi; ++v)
                        b.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    };
    build(0, n, rng.chance(Rational(1, 2)));
    return std::move(b).build();
}

Graph gen_interval(const InstanceSpec& spec, Rng& rng)
{
    if (spec.interval_length < 0)
        throw ParameterError("interval length must be nonnegative");
    const int n = spec.n;
    std::vector<std::pair<std::int64_t, std::int64_t>> iv;
    for (int v = 0; v < n; ++v) {
        std::int64_t l = rng.uniform(0, n);
        iv.emplace_back(l, l + rng.uniform(0, spec.interval_length));
    }
    GraphBuilder b(n, "interval-" + std::to_string(n) + "-" + std::to_string(spec.seed));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (iv[static_cast<std::size_t>(u)].first <= iv[static_cast<std::size_t>(v)].second
                && iv[static_cast<std::size_t>(v)].first <= iv[static_cast<std::size_t>(u)].second)
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph gen_gnp(const InstanceSpec& spec, Rng& rng)
{
    check_probability(spec.p, "gnp p");
    GraphBuilder b(spec.n, "gnp-" + std::to_string(spec.n) + "-" + std::to_string(spec.seed));
    for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v)
            if (rng.chance(spec.p))
                b.add_edge(u, v);
    return std::move(b).build();
}

std::vector<int> tree_parents(const InstanceSpec& spec, Rng& rng)
{
    if (spec.branching < 0)
        throw ParameterError("tree branching window must be nonnegative");
    std::vector<int> parent(static_cast<std::size_t>(spec.n), 0);
    for (int i = 1; i < spec.n; ++i) {
        int lo = spec.branching > 0 ? std::max(0, i - spec.branching) : 0;
        parent[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform(lo, i - 1));
    }
    return parent;
}

} // namespace

Graph gen_instance(const InstanceSpec& spec)
{
    if (spec.n < 1)
        throw ParameterError("instance size must be at least 1");
    Rng rng(spec.seed);
    Graph g;
    switch (spec.family) {
    case Family::split:
        g = gen_split(spec, rng);
        break;
    case Family::cograph:
        g = gen_cograph(spec, rng);
        break;
    case Family::chordal_interval:
        g = gen_interval(spec, rng);
        break;
    case Family::gnp:
        g = gen_gnp(spec, rng);
        break;
    case Family::weighted_tree: {
        auto parent = tree_parents(spec, rng);
        GraphBuilder b(spec.n, "tree-" + std::to_string(spec.n) + "-" + std::to_string(spec.seed));
        for (int i = 1; i < spec.n; ++i)
            b.add_edge(parent[static_cast<std::size_t>(i)], i);
        g = std::move(b).build();
        break;
    }
    }

    if (g.order() <= 15) {
        bool ok = true;
        if (spec.family == Family::split)
            ok = find_long_hole(g, 4).status == SearchStatus::none && find_long_antihole(g, 4).status == SearchStatus::none;
        else if (spec.family == Family::cograph)
            ok = !find_p4(g).has_value();
        else if (spec.family == Family::chordal_interval)
            ok = find_long_hole(g, 4).status == SearchStatus::none;
        if (!ok)
            throw VerificationFailure("gen-" + to_string(spec.family), "instance is outside its class");
    }
    return g;
}

WeightedTree gen_weighted_tree(const InstanceSpec& spec)
{
    if (spec.n < 1)
        throw ParameterError("tree size must be at least 1");
    if (spec.max_weight < 0)
        throw ParameterError("max weight must be nonnegative");
    Rng rng(spec.seed);
    auto parent = tree_parents(spec, rng);
    std::vector<std::int64_t> w(parent.size());
    for (auto& x : w)
        x = rng.uniform(0, spec.max_weight);
    if (std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; }))
        w[0] = 1;
    return WeightedTree(std::move(parent), std::move(w));
}

} // namespace ehh
