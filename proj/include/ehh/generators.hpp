#pragma once

#include "ehh/graph.hpp"
#include "ehh/rational.hpp"
#include "ehh/splitter.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace ehh {

/// Seeded source used by every generator. Only raw engine output is consumed
/// (no std distributions), so corpora are identical across standard libraries.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed)
        : engine_(seed)
    {
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi], by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    /// True with probability exactly p (p in [0, 1]).
    bool chance(const Rational& p);

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

enum class Family { split, cograph, chordal_interval, gnp, weighted_tree };

Family parse_family(std::string_view name);
std::string to_string(Family f);

struct InstanceSpec {
    Family family = Family::split;
    int n = 1;
    std::uint64_t seed = 1;
    Rational p{1, 2};       // gnp edge probability
    Rational density{1, 2}; // split: clique-stable cross edge probability
    int branching = 3;      // cograph: max parts per cotree node; weighted_tree: parent window (0 = any)
    int interval_length = 4;
    std::int64_t max_weight = 10; // weighted_tree node weights are drawn from 0..max_weight
};

/// Graph of the requested family. Split graphs have no holes or anti-holes,
/// cographs have no P4 and chordal_interval graphs no holes, all by construction;
/// for n <= 15 the construction is re-checked with the exhaustive oracles.
Graph gen_instance(const InstanceSpec& spec);

/// Random rooted tree (root 0) with weights in 0..max_weight, total weight > 0.
WeightedTree gen_weighted_tree(const InstanceSpec& spec);

} // namespace ehh
