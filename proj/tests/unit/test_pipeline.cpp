#include "../support/fixtures.hpp"

#include "ehh/errors.hpp"
#include "ehh/oracle.hpp"
#include "ehh/pipeline.hpp"

#include <doctest.h>

#include <cmath>

using namespace ehh;
using namespace ehh::testing;

namespace {

Graph copies(int count, const Graph& part)
{
    Graph g = part;
    for (int i = 1; i < count; ++i)
        g = disjoint_union(g, part);
    return g;
}

} // namespace

TEST_CASE("default eps")
{
    CHECK(default_eps(5) == Rational(1, 56));
    CHECK(default_eps(6) == Rational(1, 64));
}

TEST_CASE("component assembly examples")
{
    ComponentAssembly two = assemble_components_pair(copies(2, complete_graph(5)));
    REQUIRE(two.pair);
    CHECK(two.pair->x.size() == 5);
    CHECK(two.pair->y.size() == 5);

    ComponentAssembly big = assemble_components_pair(disjoint_union(complete_graph(9), edgeless_graph(1)));
    CHECK(!big.pair);
    REQUIRE(big.recurse_into);
    CHECK(big.recurse_into->size() == 9);

    Graph ten = copies(10, complete_graph(3));
    ComponentAssembly grouped = assemble_components_pair(ten);
    REQUIRE(grouped.pair);
    CHECK(verify_pair(ten, *grouped.pair).ok);
    CHECK(4 * grouped.pair->min_side() >= 30);

    CHECK_THROWS_AS(assemble_components_pair(cycle_graph(5)), NotApplicable);
}

TEST_CASE("strong pair examples")
{
    for (int m : {3, 6, 20}) {
        Graph g = copies(2, complete_graph(m));
        BipartitePair p = strong_pair(g, 5, default_eps(5));
        CHECK(verify_pair(g, p).ok);
        CHECK(p.min_side() == m);
    }
    for (int n : {2, 7, 30}) {
        BipartitePair p = strong_pair(edgeless_graph(n), 5, default_eps(5));
        CHECK(p.kind == PairKind::empty);
        CHECK(p.min_side() == n / 2);
        CHECK(p.x.size() + p.y.size() == n);
    }
    Graph split = gen_instance({Family::split, 500, 1});
    BipartitePair sp = strong_pair(split, 5, default_eps(5));
    CHECK(verify_pair(split, sp).ok);
    CHECK(64 * sp.min_side() >= 500);
}

TEST_CASE("strong pair takes the tree route on connected sparse graphs")
{
    Graph p400 = path_graph(400);
    BipartitePair a = strong_pair(p400, 5, default_eps(5));
    CHECK(verify_pair(p400, a).ok);
    CHECK(a.provenance.rfind("tree-split/root-path", 0) == 0);
    CHECK(4 * a.min_side() >= 400);

    Rng rng(6);
    int unrelated = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Graph t = bounded_degree_tree(600, 3, 20, rng);
        BipartitePair p = strong_pair(t, 5, default_eps(5));
        CHECK(verify_pair(t, p).ok);
        CHECK(p.provenance.rfind("tree-split/", 0) == 0);
        unrelated += p.provenance.rfind("tree-split/unrelated", 0) == 0 ? 1 : 0;
    }
    CHECK(unrelated > 0);
}

TEST_CASE("strong pair rejects bad parameters")
{
    CHECK_THROWS_AS(strong_pair(edgeless_graph(4), 3, Rational(1, 10)), ParameterError);
    CHECK_THROWS_AS(strong_pair(edgeless_graph(4), 5, Rational(0)), ParameterError);
    CHECK_THROWS_AS(strong_pair(edgeless_graph(1), 5, Rational(1, 10)), PreconditionError);
}

TEST_CASE("strong pair surfaces long holes as witnesses")
{
    Graph c40 = cycle_graph(40);
    try {
        strong_pair(c40, 5, Rational(1, 20));
        // A pair is acceptable if the routes never needed the path lemma.
    } catch (const LongHoleFound& e) {
        CHECK(is_valid_hole(c40, e.witness()));
    }
}

TEST_CASE("strong pair on random class members")
{
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        for (Family f : {Family::split, Family::cograph, Family::chordal_interval}) {
            InstanceSpec spec{f, 80, seed};
            Graph g = gen_instance(spec);
            try {
                BipartitePair p = strong_pair(g, 5, default_eps(5));
                CHECK(verify_pair(g, p).ok);
            } catch (const LongHoleFound& e) {
                // interval graphs may hold long anti-holes; the witness must be genuine
                CHECK(f == Family::chordal_interval);
                CHECK(is_valid_hole(e.witness().kind == HoleKind::hole ? g : complement(g), e.witness()));
            }
        }
    }
}

TEST_CASE("cotree of a cograph and the clique/stable DP")
{
    Cotree leaf = Cotree::leaf(4);
    auto lo = cograph_alpha_omega(leaf);
    CHECK(lo.omega == 1);
    CHECK(lo.alpha == 1);

    // K_{3,3}: join of two 3-vertex unions.
    std::vector<Cotree> left, right;
    for (int v = 0; v < 3; ++v) {
        left.push_back(Cotree::leaf(v));
        right.push_back(Cotree::leaf(v + 3));
    }
    std::vector<Cotree> sides{Cotree::combine(CotreeKind::disjoint_union, left),
        Cotree::combine(CotreeKind::disjoint_union, right)};
    Cotree k33 = Cotree::combine(CotreeKind::join, sides);
    auto o = cograph_alpha_omega(k33);
    CHECK(o.omega == 2);
    CHECK(o.alpha == 3);
    CHECK(k33.leaf_count() == 6);

    std::vector<Cotree> chain{Cotree::leaf(0)};
    for (int v = 1; v < 7; ++v)
        chain = {Cotree::combine(CotreeKind::join, {chain.front(), Cotree::leaf(v)})};
    auto km = cograph_alpha_omega(chain.front());
    CHECK(km.omega == 7);
    CHECK(km.alpha == 1);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_instance({Family::cograph, 24, seed});
        Cotree t = cotree_of_cograph(g, VertexSet::all(24));
        CHECK(t.leaf_count() == 24);
        CHECK(!cotree_mismatch(g, t));
        auto opt = cograph_alpha_omega(t);
        auto exact = oracle_max_clique_stable(g);
        CHECK(opt.omega == exact.omega);
        CHECK(opt.alpha == exact.alpha);
        CHECK(opt.omega * opt.alpha >= 24);
        CHECK(verify_clique_or_stable(g, CertKind::clique, VertexSet(opt.clique, 24)));
        CHECK(verify_clique_or_stable(g, CertKind::stable, VertexSet(opt.stable, 24)));
    }
    CHECK_THROWS_AS(cotree_of_cograph(path_graph(4), VertexSet::all(4)), PreconditionError);
}

TEST_CASE("cotree mismatch detection")
{
    Cotree u = Cotree::combine(CotreeKind::disjoint_union, {Cotree::leaf(0), Cotree::leaf(1)});
    CHECK(!cotree_mismatch(edgeless_graph(2), u));
    auto bad = cotree_mismatch(complete_graph(2), u);
    REQUIRE(bad);
    CHECK(*bad == std::pair<int, int>{0, 1});
    Cotree dup = Cotree::combine(CotreeKind::join, {Cotree::leaf(0), Cotree::leaf(0)});
    auto malformed = cotree_mismatch(complete_graph(2), dup);
    REQUIRE(malformed);
    CHECK(malformed->first == -1);
}

TEST_CASE("p4free extraction examples")
{
    P4FreeExtraction kn = p4free_extract(complete_graph(12), 5, default_eps(5));
    CHECK(!find_p4(induced_subgraph(complete_graph(12), VertexSet(kn.cotree.leaves(), 12)).graph));
    CHECK(kn.cotree.node(kn.cotree.root()).kind == CotreeKind::join);
    auto ko = cograph_alpha_omega(kn.cotree);
    CHECK(ko.omega == kn.cotree.leaf_count());

    P4FreeExtraction en = p4free_extract(edgeless_graph(12), 5, default_eps(5));
    CHECK(cograph_alpha_omega(en.cotree).alpha == en.cotree.leaf_count());

    P4FreeExtraction three = p4free_extract(path_graph(3), 5, default_eps(5));
    CHECK(three.cotree.leaf_count() == 3);
    CHECK(three.trace.empty());
}

TEST_CASE("ratio and exponent")
{
    CHECK(observed_ratio({}) == Rational(1, 2));
    std::vector<TraceStep> tr{{"a", PairKind::empty, 100, 30, 40}, {"b", PairKind::complete, 30, 10, 12}};
    CHECK(observed_ratio(tr) == Rational(3, 10));
    CHECK(exponent_for_ratio(Rational(1, 2)) == doctest::Approx(1.0));
    CHECK(exponent_for_ratio(Rational(1, 4)) == doctest::Approx(0.5));
}

TEST_CASE("eh extraction examples")
{
    EHCertificate k16 = eh_extract(complete_graph(16), 5, default_eps(5));
    CHECK(k16.kind == CertKind::clique);
    CHECK(k16.size() >= 4);
    CHECK(verify_clique_or_stable(complete_graph(16), k16));
    CHECK(k16.size() * k16.size() >= k16.leaf_count);

    EHCertificate e = eh_extract(edgeless_graph(20), 5, default_eps(5));
    CHECK(e.kind == CertKind::stable);
    CHECK(verify_clique_or_stable(edgeless_graph(20), e));

    Graph cg = gen_instance({Family::cograph, 1000, 3});
    EHCertificate c = eh_extract(cg, 5, default_eps(5));
    CHECK(verify_clique_or_stable(cg, c));
    const double cprime = exponent_for_ratio(c.constants.c_observed);
    CHECK(std::log(c.size()) / std::log(1000.0) >= cprime / 2 - 1e-9);
}

TEST_CASE("eh certificates never over-claim on small graphs")
{
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        for (Family f : {Family::split, Family::cograph}) {
            Graph g = gen_instance({f, 20, seed});
            EHCertificate c = eh_extract(g, 5, default_eps(5));
            CHECK(verify_clique_or_stable(g, c));
            auto opt = oracle_max_clique_stable(g);
            CHECK(c.size() <= (c.kind == CertKind::clique ? opt.omega : opt.alpha));
        }
    }
}
