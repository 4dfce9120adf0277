#include "../support/fixtures.hpp"

#include "ehh/errors.hpp"
#include "ehh/oracle.hpp"

#include <doctest.h>

using namespace ehh;
using namespace ehh::testing;

TEST_CASE("long hole examples")
{
    HoleSearch c7 = find_long_hole(cycle_graph(7), 5);
    REQUIRE(c7.status == SearchStatus::found);
    CHECK(c7.witness->length() == 7);
    CHECK(is_valid_hole(cycle_graph(7), *c7.witness));

    // Interval graph built from a path of triangles: chordal.
    GraphBuilder b(7);
    for (int i = 0; i + 1 < 7; ++i)
        b.add_edge(i, i + 1);
    for (int i = 0; i + 2 < 7; ++i)
        b.add_edge(i, i + 2);
    CHECK(find_long_hole(std::move(b).build(), 4).status == SearchStatus::none);

    // C7 with the chord 0-2: induced cycles are the triangle 0-1-2 and the C6 0,2..6.
    GraphBuilder c(7);
    for (int i = 0; i < 7; ++i)
        c.add_edge(i, (i + 1) % 7);
    c.add_edge(0, 2);
    Graph chorded = std::move(c).build();
    HoleSearch six = find_long_hole(chorded, 6);
    REQUIRE(six.witness);
    CHECK(six.witness->length() == 6);
    CHECK(find_long_hole(chorded, 7).status == SearchStatus::none);

    CHECK_THROWS_AS(find_long_hole(cycle_graph(5), 3), ParameterError);
}

TEST_CASE("long anti-hole examples")
{
    HoleSearch a = find_long_antihole(complement(cycle_graph(7)), 5);
    REQUIRE(a.witness);
    CHECK(a.witness->kind == HoleKind::antihole);
    CHECK(a.witness->length() == 7);
    CHECK(is_valid_hole(complement(cycle_graph(7)), *a.witness));

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph cg = gen_instance({Family::cograph, 14, seed});
        CHECK(find_long_antihole(cg, 5).status == SearchStatus::none);
        CHECK(find_long_hole(cg, 5).status == SearchStatus::none);
        Graph sp = gen_instance({Family::split, 12, seed});
        CHECK(find_long_antihole(sp, 4).status == SearchStatus::none);
        CHECK(find_long_hole(sp, 4).status == SearchStatus::none);
    }
    CHECK_THROWS_AS(find_long_antihole(cycle_graph(5), 2), ParameterError);
}

TEST_CASE("hole search beyond the exhaustive regime reports unknown on budget exhaustion")
{
    Rng rng(3);
    Graph g = random_graph(60, Rational(1, 2), rng);
    HoleSearchOptions tight;
    tight.expansion_budget = 10;
    HoleSearch s = find_long_hole(g, 30, tight);
    CHECK(s.status == SearchStatus::unknown);
    CHECK(!s.witness);
}

TEST_CASE("P4 examples")
{
    auto p = find_p4(path_graph(4));
    REQUIRE(p);
    CHECK(is_valid_p4(path_graph(4), *p));
    CHECK((p->path == std::array<int, 4>{0, 1, 2, 3} || p->path == std::array<int, 4>{3, 2, 1, 0}));
    CHECK(!find_p4(complete_graph(6)));
    auto c5 = find_p4(cycle_graph(5));
    REQUIRE(c5);
    CHECK(is_valid_p4(cycle_graph(5), *c5));
}

TEST_CASE("find_p4 agrees with subset enumeration")
{
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 9));
        Graph g = random_graph(n, Rational(1, 2), rng);
        bool naive = false;
        for (int a = 0; a < n && !naive; ++a)
            for (int b = 0; b < n && !naive; ++b)
                for (int c = 0; c < n && !naive; ++c)
                    for (int d = 0; d < n && !naive; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d)
                            continue;
                        naive = g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c)
                            && !g.adjacent(b, d) && !g.adjacent(a, d);
                    }
        auto w = find_p4(g);
        CHECK(w.has_value() == naive);
        if (w)
            CHECK(is_valid_p4(g, *w));
    }
}

TEST_CASE("find_long_hole agrees with naive induced-cycle enumeration")
{
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = static_cast<int>(rng.uniform(4, 8));
        const Rational p(static_cast<std::int64_t>(rng.uniform(1, 3)), 4);
        Graph g = random_graph(n, p, rng);
        for (int k = 4; k <= n; ++k) {
            HoleSearch s = find_long_hole(g, k);
            CHECK((s.status == SearchStatus::found) == naive_has_long_hole(g, k));
            if (s.witness) {
                CHECK(is_valid_hole(g, *s.witness));
                CHECK(s.witness->length() >= k);
            }
        }
    }
}

TEST_CASE("pair verification")
{
    BipartitePair complete{PairKind::complete, VertexSet({0, 1}, 4), VertexSet({2, 3}, 4), "test"};
    CHECK(verify_pair(complete_graph(4), complete).ok);
    BipartitePair empty{PairKind::empty, VertexSet({0, 1}, 4), VertexSet({2, 3}, 4), "test"};
    CHECK(verify_pair(edgeless_graph(4), empty).ok);
    PairCheck bad = verify_pair(path_graph(4), empty);
    CHECK(!bad.ok);
    REQUIRE(bad.violation);
    CHECK(*bad.violation == std::pair<int, int>{1, 2});
    BipartitePair overlap{PairKind::empty, VertexSet({0}, 4), VertexSet({0}, 4), "test"};
    CHECK_THROWS_AS(verify_pair(edgeless_graph(4), overlap), OverlapError);
    BipartitePair lopsided{PairKind::empty, VertexSet({0}, 4), VertexSet({}, 4), "test"};
    CHECK(!verify_pair(edgeless_graph(4), lopsided).ok);
}

TEST_CASE("clique and stable set verification")
{
    CHECK(verify_clique_or_stable(complete_graph(5), CertKind::clique, VertexSet::all(5)));
    CHECK(!verify_clique_or_stable(cycle_graph(5), CertKind::stable, VertexSet({0, 1}, 5)));
    CHECK(verify_clique_or_stable(cycle_graph(5), CertKind::stable, VertexSet({0, 2}, 5)));
}

TEST_CASE("exact clique and stable oracle")
{
    auto c5 = oracle_max_clique_stable(cycle_graph(5));
    CHECK(c5.omega == 2);
    CHECK(c5.alpha == 2);
    auto k6 = oracle_max_clique_stable(complete_graph(6));
    CHECK(k6.omega == 6);
    CHECK(k6.alpha == 1);
    auto pet = oracle_max_clique_stable(petersen_graph());
    CHECK(pet.omega == 2);
    CHECK(pet.alpha == 4);
    CHECK(verify_clique_or_stable(petersen_graph(), CertKind::stable, VertexSet(pet.stable, 10)));
    CHECK_THROWS_AS(oracle_max_clique_stable(edgeless_graph(26)), RegimeError);

    Rng rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 14));
        Graph g = random_graph(n, Rational(static_cast<std::int64_t>(rng.uniform(1, 4)), 5), rng);
        auto o = oracle_max_clique_stable(g);
        auto [omega, alpha] = naive_omega_alpha(g);
        CHECK(o.omega == omega);
        CHECK(o.alpha == alpha);
        auto oc = oracle_max_clique_stable(complement(g));
        CHECK(o.omega == oc.alpha);
        CHECK(verify_clique_or_stable(g, CertKind::clique, VertexSet(o.clique, n)));
        CHECK(verify_clique_or_stable(g, CertKind::stable, VertexSet(o.stable, n)));
    }
}
