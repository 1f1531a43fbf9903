#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sunflower/amalgam.hpp"
#include "sunflower/classes.hpp"
#include "sunflower/qftype.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/search.hpp"

using namespace sunflower;
using testing::graph;

namespace {

Structure random_graph(std::size_t n, Rng& rng, unsigned density = 2) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.below(density) == 0) e.push_back({u, v});
    return graph(n, e);
}

Structure random_mixed(std::size_t n, Rng& rng) {
    Signature sig({{"P", 1}, {"R", 2}, {"T", 3}});
    std::vector<std::vector<Tuple>> rels(3);
    for (Vertex u = 0; u < n; ++u) {
        if (rng.coin()) rels[0].push_back({u});
        for (Vertex v = 0; v < n; ++v)
            if (u != v && rng.below(3) == 0) rels[1].push_back({u, v});
    }
    for (int i = 0; i < 4; ++i) {
        Tuple t{Vertex(rng.below(n)), Vertex(rng.below(n)), Vertex(rng.below(n))};
        rels[2].push_back(t);
    }
    return Structure(sig, n, rels);
}

} // namespace

TEST_CASE("structure storage is sorted and duplicate-free") {
    Structure s(Signature({{"E", 2}}), 3, {{{2, 1}, {0, 1}, {0, 1}}});
    CHECK(s.tuple_count(0) == 2);
    CHECK(s.tuples(0) == std::vector<Tuple>{{0, 1}, {2, 1}});
    CHECK(s.holds(0, {2, 1}));
    CHECK_FALSE(s.holds(0, {1, 2}));
    CHECK(s.neighbours(1).size() == 2);
    CHECK_THROWS_AS(Structure(Signature({{"E", 2}}), 2, {{{0, 5}}}), InvalidArgument);
    CHECK_THROWS_AS(Structure(Signature({{"E", 2}}), 2, {{{0}}}), InvalidArgument);
}

TEST_CASE("induced and relabelled substructures") {
    const Structure p4 = graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const std::vector<Vertex> vs{1, 2, 3};
    const Structure sub = p4.induced(vs);
    CHECK(sub == graph(3, {{0, 1}, {1, 2}}));
    const std::vector<Vertex> perm{3, 2, 1, 0};
    CHECK(p4.relabelled(perm) == graph(4, {{3, 2}, {2, 1}, {1, 0}}));
}

TEST_CASE("embedding search agrees with brute force") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const bool mixed = seed % 2;
        const Structure a = mixed ? random_mixed(3, rng) : random_graph(3 + rng.below(2), rng);
        const Structure b = mixed ? random_mixed(6, rng) : random_graph(7, rng);
        std::vector<std::vector<Vertex>> got;
        for (const auto& e : find_embeddings(a, b)) got.push_back(e.map);
        auto want = oracle::embeddings(a, b);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        for (const auto& m : want) CHECK(is_embedding(a, b, m));
    }
}

TEST_CASE("pins, allow and prune restrict the search") {
    const Structure k2 = graph(2, {{0, 1}});
    const Structure c5 = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(count_embeddings(k2, c5) == 10);
    SearchOptions opt;
    opt.pins = {{0, 2}};
    CHECK(find_embeddings(k2, c5, kUnlimited, opt).size() == 2);
    SearchOptions allow;
    allow.allow = [](Vertex, Vertex c) { return c != 0; };
    CHECK(find_embeddings(k2, c5, kUnlimited, allow).size() == 6);
    SearchOptions prune;
    prune.prune = [](std::span<const Vertex> m, Vertex x) { return x == 0 || m[1] > m[0]; };
    CHECK(find_embeddings(k2, c5, kUnlimited, prune).size() == 5);
}

TEST_CASE("isomorphism: relabelled copies found, non-isomorphic pairs rejected") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed + 100);
        const Structure s = random_mixed(7, rng);
        std::vector<Vertex> perm(7);
        for (Vertex i = 0; i < 7; ++i) perm[i] = i;
        rng.shuffle(perm);
        const Structure t = s.relabelled(perm);
        auto iso = are_isomorphic(s, t);
        REQUIRE(iso);
        CHECK(is_embedding(s, t, iso->map));
    }
    const Structure c6 = graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    const Structure two_tri = graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(are_isomorphic(c6, two_tri));
}

TEST_CASE("type patterns and qf types") {
    CHECK(type_patterns(2, 1) == std::vector<std::vector<int>>{{-1, -1}, {-1, 0}, {0, -1}});
    CHECK(type_patterns(1, 3) == std::vector<std::vector<int>>{{-1}});
    // realising the type of v over A gives a point with the same type
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const Structure s = random_mixed(6, rng);
        const std::vector<Vertex> a{0, 1, 2};
        const std::vector<Vertex> base_vs{0, 1, 2};
        const Vertex v = 3 + static_cast<Vertex>(rng.below(3));
        QfType p = qf_type(s, v, a);
        const Structure base = s.induced(base_vs);
        const Structure r = realise(base, p);
        CHECK(r.size() == 4);
        const std::vector<Vertex> ps{0, 1, 2};
        CHECK(qf_type(r, 3, ps).same_atoms(p));
        CHECK(r.induced(base_vs) == base);
    }
    QfType bad = empty_type(Signature({{"E", 2}}), {0});
    bad.atoms[0].pop_back();
    CHECK_THROWS_AS(validate_type(Signature({{"E", 2}}), bad), InvalidArgument);
}

TEST_CASE("class membership matches a brute-force triangle check") {
    const ClassSpec k3 = classes::knfree(3);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const Structure g = random_graph(7, rng, 3);
        bool tri = false;
        for (Vertex u = 0; u < 7; ++u)
            for (Vertex v = u + 1; v < 7; ++v)
                for (Vertex w = v + 1; w < 7; ++w)
                    tri = tri || (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w));
        CHECK(satisfies_class(g, k3) == !tri);
    }
    // directed edges are not graphs
    CHECK_FALSE(satisfies_class(Structure(Signature({{"E", 2}}), 2, {{{0, 1}}}), classes::graphs()));
}

TEST_CASE("violated_through detects new forbidden copies through the changed vertices") {
    const ClassSpec k3 = classes::knfree(3);
    MutableStructure m(graph(3, {{0, 1}, {1, 2}}), 3);
    const std::vector<Vertex> through{0, 2};
    CHECK_FALSE(violated_through(m, k3, through));
    const std::vector<Vertex> e02{0, 2}, e20{2, 0};
    m.add_tuple(0, e02);
    m.add_tuple(0, e20);
    CHECK(violated_through(m, k3, through));
}

TEST_CASE("transitivity and irreducibility") {
    CHECK(is_transitive(classes::graphs()));
    CHECK(is_transitive(classes::knfree(3)));
    CHECK(is_transitive(classes::pure()));
    CHECK_FALSE(is_transitive(classes::two_types()));
    const ClassSpec rb = classes::rb();
    for (const auto& f : rb.forbidden()) CHECK(is_irreducible(f));
    CHECK(is_irreducible(graph(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(is_irreducible(graph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("admissible types over a point in graphs: adjacent or not") {
    const auto types = admissible_types(graph(1, {}), classes::graphs());
    CHECK(types.size() == 2);
    for (const auto& p : types) CHECK(satisfies_class(realise(graph(1, {}), p), classes::graphs()));
    // over an edge in K3-free graphs the point cannot see both ends
    const auto t3 = admissible_types(graph(2, {{0, 1}}), classes::knfree(3));
    CHECK(t3.size() == 3);
}

TEST_CASE("class members on small vertex counts") {
    CHECK(class_members(classes::graphs(), 3).size() == 4);
    CHECK(class_members(classes::knfree(3), 3).size() == 3);
    CHECK(class_members(classes::graphs(), 4).size() == 11);
    CHECK(class_members(classes::pure(), 5).size() == 1);
}

TEST_CASE("free amalgam of two edges over a point is a path") {
    const Structure a = graph(1, {});
    const Structure e = graph(2, {{0, 1}});
    const auto am = free_amalgam(a, e, Embedding{{1}}, e, Embedding{{0}});
    CHECK(am.result.size() == 3);
    CHECK(are_isomorphic(am.result, graph(3, {{0, 1}, {1, 2}})));
    CHECK(is_embedding(e, am.result, am.g0.map));
    CHECK(is_embedding(e, am.result, am.g1.map));
}

TEST_CASE("3-DAP over the empty set") {
    const auto tri = check_3dap_over_empty(classes::knfree(3), 1);
    CHECK_FALSE(tri.pass);
    REQUIRE(tri.counterexample);
    for (const auto& p : tri.counterexample->pair) CHECK(p.adjacent(0, 1));
    CHECK(check_3dap_over_empty(classes::graphs(), 2).pass);
    CHECK(check_3dap_over_empty(classes::kn_hyper_free(4, 3), 1).pass);
}

TEST_CASE("the 5-vertex 3-hypergraph F") {
    const Structure f = classes::f_hypergraph();
    CHECK(f.size() == 5);
    CHECK(is_irreducible(f));
    CHECK_FALSE(satisfies_class(f, classes::f_free_3hyper()));
}
