#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sunflower/ksets.hpp"
#include "sunflower/rng.hpp"

using namespace sunflower;
using testing::graph;
using testing::pure;

TEST_CASE("sunflower centres") {
    CHECK(sunflower_centre({}) == KSet{});
    CHECK(sunflower_centre({{1, 2}}) == KSet{1, 2});
    CHECK(sunflower_centre({{1, 2}, {1, 3}, {1, 4}}) == KSet{1});
    CHECK(sunflower_centre({{1, 2}, {3, 4}}) == KSet{});
    CHECK_FALSE(sunflower_centre({{1, 2}, {2, 3}, {1, 3}}));
    CHECK_FALSE(sunflower_centre({{1, 2, 3}, {1, 2, 4}, {1, 5, 6}}));
    CHECK(degenerate_family(1));
    CHECK_FALSE(degenerate_family(2));
}

TEST_CASE("presentations validate their sets") {
    Presentation p{pure(2), 2, {{2, 1}, {3, 4}}};
    p.normalise();
    CHECK(p.sets[0] == KSet{1, 2});
    Presentation dup{pure(2), 2, {{1, 2}, {2, 1}}};
    CHECK_THROWS_AS(dup.normalise(), InvalidArgument);
    Presentation wrong{pure(2), 2, {{1, 2}, {3}}};
    CHECK_THROWS_AS(wrong.normalise(), InvalidArgument);
    Presentation rep{pure(1), 2, {{1, 1}}};
    CHECK_THROWS_AS(rep.normalise(), InvalidArgument);
}

TEST_CASE("sunflower copies agree with brute force") {
    const Structure p3 = graph(3, {{0, 1}, {1, 2}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex u = 0; u < 6; ++u)
            for (Vertex v = u + 1; v < 6; ++v)
                if (rng.coin()) e.push_back({u, v});
        const Presentation p = random_presentation(graph(6, e), 2, 5, seed);
        std::set<std::vector<Vertex>> want;
        for (const auto& m : oracle::embeddings(p3, p.base)) {
            std::vector<KSet> fam;
            for (auto v : m) fam.push_back(p.sets[v]);
            if (oracle::is_sunflower(fam)) want.insert(m);
        }
        std::set<std::vector<Vertex>> got;
        for (const auto& c : find_sunflower_copies(p, p3)) {
            got.insert(c.iso.map);
            std::vector<Vertex> sorted = c.iso.map;
            std::sort(sorted.begin(), sorted.end());
            CHECK(c.petals == sorted);
        }
        CHECK(got == want);
    }
}

TEST_CASE("presentation counts") {
    CHECK(count_presentations(pure(2), 1) == 1);
    CHECK(count_presentations(pure(2), 2) == 2);
    CHECK(count_presentations(pure(2), 3) == 3);
    CHECK(count_presentations(pure(3), 2) == 9);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 1; n * k <= 8; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto want = oracle::all_presentations(n, k);
            std::set<std::vector<KSet>> got;
            enumerate_presentations(pure(n), k, [&](const Presentation& p) {
                CHECK(canonical_presentation(p).sets == p.sets);
                got.insert(oracle::canonical_sets(p.sets));
                return true;
            });
            CHECK(got == want);
            CHECK(count_presentations(pure(n), k) == want.size());
        }
    CHECK_THROWS_AS(count_presentations(pure(4), 3, 10), BudgetExceeded);
}

TEST_CASE("canonical forms are idempotent and invariant under ground renaming") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Presentation p = random_presentation(pure(4), 3, 9, seed);
        const Presentation c = canonical_presentation(p);
        CHECK(canonical_presentation(c).sets == c.sets);
        Rng rng(seed);
        std::vector<Ground> perm(100);
        for (Ground i = 0; i < 100; ++i) perm[i] = 100 + i;
        rng.shuffle(perm);
        Presentation q = p;
        for (auto& s : q.sets)
            for (auto& x : s) x = perm[x];
        q.normalise();
        CHECK(canonical_presentation(q).sets == c.sets);
    }
}

TEST_CASE("random presentations are distinct k-sets in range and seeded") {
    const auto p = random_presentation(pure(5), 2, 6, 3);
    CHECK_NOTHROW(p.validate());
    for (const auto& s : p.sets)
        for (auto x : s) CHECK(x < 6);
    CHECK(p.sets == random_presentation(pure(5), 2, 6, 3).sets);
    CHECK_THROWS(random_presentation(pure(4), 2, 3, 0)); // only three 2-subsets of [3]
}

TEST_CASE("colour encoding: sunflower copies are exactly mono or hetero copies") {
    const Structure p3 = graph(3, {{0, 1}, {1, 2}});
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Rng rng(seed);
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex u = 0; u < 7; ++u)
            for (Vertex v = u + 1; v < 7; ++v)
                if (rng.coin()) e.push_back({u, v});
        const Structure m = graph(7, e);
        Colouring chi;
        for (Vertex v = 0; v < 7; ++v) chi.values.push_back(10 * rng.below(3));
        const Presentation p = encode_colouring(m, chi);
        CHECK(p.k == 2);
        for (Vertex v = 0; v < 7; ++v) CHECK(p.sets[v][0] == v);
        const auto r = colour_copy_search(m, chi, p3);
        CHECK(find_sunflower_copies(p, p3).size() == r.mono + r.hetero);
    }
}

TEST_CASE("small witness checks") {
    const Structure k2 = graph(2, {{0, 1}});
    // any two distinct sets form a sunflower
    CHECK(verify_witness(k2, k2, 3, VerifyMode::Exhaustive).pass);
    // two non-adjacent vertices contain no edge
    const auto v = verify_witness(graph(2, {}), k2, 1, VerifyMode::Exhaustive);
    CHECK_FALSE(v.pass);
    REQUIRE(v.counterexample);
    CHECK(find_sunflower_copies(*v.counterexample, k2).empty());
    // three 2-sets on a triangle: {01, 12, 02} has no sunflower triangle
    const Structure k3 = graph(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto t = verify_witness(k3, k3, 2, VerifyMode::Exhaustive);
    CHECK_FALSE(t.pass);
    CHECK(verify_witness(k3, graph(1, {}), 2, VerifyMode::Random, 50, 1).pass);
    CHECK(verify_witness(k3, graph(1, {}), 2, VerifyMode::Random, 50, 1).checked == 50);
}
