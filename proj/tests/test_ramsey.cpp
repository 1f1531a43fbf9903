#include <doctest.h>

#include <cmath>
#include <functional>
#include <set>

#include "oracles.hpp"
#include "sunflower/ramsey.hpp"
#include "sunflower/rng.hpp"

using namespace sunflower;

namespace {

BigInt fact(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// binom(x, n) as a falling factorial over n!
Rational falling(const Rational& x, unsigned n) {
    Rational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= x - i;
    return r / Rational(fact(n));
}

PartitionedHypergraph random_hypergraph(unsigned n, std::size_t c, std::size_t edges, Rng& rng) {
    PartitionedHypergraph h;
    h.n = n;
    for (unsigned i = 0; i < n; ++i) {
        h.parts.emplace_back();
        for (std::size_t j = 0; j < c; ++j) h.parts.back().push_back(static_cast<Vertex>(i * c + j));
    }
    const std::size_t V = n * c;
    std::set<std::vector<Vertex>> seen;
    for (std::size_t tries = 0; seen.size() < edges && tries < 1000; ++tries) {
        std::set<Vertex> e;
        while (e.size() < n) e.insert(static_cast<Vertex>(rng.below(V)));
        seen.insert(std::vector<Vertex>(e.begin(), e.end()));
    }
    h.edges.assign(seen.begin(), seen.end());
    return h;
}

} // namespace

TEST_CASE("suitable parameters re-derived from their definitions") {
    for (auto [n, a1] : std::vector<std::pair<unsigned, Rational>>{
             {2, Rational(1, 2)}, {2, Rational(1, 10)}, {3, Rational(1, 6)}, {3, Rational(1, 2)}, {4, Rational(1, 3)}}) {
        CAPTURE(n);
        const auto sp = suitable_params(n, a1);
        Rational eps(1, 2);
        while (!(eps * n < 1 && rpow(1 - eps * n, n) > 1 - a1)) eps /= 2;
        CHECK(sp.epsilon == eps);
        CHECK(sp.a0 == rpow(eps, n) / Rational(2 * fact(n)));
        auto f = [&](std::uint64_t c) { return falling(Rational(c) * eps, n) - sp.a0 * rpow(Rational(c), n); };
        if (sp.c_min > 1) CHECK_FALSE(f(sp.c_min - 1) > 0);
        if (sp.c_min < 5000)
            for (std::uint64_t c = sp.c_min; c < sp.c_min + 300; ++c) CHECK(f(c) > 0);
        CHECK(check_suitable_params(sp));
        auto broken = sp;
        broken.c_min = sp.c_min - 1;
        CHECK_FALSE(check_suitable_params(broken));
    }
    const auto s2 = suitable_params(2, Rational(1, 2));
    CHECK(s2.epsilon == Rational(1, 8));
    CHECK(s2.a0 == Rational(1, 256));
    CHECK(s2.c_min == 17);
    CHECK_THROWS_AS(suitable_params(1, Rational(1, 2)), InvalidArgument);
    CHECK_THROWS_AS(suitable_params(2, Rational(1)), InvalidArgument);
}

TEST_CASE("suitable counts: tally, enumeration and brute force agree") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Rng rng(seed);
        const unsigned n = 2 + seed % 2;
        const std::size_t c = 4;
        std::vector<std::vector<Vertex>> parts(n);
        for (unsigned i = 0; i < n; ++i)
            for (std::size_t j = 0; j < c; ++j) parts[i].push_back(static_cast<Vertex>(i * c + j));
        std::vector<Colouring> cols(2);
        for (auto& chi : cols)
            for (std::size_t v = 0; v < n * c; ++v) chi.values.push_back(rng.below(3));

        // brute force
        std::vector<std::vector<BigInt>> mono(2, std::vector<BigInt>(n, 0));
        std::vector<BigInt> hetero(2, 0);
        BigInt joint = 0;
        for (unsigned i = 0; i < n; ++i)
            for (std::uint64_t mask = 0; mask < (1u << c); ++mask) {
                if (static_cast<unsigned>(__builtin_popcountll(mask)) != n) continue;
                bool all = true;
                for (std::size_t r = 0; r < 2; ++r) {
                    std::set<std::uint64_t> seen;
                    for (std::size_t j = 0; j < c; ++j)
                        if ((mask >> j) & 1) seen.insert(cols[r].values[parts[i][j]]);
                    mono[r][i] += seen.size() == 1;
                    all = all && seen.size() == 1;
                }
                joint += all;
            }
        std::vector<std::size_t> pick(n, 0);
        for (;;) {
            bool all = true;
            for (std::size_t r = 0; r < 2; ++r) {
                std::set<std::uint64_t> seen;
                for (unsigned i = 0; i < n; ++i) seen.insert(cols[r].values[parts[i][pick[i]]]);
                hetero[r] += seen.size() == n;
                all = all && seen.size() == n;
            }
            joint += all;
            unsigned i = 0;
            while (i < n && ++pick[i] == c) pick[i++] = 0;
            if (i == n) break;
        }
        for (auto m : {CountMethod::Enumerate, CountMethod::Tally}) {
            const auto got = count_suitable(parts, cols, m);
            CHECK(got.mono == mono);
            CHECK(got.hetero == hetero);
            CHECK(got.jointly_suitable == joint);
        }
    }
}

TEST_CASE("default epsilon and the edge probability grid") {
    CHECK(default_epsilon(4) == Rational(1, 8));
    CHECK(default_epsilon(3) == Rational(1, 4));
    CHECK(default_epsilon(2) == Rational(1, 4));
    CHECK(default_epsilon(5) == Rational(1, 8));
    CHECK(default_epsilon(8) == Rational(1, 16));
    const Rational grid(BigInt(1), BigInt(1) << 48);
    for (unsigned n : {2u, 3u})
        for (std::uint64_t c : {2ull, 7ull, 64ull, 1000ull}) {
            for (unsigned t : {2u, 3u}) {
                const Rational eps(BigInt(1), BigInt(1) << t);
                const Rational p = edge_probability(c, n, eps);
                const Rational q = p * rpow(Rational(c), n - 1);
                CHECK(denominator(Rational(q / grid)) == 1);
                const unsigned pw = 1u << t;
                CHECK(rpow(q, pw) <= Rational(c));
                CHECK(rpow(q + grid, pw) > Rational(c));
            }
        }
    const auto gp = make_gen_params(2, 1, 4, 64);
    CHECK(gp.epsilon == Rational(1, 8));
    CHECK(gp.p == edge_probability(64, 2, Rational(1, 8)));
}

TEST_CASE("failure bound formula") {
    const auto gp = make_gen_params(2, 1, 4, 1024);
    const long double c = 1024, n = 2, s = 1, eps = 0.125L, a = 0.01L;
    const long double want = -a * std::pow(c, 1 + eps) + (c * n * s + c * n + 1) * std::log(c) + c * n * s * std::log(n);
    const auto fb = failure_bound(gp, Rational(1, 100));
    CHECK(std::abs(fb.log_value - want) < 1e-6L * std::abs(want));
    CHECK(fb.vacuous == (want >= 0));
}

TEST_CASE("potential cycle counts match enumeration") {
    for (std::size_t V : {4u, 5u, 6u})
        for (unsigned n : {2u, 3u})
            for (unsigned m : {2u, 3u}) {
                if (m > V) continue;
                CHECK(count_potential_cycles(V, n, m) == oracle::potential_cycles(V, n, m));
            }
}

TEST_CASE("girth: hand examples and brute force") {
    PartitionedHypergraph sq;
    sq.n = 2;
    sq.parts = {{0, 1}, {2, 3}};
    sq.edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    CHECK(hypergraph_girth(sq) == 4);
    PartitionedHypergraph two;
    two.n = 3;
    two.parts = {{0, 1}, {2, 3}, {4, 5}};
    two.edges = {{0, 1, 2}, {0, 1, 3}};
    CHECK(hypergraph_girth(two) == 2);
    PartitionedHypergraph tree;
    tree.n = 2;
    tree.parts = {{0, 1}, {2, 3}};
    tree.edges = {{0, 2}, {1, 2}};
    CHECK(hypergraph_girth(tree) == kInfiniteGirth);
    CHECK(shortest_cycle_edges(tree).empty());

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const unsigned n = 2 + seed % 2;
        const auto h = random_hypergraph(n, n == 2 ? 4 : 3, 2 + rng.below(5), rng);
        CHECK_NOTHROW(h.validate());
        const std::size_t g = hypergraph_girth(h);
        CHECK(g == oracle::girth(h, h.vertex_count()));
        const auto cyc = shortest_cycle_edges(h);
        if (g == kInfiniteGirth) {
            CHECK(cyc.empty());
            continue;
        }
        REQUIRE(cyc.size() == g);
        // the cycle edges form a sub-hypergraph of the same girth
        PartitionedHypergraph sub = h;
        sub.edges.clear();
        for (auto e : cyc) sub.edges.push_back(h.edges[e]);
        CHECK(oracle::girth(sub, g) == g);
    }
}

TEST_CASE("generated witness hypergraphs") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        WitnessGenOptions opt;
        opt.c_override = 8;
        const auto h = gen_witness_hypergraph(2, 1, 4, seed, opt);
        CHECK_NOTHROW(h.validate());
        CHECK(h.parts.size() == 2);
        for (const auto& p : h.parts) CHECK(p.size() == 8);
        CHECK(h.parts[1][0] == 8);
        const auto g = hypergraph_girth(h);
        CHECK((g == kInfiniteGirth || g >= 4));
        CHECK(h.meta.at("seed") == seed);
        CHECK(h.meta.contains("removed"));
        CHECK(h.meta.contains("few_removals"));
        const auto again = gen_witness_hypergraph(2, 1, 4, seed, opt);
        CHECK(again.edges == h.edges);
    }
    WitnessGenOptions opt;
    opt.c_override = 4;
    const auto h3 = gen_witness_hypergraph(3, 1, 5, 1, opt);
    const auto g3 = hypergraph_girth(h3);
    CHECK((g3 == kInfiniteGirth || g3 >= 5));
}

TEST_CASE("the colouring adversary") {
    // no edges: any proper data is a counterexample
    PartitionedHypergraph empty;
    empty.n = 2;
    empty.parts = {{0, 1}, {2, 3}};
    const auto r0 = vcvrp_adversary(empty, 1, AdversaryMode::Exhaustive);
    REQUIRE(r0.counterexample);
    CHECK(is_vcvrp_counterexample(empty, *r0.counterexample));

    // one transversal edge is never a witness on its own; a colouring making
    // it monochromatic refutes it
    PartitionedHypergraph one = empty;
    one.edges = {{0, 2}};
    CHECK(is_vcvrp_counterexample(one, {Colouring{{0, 0, 0, 0}}}));
    CHECK_FALSE(is_vcvrp_counterexample(one, {Colouring{{0, 0, 1, 1}}}));
    // an internal edge kills the constant colouring
    PartitionedHypergraph inner = empty;
    inner.edges = {{0, 1}};
    CHECK_FALSE(is_vcvrp_counterexample(inner, {Colouring{{0, 0, 0, 0}}}));

    // s = 1 against brute force over every colouring with at most V colours
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed + 300);
        const auto h = random_hypergraph(2, 3, 2 + rng.below(8), rng);
        const std::size_t V = h.vertex_count();
        bool any = false;
        Colouring chi;
        chi.values.assign(V, 0);
        std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t v, std::uint64_t used) {
            if (any) return;
            if (v == V) {
                any = is_vcvrp_counterexample(h, {chi});
                return;
            }
            for (std::uint64_t col = 0; col <= used && col < V; ++col) {
                chi.values[v] = col;
                rec(v + 1, std::max(used, col + 1));
            }
        };
        rec(0, 0);
        const auto r = vcvrp_adversary(h, 1, AdversaryMode::Exhaustive);
        CHECK(r.counterexample.has_value() == any);
        if (r.counterexample) CHECK(is_vcvrp_counterexample(h, *r.counterexample));
        const auto rr = vcvrp_adversary(h, 2, AdversaryMode::Random, 200, seed);
        if (rr.counterexample) CHECK(is_vcvrp_counterexample(h, *rr.counterexample));
    }
}
