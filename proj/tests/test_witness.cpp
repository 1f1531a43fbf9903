#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/witness.hpp"

using namespace sunflower;
using testing::graph;

namespace {

const Structure& k2() {
    static const Structure s = graph(2, {{0, 1}});
    return s;
}

const WitnessChain& k2_chain() {
    static const WitnessChain c = build_witness_chain(classes::graphs(), k2(), 2, 1);
    return c;
}

bool sets_disjoint(const Presentation& p, const std::vector<Vertex>& vs) {
    std::set<Ground> seen;
    std::size_t total = 0;
    for (auto v : vs) {
        seen.insert(p.sets[v].begin(), p.sets[v].end());
        total += p.sets[v].size();
    }
    return seen.size() == total;
}

} // namespace

TEST_CASE("pasting copies of B onto hyperedges") {
    PartitionedHypergraph h;
    h.n = 2;
    h.parts = {{0, 1}, {2, 3}};
    h.edges = {{0, 2}, {1, 3}};
    const auto p = paste(h, k2(), classes::graphs());
    CHECK(p.structure == graph(4, {{0, 2}, {1, 3}}));
    CHECK(p.part_of == std::vector<Vertex>{0, 0, 1, 1});

    // a path pasted on 3-edges: sorted edge vertices take B's vertices in order
    PartitionedHypergraph h3;
    h3.n = 3;
    h3.parts = {{0, 1}, {2, 3}, {4, 5}};
    h3.edges = {{0, 2, 4}};
    const auto p3 = paste(h3, graph(3, {{0, 1}, {1, 2}}), classes::graphs());
    CHECK(p3.structure == graph(6, {{0, 2}, {2, 4}}));

    PartitionedHypergraph shortc = h3;
    shortc.edges = {{0, 2, 4}, {0, 2, 5}};
    CHECK_THROWS_AS(paste(shortc, graph(3, {{0, 1}, {1, 2}}), classes::graphs()), InvalidArgument);
    CHECK_THROWS_AS(paste(h3, k2(), classes::graphs()), InvalidArgument);
    const Signature ps({{"P", 1}});
    const Structure mixed(ps, 2, {{{0}}});
    CHECK_THROWS_AS(paste(h, mixed, classes::two_types()), InvalidArgument);
}

TEST_CASE("witness chains") {
    const auto one = build_witness_chain(classes::graphs(), k2(), 1, 3);
    CHECK(one.k() == 1);
    CHECK(one.top() == k2());
    CHECK_NOTHROW(validate_chain(one));

    const auto& two = k2_chain();
    CHECK(two.k() == 2);
    CHECK(two.level(2).s == 4);
    CHECK(two.level(1).structure == k2());
    CHECK_NOTHROW(validate_chain(two));
    for (auto p : two.level(2).part_of) CHECK(p < 2);
    CHECK(satisfies_class(two.top(), classes::graphs()));
    CHECK(build_witness_chain(classes::graphs(), k2(), 2, 1).top() == two.top());

    WitnessChain broken = two;
    broken.levels[1].s = 3;
    CHECK_THROWS_AS(validate_chain(broken), InvalidArgument);

    const Signature ps({{"P", 1}});
    CHECK_THROWS_WITH_AS(build_witness_chain(classes::two_types(), Structure(ps, 1, {{}}), 2, 1),
                         doctest::Contains("requires transitive"), InvalidArgument);
    CHECK_THROWS_WITH_AS(build_witness_chain(classes::knfree(3), graph(3, {{0, 1}, {1, 2}, {0, 2}}), 2, 1),
                         doctest::Contains("not in the class"), InvalidArgument);
    ChainOptions tight;
    tight.max_colourings = 2;
    CHECK_THROWS_AS(build_witness_chain(classes::graphs(), k2(), 2, 1, tight), BudgetExceeded);
}

TEST_CASE("extraction on hand-made presentations") {
    // one level: any two singletons form a sunflower with empty centre
    const auto one = build_witness_chain(classes::graphs(), k2(), 1, 3);
    const Presentation p1{k2(), 1, {{3}, {5}}};
    const auto r1 = extract_sunflower(one, p1, 1);
    REQUIRE(r1.ok());
    CHECK(r1.cert->centre.empty());
    CHECK(verify_certificate(*r1.cert, k2(), p1));
    CHECK(verify_trace(one, p1, 1, r1.trace, *r1.cert));

    const auto& chain = k2_chain();
    const Structure& top = chain.top();
    // every set shares the element 7
    Presentation shared{top, 2, {}};
    for (Vertex v = 0; v < top.size(); ++v) shared.sets.push_back({7, 100 + v});
    const auto rs = extract_sunflower(chain, shared, 2);
    REQUIRE(rs.ok());
    CHECK(rs.cert->centre == KSet{7});
    CHECK(rs.trace.steps.front().kase == ExtractionCase::Mono);
    CHECK(rs.trace.steps.front().lambda == Ground{7});
    CHECK(verify_trace(chain, shared, 2, rs.trace, *rs.cert));

    // pairwise disjoint sets: straight to a transversal copy
    Presentation disjoint{top, 2, {}};
    for (Vertex v = 0; v < top.size(); ++v) disjoint.sets.push_back({2 * v, 2 * v + 1});
    const auto rd = extract_sunflower(chain, disjoint, 2);
    REQUIRE(rd.ok());
    REQUIRE(rd.trace.steps.size() == 1);
    CHECK(rd.trace.steps[0].kase == ExtractionCase::Transversal);
    CHECK(rd.cert->centre.empty());
    CHECK(verify_trace(chain, disjoint, 2, rd.trace, *rd.cert));

    CHECK_THROWS_AS(extract_sunflower(chain, p1, 2), InvalidArgument);
}

TEST_CASE("certificate checks reject bad certificates") {
    const Structure p3 = graph(3, {{0, 1}, {1, 2}});
    const Presentation p{p3, 2, {{0, 1}, {0, 2}, {0, 3}}};
    SunflowerCert good{Embedding{{0, 1, 2}}, {0, 1, 2}, {0}};
    CHECK(verify_certificate(good, p3, p));
    auto wrong_centre = good;
    wrong_centre.centre = {};
    CHECK_FALSE(verify_certificate(wrong_centre, p3, p));
    auto not_embedding = good;
    not_embedding.iso.map = {1, 0, 2};
    not_embedding.petals = {0, 1, 2};
    CHECK_FALSE(verify_certificate(not_embedding, p3, p));
    auto bad_petals = good;
    bad_petals.petals = {0, 1};
    CHECK_FALSE(verify_certificate(bad_petals, p3, p));
    const Presentation q{p3, 2, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK_FALSE(verify_certificate(SunflowerCert{Embedding{{0, 1, 2}}, {0, 1, 2}, {1}}, p3, q));
}

TEST_CASE("extraction is sound on random presentations") {
    const auto& chain = k2_chain();
    const Structure& top = chain.top();
    std::size_t ok = 0;
    for (std::uint64_t t = 0; t < 300; ++t) {
        const std::size_t ground = t % 3 == 0 ? 2 * top.size() : 24;
        auto p = random_presentation(top, 2, ground, t);
        // relabel the base so extraction has to transport
        std::vector<Vertex> perm(top.size());
        for (Vertex i = 0; i < perm.size(); ++i) perm[i] = i;
        Rng rng(t);
        if (t % 2) rng.shuffle(perm);
        Presentation q{top.relabelled(perm), 2, std::vector<KSet>(top.size())};
        for (Vertex v = 0; v < top.size(); ++v) q.sets[perm[v]] = p.sets[v];
        const auto r = extract_sunflower(chain, q, 2);
        if (!r.ok()) {
            REQUIRE(r.counterexample);
            continue;
        }
        ++ok;
        CHECK(verify_certificate(*r.cert, k2(), q));
        CHECK(verify_trace(chain, q, 2, r.trace, *r.cert));
        CHECK(r.cert->centre.size() < 2);
        std::vector<KSet> fam;
        for (auto v : r.cert->petals) fam.push_back(q.sets[v]);
        CHECK(oracle::is_sunflower(fam));
    }
    CHECK(ok > 250);
}

TEST_CASE("tampered traces are rejected") {
    const auto& chain = k2_chain();
    const Structure& top = chain.top();
    Presentation shared{top, 2, {}};
    for (Vertex v = 0; v < top.size(); ++v) shared.sets.push_back({7, 100 + v});
    const auto r = extract_sunflower(chain, shared, 2);
    REQUIRE(r.ok());
    auto lam = r.trace;
    lam.steps.front().lambda = 8;
    CHECK_FALSE(verify_trace(chain, shared, 2, lam, *r.cert));
    auto kase = r.trace;
    kase.steps.front().kase = ExtractionCase::Transversal;
    CHECK_FALSE(verify_trace(chain, shared, 2, kase, *r.cert));
    auto copy = r.trace;
    std::swap(copy.steps.back().copy.front(), copy.steps.back().copy.back());
    CHECK_FALSE(verify_trace(chain, shared, 2, copy, *r.cert));
    auto cert = *r.cert;
    cert.centre = {};
    CHECK_FALSE(verify_trace(chain, shared, 2, r.trace, cert));
}

TEST_CASE("a transversal copy is heterochromatic under all coordinate colourings iff its sets are disjoint") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const std::size_t j = 2 + seed % 2, parts = 3;
        const auto p = random_presentation(testing::pure(6), j, 3 * j + rng.below(6), seed);
        std::vector<Vertex> part_of{0, 0, 1, 1, 2, 2};
        const std::vector<Vertex> copy{Vertex(rng.below(2)), Vertex(2 + rng.below(2)), Vertex(4 + rng.below(2))};
        CHECK(heterochromatic_under_all(p, part_of, parts, copy) == sets_disjoint(p, copy));
    }
    const auto p = random_presentation(testing::pure(2), 2, 4, 1);
    const std::vector<Vertex> part_of{0, 1}, copy{0, 1};
    const std::vector<std::size_t> f{1, 0};
    const auto chi = coordinate_colouring(p, part_of, f);
    CHECK(chi.values[0] == p.sets[0][1]);
    CHECK(chi.values[1] == p.sets[1][0]);
    const Presentation apart{testing::pure(2), 2, {{0, 1}, {2, 3}}};
    CHECK(heterochromatic_under_all(apart, part_of, 2, copy));
    CHECK_THROWS_AS(heterochromatic_under_all(apart, part_of, 2, copy, 2), BudgetExceeded);
}
