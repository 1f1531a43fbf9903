#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/witness.hpp"

using namespace sunflower;

// Extraction either returns a certificate that checks out or reports failure;
// it never returns a wrong answer.
TEST_CASE("extraction on a pure chain never returns an invalid certificate") {
    const Structure b = testing::pure(3);
    const auto chain = build_witness_chain(classes::pure(), b, 2, 1);
    const Structure& top = chain.top();
    MESSAGE("|C_2| = " << top.size());
    std::size_t ok = 0, failed = 0, mono = 0;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        const std::size_t ground = t % 2 ? 3 * top.size() / 2 : 2 * top.size();
        const auto p = random_presentation(top, 2, ground, Rng::derive(77, t));
        const auto r = extract_sunflower(chain, p, 2);
        if (!r.ok()) {
            ++failed;
            REQUIRE(r.counterexample);
            continue;
        }
        ++ok;
        mono += r.trace.steps.front().kase == ExtractionCase::Mono;
        REQUIRE(verify_certificate(*r.cert, b, p));
        REQUIRE(verify_trace(chain, p, 2, r.trace, *r.cert));
        std::vector<KSet> fam;
        for (auto v : r.cert->petals) fam.push_back(p.sets[v]);
        REQUIRE(oracle::is_sunflower(fam));
        REQUIRE(r.cert->centre.size() < 2);
    }
    MESSAGE("certified " << ok << ", failed " << failed << ", mono first step " << mono);
    CHECK(ok + failed == 10000);
}
