#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "sunflower/io.hpp"

using namespace sunflower;
using testing::graph;

TEST_CASE("structures and classes round-trip") {
    const Signature sig({{"P", 1}, {"R", 2}, {"T", 3}});
    const Structure s(sig, 4, {{{1}, {3}}, {{0, 1}, {2, 3}}, {{0, 1, 2}}});
    CHECK(structure_from_json(to_json(s)) == s);
    CHECK(to_json(s).at("relations").at("R") == Json::parse("[[0,1],[2,3]]"));

    for (const std::string name : {"graphs", "knfree(3)", "rb", "f-free-3hyper", "pure"}) {
        CAPTURE(name);
        const ClassSpec k = classes::by_name(name);
        const ClassSpec back = class_from_json(to_json(k));
        CHECK(back.name() == k.name());
        CHECK(back.signature() == k.signature());
        CHECK(back.forbidden().size() == k.forbidden().size());
        CHECK(class_from_json(Json(name)).name() == k.name());
    }
    CHECK_THROWS(class_from_json(Json("no-such-class")));
}

TEST_CASE("types, partitions, colourings and presentations round-trip") {
    const Structure p3 = graph(3, {{0, 1}, {1, 2}});
    const QfType t = qf_type(p3, 1, std::vector<Vertex>{0, 2});
    CHECK(qftype_from_json(to_json(t)).same_atoms(t));
    CHECK(qftype_from_json(to_json(t)).params == t.params);

    const Partition part{{{0, 2}, {1}}};
    CHECK(partition_from_json(to_json(part)).blocks == part.blocks);
    const Colouring chi{{3, 1, 4}};
    CHECK(colouring_from_json(to_json(chi)).values == chi.values);

    const Presentation p{p3, 2, {{0, 1}, {0, 2}, {0, 3}}};
    const Presentation back = presentation_from_json(to_json(p));
    CHECK(back.sets == p.sets);
    CHECK(back.base == p3);
    Json bare = to_json(p);
    bare.erase("base");
    CHECK(presentation_from_json(bare, &p3).sets == p.sets);
    // sets are normalised on read
    Json unsorted = Json::parse(R"({"k":2,"sets":[[1,0],[2,0],[3,0]]})");
    CHECK(presentation_from_json(unsorted, &p3).sets == p.sets);

    const SunflowerCert c{Embedding{{2, 1, 0}}, {0, 1, 2}, {0}};
    const auto cb = cert_from_json(to_json(c));
    CHECK(cb.iso.map == c.iso.map);
    CHECK(cb.petals == c.petals);
    CHECK(cb.centre == c.centre);
}

TEST_CASE("hypergraphs, chains and traces round-trip") {
    WitnessGenOptions opt;
    opt.c_override = 6;
    const auto h = gen_witness_hypergraph(2, 1, 4, 3, opt);
    const auto hb = hypergraph_from_json(to_json(h));
    CHECK(hb.edges == h.edges);
    CHECK(hb.parts == h.parts);
    CHECK(hb.meta == h.meta);

    ChainOptions copt;
    copt.c_override = 6;
    const auto chain = build_witness_chain(classes::graphs(), graph(2, {{0, 1}}), 2, 5, copt);
    const auto cb = chain_from_json(to_json(chain));
    CHECK(cb.k() == 2);
    CHECK(cb.top() == chain.top());
    CHECK(cb.level(2).part_of == chain.level(2).part_of);
    CHECK(cb.level(2).s == 4);
    Json bad = to_json(chain);
    bad["levels"][1]["s"] = 5;
    CHECK_THROWS(chain_from_json(bad));

    Presentation p{chain.top(), 2, {}};
    for (Vertex v = 0; v < chain.top().size(); ++v) p.sets.push_back({7, 10 + v});
    const auto r = extract_sunflower(chain, p, 2);
    REQUIRE(r.ok());
    const auto tb = trace_from_json(to_json(r.trace));
    CHECK(tb.transport == r.trace.transport);
    REQUIRE(tb.steps.size() == r.trace.steps.size());
    for (std::size_t i = 0; i < tb.steps.size(); ++i) {
        CHECK(tb.steps[i].kase == r.trace.steps[i].kase);
        CHECK(tb.steps[i].lambda == r.trace.steps[i].lambda);
        CHECK(tb.steps[i].part == r.trace.steps[i].part);
        CHECK(tb.steps[i].f == r.trace.steps[i].f);
        CHECK(tb.steps[i].copy == r.trace.steps[i].copy);
    }
    CHECK(verify_trace(chain, p, 2, tb, *r.cert));
}

TEST_CASE("files are versioned with sorted keys") {
    Json j = versioned(Json{{"zeta", 1}, {"alpha", 2}});
    CHECK(j.at("version") == kFormatVersion);
    const std::string path = "test_io_tmp.json";
    write_json_file(path, j);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    CHECK(text.back() == '\n');
    CHECK(text.find("alpha") < text.find("version"));
    CHECK(text.find("version") < text.find("zeta"));
    CHECK(read_json_file(path) == j);
    std::remove(path.c_str());
    CHECK_THROWS(read_json_file("does-not-exist.json"));
}
