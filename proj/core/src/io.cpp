#include "sunflower/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sunflower {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
    try {
        return need(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("json: bad field '") + key + "': " + e.what());
    }
}

Json signature_json(const Signature& sig) {
    Json a = Json::array();
    for (const auto& r : sig.relations()) a.push_back({{"name", r.name}, {"arity", r.arity}});
    return a;
}

Signature signature_from(const Json& j) {
    std::vector<Relation> rels;
    for (const auto& r : j) rels.push_back({get<std::string>(r, "name"), get<unsigned>(r, "arity")});
    return Signature(std::move(rels));
}

} // namespace

Json to_json(const Structure& s) {
    Json rels = Json::object();
    for (std::size_t r = 0; r < s.signature().size(); ++r) rels[s.signature()[r].name] = s.tuples(r);
    return {{"signature", signature_json(s.signature())}, {"size", s.size()}, {"relations", rels}};
}

Structure structure_from_json(const Json& j) {
    Signature sig = signature_from(need(j, "signature"));
    const auto size = get<std::size_t>(j, "size");
    std::vector<std::vector<Tuple>> rels(sig.size());
    if (j.contains("relations")) {
        for (const auto& [name, ts] : j.at("relations").items()) {
            const std::size_t r = sig.find(name);
            if (r == sig.size()) throw InvalidArgument("json: relation '" + name + "' not in signature");
            rels[r] = ts.get<std::vector<Tuple>>();
        }
    }
    return Structure(std::move(sig), size, std::move(rels));
}

Json to_json(const ClassSpec& k) {
    Json f = Json::array();
    for (const auto& s : k.forbidden()) f.push_back(to_json(s));
    return {{"name", k.name()}, {"signature", signature_json(k.signature())}, {"forbidden", f}};
}

ClassSpec class_from_json(const Json& j) {
    if (j.is_string()) return classes::by_name(j.get<std::string>());
    std::vector<Structure> f;
    for (const auto& s : need(j, "forbidden")) f.push_back(structure_from_json(s));
    return ClassSpec(signature_from(need(j, "signature")), std::move(f),
                     j.value("name", std::string{}));
}

Json to_json(const QfType& p) { return {{"params", p.params}, {"atoms", p.atoms}}; }

QfType qftype_from_json(const Json& j) {
    QfType p;
    p.params = get<std::vector<Vertex>>(j, "params");
    p.atoms = get<std::vector<std::vector<std::uint8_t>>>(j, "atoms");
    return p;
}

Json to_json(const Partition& p) { return {{"blocks", p.blocks}}; }
Partition partition_from_json(const Json& j) { return {get<std::vector<std::vector<Vertex>>>(j, "blocks")}; }
Json to_json(const Colouring& c) { return {{"values", c.values}}; }
Colouring colouring_from_json(const Json& j) { return {get<std::vector<std::uint64_t>>(j, "values")}; }

Json to_json(const Presentation& p) {
    return {{"k", p.k}, {"sets", p.sets}, {"base", to_json(p.base)}};
}

Presentation presentation_from_json(const Json& j, const Structure* base) {
    Presentation p;
    p.k = get<std::size_t>(j, "k");
    p.sets = get<std::vector<KSet>>(j, "sets");
    if (j.contains("base")) p.base = structure_from_json(j.at("base"));
    else if (base) p.base = *base;
    else throw InvalidArgument("json: presentation without a base structure");
    p.normalise();
    return p;
}

Json to_json(const SunflowerCert& c) {
    return {{"iso", c.iso.map}, {"petals", c.petals}, {"centre", c.centre}};
}

SunflowerCert cert_from_json(const Json& j) {
    SunflowerCert c;
    c.iso.map = get<std::vector<Vertex>>(j, "iso");
    c.petals = get<std::vector<Vertex>>(j, "petals");
    c.centre = get<KSet>(j, "centre");
    return c;
}

Json to_json(const PartitionedHypergraph& h) {
    return {{"n", h.n}, {"parts", h.parts}, {"edges", h.edges}, {"meta", h.meta}};
}

PartitionedHypergraph hypergraph_from_json(const Json& j) {
    PartitionedHypergraph h;
    h.n = get<unsigned>(j, "n");
    h.parts = get<std::vector<std::vector<Vertex>>>(j, "parts");
    h.edges = get<std::vector<std::vector<Vertex>>>(j, "edges");
    for (auto& e : h.edges) std::sort(e.begin(), e.end());
    if (j.contains("meta")) h.meta = j.at("meta");
    h.validate();
    return h;
}

Json to_json(const WitnessChain& c) {
    Json levels = Json::array();
    for (const auto& lv : c.levels)
        levels.push_back({{"structure", to_json(lv.structure)},
                          {"part_of", lv.part_of},
                          {"s", lv.s},
                          {"hypergraph", lv.hypergraph}});
    return {{"target", to_json(c.target)}, {"class", to_json(c.cls)}, {"seed", c.seed}, {"levels", levels}};
}

WitnessChain chain_from_json(const Json& j) {
    WitnessChain c;
    c.target = structure_from_json(need(j, "target"));
    c.cls = class_from_json(need(j, "class"));
    c.seed = get<std::uint64_t>(j, "seed");
    for (const auto& lv : need(j, "levels")) {
        ChainLevel l;
        l.structure = structure_from_json(need(lv, "structure"));
        l.part_of = get<std::vector<Vertex>>(lv, "part_of");
        l.s = get<std::uint64_t>(lv, "s");
        if (lv.contains("hypergraph")) l.hypergraph = lv.at("hypergraph");
        c.levels.push_back(std::move(l));
    }
    validate_chain(c);
    return c;
}

Json to_json(const ExtractionTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json o = {{"level", s.level}, {"case", to_string(s.kase)}, {"copy", s.copy}};
        if (s.part) o["part"] = *s.part;
        if (s.lambda) o["lambda"] = *s.lambda;
        if (!s.f.empty()) o["f"] = s.f;
        steps.push_back(std::move(o));
    }
    return {{"transport", t.transport}, {"steps", steps}};
}

ExtractionTrace trace_from_json(const Json& j) {
    ExtractionTrace t;
    t.transport = get<std::vector<Vertex>>(j, "transport");
    for (const auto& o : need(j, "steps")) {
        TraceStep s;
        s.level = get<std::size_t>(o, "level");
        const auto kase = get<std::string>(o, "case");
        if (kase == "base") s.kase = ExtractionCase::Base;
        else if (kase == "mono") s.kase = ExtractionCase::Mono;
        else if (kase == "transversal") s.kase = ExtractionCase::Transversal;
        else throw InvalidArgument("json: unknown extraction case '" + kase + "'");
        s.copy = get<std::vector<Vertex>>(o, "copy");
        if (o.contains("part")) s.part = o.at("part").get<Vertex>();
        if (o.contains("lambda")) s.lambda = o.at("lambda").get<Ground>();
        if (o.contains("f")) s.f = o.at("f").get<std::vector<std::size_t>>();
        t.steps.push_back(std::move(s));
    }
    return t;
}

Json to_json(const Embedding& e) { return e.map; }

Json to_json(const PartitionReport& r) {
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json defects = Json::array();
        for (const auto& d : b.defects)
            defects.push_back({{"base", d.base},
                               {"type", to_json(d.type)},
                               {"open_set_size", d.open_set_size},
                               {"open_set_avoids_block", d.open_set_avoids_block}});
        Json o = {{"vertices", b.vertices}, {"probe_embeds", b.probe_embeds}, {"defects", defects}};
        if (b.defect_count) o["defect_count"] = *b.defect_count;
        blocks.push_back(std::move(o));
    }
    return {{"blocks", blocks},
            {"base_bound", r.base_bound},
            {"recheck", "partition_report on the same structure, partition, class and probes"}};
}

Json to_json(const ColourCopyReport& r) {
    Json o = {{"mono", r.mono}, {"hetero", r.hetero}, {"truncated", r.truncated},
              {"recheck", "colour_copy_search"}};
    if (r.first_mono) o["first_mono"] = r.first_mono->map;
    if (r.first_hetero) o["first_hetero"] = r.first_hetero->map;
    return o;
}

Json to_json(const MinEmbeddingColouring& m) {
    return {{"colouring", to_json(m.colouring)},
            {"embeddings", m.embeddings},
            {"sentinel", m.sentinel},
            {"recheck", "min_embedding_colouring"}};
}

Json to_json(const DapReport& r) {
    Json o = {{"pass", r.pass}, {"families_checked", r.families_checked}, {"recheck", "check_3dap_over_empty"}};
    if (r.counterexample) {
        Json sides = Json::array(), pairs = Json::array();
        for (const auto& s : r.counterexample->side) sides.push_back(to_json(s));
        for (const auto& s : r.counterexample->pair) pairs.push_back(to_json(s));
        o["counterexample"] = {{"sides", sides}, {"pairs", pairs}};
    }
    return o;
}

Json to_json(const SuitableParams& p) {
    return {{"n", p.n},
            {"a1", to_string(p.a1)},
            {"epsilon", to_string(p.epsilon)},
            {"a0", to_string(p.a0)},
            {"c_min", p.c_min}};
}

Json to_json(const WitnessVerdict& v) {
    Json o = {{"pass", v.pass}, {"checked", v.checked}, {"recheck", "verify_witness"}};
    if (v.counterexample) o["counterexample"] = to_json(*v.counterexample);
    return o;
}

Json versioned(Json j) {
    j["version"] = kFormatVersion;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("'" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace sunflower
