// sunflower: batch front end over the library. Every run writes
// <out>/manifest.json; exit codes: 0 ok, 1 counterexample, 2 usage,
// 3 budget exceeded, 4 extraction failed.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sunflower/amalgam.hpp"
#include "sunflower/classes.hpp"
#include "sunflower/generators.hpp"
#include "sunflower/io.hpp"
#include "sunflower/ksets.hpp"
#include "sunflower/partitionlab.hpp"
#include "sunflower/ramsey.hpp"
#include "sunflower/search.hpp"
#include "sunflower/witness.hpp"

#ifndef SUNFLOWER_VERSION
#define SUNFLOWER_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace sunflower;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kBudget = 3, kExtractionFailed = 4 };

struct Common {
    std::optional<std::uint64_t> seed;
    std::size_t budget = 50'000'000;
    unsigned threads = 1; // hint only; every search here is sequential
    std::string out = ".";
    std::string format = "json";
};

struct Run {
    Common common;
    std::vector<std::string> inputs, outputs;
    Json results = Json::object();

    std::string path(const std::string& name) const { return (fs::path(common.out) / name).string(); }

    void emit(const std::string& name, const Json& j) {
        const auto p = path(name);
        write_json_file(p, versioned(j));
        outputs.push_back(p);
    }

    void emit_csv(const std::string& name, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
        const auto p = path(name);
        std::ofstream out(p);
        if (!out) throw InvalidArgument("cannot write '" + p + "'");
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
            out << '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        outputs.push_back(p);
    }

    bool csv() const { return common.format == "csv"; }

    Json load(const std::string& p) {
        inputs.push_back(p);
        return read_json_file(p);
    }

    std::uint64_t seed() const {
        if (!common.seed) throw InvalidArgument("--seed is required for randomized commands");
        return *common.seed;
    }
};

ClassSpec load_class(Run& run, const std::string& name) {
    if (name.size() > 5 && name.ends_with(".json")) return class_from_json(run.load(name));
    return classes::by_name(name);
}

std::vector<std::string> cells(std::span<const Vertex> t) {
    std::vector<std::string> c;
    for (auto v : t) c.push_back(std::to_string(v));
    return c;
}

void structure_csv(Run& run, const std::string& name, const Structure& s) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < s.signature().size(); ++r)
        for (std::size_t i = 0; i < s.tuple_count(r); ++i) {
            std::vector<std::string> row{s.signature()[r].name};
            for (auto& c : cells(s.tuple(r, i))) row.push_back(c);
            rows.push_back(std::move(row));
        }
    run.emit_csv(name, {"relation", "tuple..."}, rows);
}

std::vector<Vertex> parse_vertices(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(static_cast<Vertex>(std::stoul(tok)));
    return out;
}

Structure b_structure(Run& run, const std::string& file, std::size_t size) {
    if (!file.empty()) return structure_from_json(run.load(file));
    if (size) return Structure(Signature{}, size);
    throw InvalidArgument("give --b FILE or --b-size N");
}

Json manifest(const std::string& command, const CLI::App* sub, const Run& run, int status, double secs) {
    Json params = Json::object();
    if (sub)
        for (const auto* opt : sub->get_options()) {
            if (opt->get_name() == "--help" || opt->count() == 0) continue;
            auto res = opt->results();
            params[opt->get_name()] = res.size() == 1 ? Json(res[0]) : Json(res);
        }
    Json m = {{"command", command},
              {"parameters", params},
              {"inputs", run.inputs},
              {"outputs", run.outputs},
              {"status", status},
              {"threads", run.common.threads},
              {"budget", run.common.budget},
              {"format", run.common.format},
              {"versions", {{"sunflower", SUNFLOWER_VERSION}, {"format", kFormatVersion}}},
              {"timings", {{"seconds", secs}}}};
    m["seed"] = run.common.seed ? Json(*run.common.seed) : Json(nullptr);
    return versioned(m);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured sunflower experiments"};
    app.require_subcommand(1, 2);
    Run run;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--seed", run.common.seed, "RNG seed (required for randomized commands)");
        s->add_option("--budget", run.common.budget, "search/enumeration budget");
        s->add_option("--threads", run.common.threads, "parallelism hint");
        s->add_option("--out", run.common.out, "output directory");
        s->add_option("--format", run.common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    std::map<CLI::App*, std::function<int()>> actions;
    auto command = [&](const std::string& name, const std::string& help) {
        auto* s = app.add_subcommand(name, help);
        add_common(s);
        return s;
    };

    // ---- gen
    std::string gen_id;
    std::size_t gen_size = 0;
    auto* gen = command("gen", "generate a named structure");
    gen->add_option("--generator", gen_id, "generator name")->required();
    gen->add_option("--size", gen_size, "vertex count")->required();
    actions[gen] = [&] {
        auto g = gen_named(parse_generator(gen_id), gen_size, run.seed());
        Json j = to_json(g.structure);
        j["meta"] = g.meta;
        run.emit("structure.json", j);
        if (run.csv()) structure_csv(run, "structure.csv", g.structure);
        run.results = {{"size", g.structure.size()}, {"in_class", in_defining_class(parse_generator(gen_id), g.structure)}};
        return kOk;
    };

    // ---- partition
    std::string part_structure, part_scheme, part_class;
    std::optional<Vertex> part_anchor;
    std::vector<std::string> part_probes;
    std::size_t part_bound = 1, part_listed = 16;
    auto* part = command("partition", "apply a named partition scheme and report on the blocks");
    part->add_option("--structure", part_structure)->required();
    part->add_option("--scheme", part_scheme)->required();
    part->add_option("--anchor", part_anchor);
    part->add_option("--class", part_class, "class name or JSON file for the defect scan");
    part->add_option("--probe", part_probes, "structure JSON files to look for in each block");
    part->add_option("--base-bound", part_bound);
    part->add_option("--max-listed", part_listed);
    actions[part] = [&] {
        const Json sj = run.load(part_structure);
        const Structure s = structure_from_json(sj);
        std::vector<Rational> labels;
        if (sj.contains("meta") && sj["meta"].contains("labels"))
            for (const auto& q : sj["meta"]["labels"]) labels.push_back(parse_rational(q.get<std::string>()));
        const Partition p = named_partition(s, part_scheme, part_anchor, labels.empty() ? nullptr : &labels);
        std::vector<Structure> probes;
        for (const auto& f : part_probes) probes.push_back(structure_from_json(run.load(f)));
        std::optional<ClassSpec> k;
        if (!part_class.empty()) k = load_class(run, part_class);
        const auto rep = partition_report(s, p, k ? &*k : nullptr, probes, part_bound, part_listed);
        run.emit("partition.json", to_json(p));
        run.emit("report.json", to_json(rep));
        if (run.csv()) {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t b = 0; b < p.blocks.size(); ++b)
                for (auto v : p.blocks[b]) rows.push_back({std::to_string(v), std::to_string(b)});
            run.emit_csv("partition.csv", {"vertex", "block"}, rows);
        }
        return kOk;
    };

    // ---- open-set
    std::string os_structure, os_type;
    std::string os_params;
    std::optional<Vertex> os_like;
    auto* os = command("open-set", "vertices realising a one-point type over a parameter tuple");
    os->add_option("--structure", os_structure)->required();
    os->add_option("--params", os_params, "comma-separated parameter vertices");
    os->add_option("--type", os_type, "QfType JSON file");
    os->add_option("--like", os_like, "use the type of this vertex over the parameters");
    actions[os] = [&] {
        const Structure s = structure_from_json(run.load(os_structure));
        const auto a = parse_vertices(os_params);
        QfType p;
        if (!os_type.empty()) p = qftype_from_json(run.load(os_type));
        else if (os_like) p = qf_type(s, *os_like, a);
        else throw InvalidArgument("give --type FILE or --like VERTEX");
        if (p.params.empty()) p.params = a;
        const auto set = basic_open_set(s, a, p);
        run.emit("open_set.json", {{"params", a}, {"type", to_json(p)}, {"vertices", set}, {"recheck", "basic_open_set"}});
        run.results = {{"size", set.size()}};
        return kOk;
    };

    // ---- min-colouring
    std::string mc_structure, mc_a, mc_type;
    std::optional<Vertex> mc_like;
    auto* mc = command("min-colouring", "colour by the least embedding of A over which a vertex realises p");
    mc->add_option("--structure", mc_structure)->required();
    mc->add_option("--a", mc_a, "structure JSON for A")->required();
    mc->add_option("--type", mc_type, "QfType JSON over A's vertices");
    actions[mc] = [&] {
        const Structure s = structure_from_json(run.load(mc_structure));
        const Structure a = structure_from_json(run.load(mc_a));
        QfType p = mc_type.empty() ? empty_type(s.signature(), {}) : qftype_from_json(run.load(mc_type));
        if (p.params.empty()) {
            std::vector<Vertex> ps;
            for (Vertex v = 0; v < a.size(); ++v) ps.push_back(v);
            if (mc_type.empty()) p = empty_type(s.signature(), ps);
            else p.params = ps;
        }
        const auto m = min_embedding_colouring(s, a, p);
        run.emit("colouring.json", to_json(m));
        if (run.csv()) {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t v = 0; v < m.colouring.values.size(); ++v)
                rows.push_back({std::to_string(v), std::to_string(m.colouring.values[v])});
            run.emit_csv("colouring.csv", {"vertex", "colour"}, rows);
        }
        return kOk;
    };

    // ---- encode
    std::string enc_structure, enc_colouring, enc_b;
    auto* enc = command("encode", "encode a colouring as a presentation on 2-sets");
    enc->add_option("--structure", enc_structure)->required();
    enc->add_option("--colouring", enc_colouring, "Colouring JSON file")->required();
    enc->add_option("--b", enc_b, "optional structure B: also count its coloured copies and sunflowers");
    actions[enc] = [&] {
        const Structure m = structure_from_json(run.load(enc_structure));
        const Json cj = run.load(enc_colouring);
        const Colouring chi = colouring_from_json(cj.contains("colouring") ? cj["colouring"] : cj);
        const auto p = encode_colouring(m, chi);
        run.emit("presentation.json", to_json(p));
        if (!enc_b.empty()) {
            const Structure b = structure_from_json(run.load(enc_b));
            const auto rep = colour_copy_search(m, chi, b, run.common.budget);
            std::size_t nonempty = 0, empty = 0;
            for (const auto& c : find_sunflower_copies(p, b, run.common.budget))
                (c.centre.empty() ? empty : nonempty)++;
            run.emit("copies.json", {{"colour_copies", to_json(rep)},
                                     {"sunflowers_nonempty_centre", nonempty},
                                     {"sunflowers_empty_centre", empty}});
        }
        return kOk;
    };

    // ---- sunflower-check
    std::string sc_presentation, sc_b, sc_base;
    std::size_t sc_limit = 1;
    auto* sc = command("sunflower-check", "search a presentation for sunflower copies of B");
    sc->add_option("--presentation", sc_presentation)->required();
    sc->add_option("--b", sc_b)->required();
    sc->add_option("--base", sc_base, "base structure when the presentation has none");
    sc->add_option("--limit", sc_limit);
    actions[sc] = [&] {
        std::optional<Structure> base;
        if (!sc_base.empty()) base = structure_from_json(run.load(sc_base));
        const auto p = presentation_from_json(run.load(sc_presentation), base ? &*base : nullptr);
        const Structure b = structure_from_json(run.load(sc_b));
        const auto certs = find_sunflower_copies(p, b, sc_limit);
        Json arr = Json::array();
        for (const auto& c : certs) arr.push_back(to_json(c));
        run.emit("certificates.json", {{"certificates", arr}, {"recheck", "verify-cert"}});
        run.results = {{"found", certs.size()}};
        return certs.empty() ? kCounterexample : kOk;
    };

    // ---- enumerate-presentations
    std::string ep_structure, ep_class = "pure";
    std::size_t ep_size = 0, ep_k = 2;
    bool ep_list = false;
    auto* ep = command("enumerate-presentations", "presentations of C on k-sets up to ground relabelling");
    ep->add_option("--structure", ep_structure, "structure JSON (default: pure set of --c-size)");
    ep->add_option("--c-size", ep_size);
    ep->add_option("--k", ep_k);
    ep->add_flag("--list", ep_list, "write every presentation, not just the count");
    actions[ep] = [&] {
        const Structure c = ep_structure.empty() ? Structure(Signature{}, ep_size)
                                                 : structure_from_json(run.load(ep_structure));
        Json list = Json::array();
        std::vector<std::vector<std::string>> rows;
        std::size_t n = 0;
        enumerate_presentations(
            c, ep_k,
            [&](const Presentation& p) {
                if (ep_list) {
                    list.push_back(p.sets);
                    if (run.csv())
                        for (std::size_t v = 0; v < p.sets.size(); ++v) {
                            std::vector<std::string> row{std::to_string(n), std::to_string(v)};
                            for (auto g : p.sets[v]) row.push_back(std::to_string(g));
                            rows.push_back(std::move(row));
                        }
                }
                ++n;
                return true;
            },
            run.common.budget);
        Json j = {{"count", n}, {"k", ep_k}, {"base", to_json(c)}};
        if (ep_list) j["presentations"] = list;
        run.emit("presentations.json", j);
        if (run.csv() && ep_list) run.emit_csv("presentations.csv", {"index", "vertex", "set..."}, rows);
        run.results = {{"count", n}};
        return kOk;
    };

    // ---- verify-witness
    std::string vw_class = "pure", vw_b, vw_c, vw_mode = "exhaustive";
    std::size_t vw_bsize = 0, vw_csize = 0, vw_k = 2, vw_trials = 1000;
    auto* vw = command("verify-witness", "check that every presentation of C contains a sunflower copy of B");
    vw->add_option("--class", vw_class);
    vw->add_option("--b", vw_b);
    vw->add_option("--b-size", vw_bsize);
    vw->add_option("--c", vw_c);
    vw->add_option("--c-size", vw_csize);
    vw->add_option("--k", vw_k);
    vw->add_option("--mode", vw_mode)->check(CLI::IsMember({"exhaustive", "random"}));
    vw->add_option("--trials", vw_trials);
    actions[vw] = [&] {
        const ClassSpec k = load_class(run, vw_class);
        const Structure b = b_structure(run, vw_b, vw_bsize);
        const Structure c = b_structure(run, vw_c, vw_csize);
        if (!satisfies_class(b, k) || !satisfies_class(c, k)) throw InvalidArgument("B and C must lie in the class");
        const bool random = vw_mode == "random";
        const auto v = verify_witness(c, b, vw_k, random ? VerifyMode::Random : VerifyMode::Exhaustive, vw_trials,
                                      random ? run.seed() : 0, run.common.budget);
        run.emit("verdict.json", to_json(v));
        if (v.counterexample) run.emit("counterexample.json", to_json(*v.counterexample));
        run.results = {{"pass", v.pass}, {"checked", v.checked}};
        return v.pass ? kOk : kCounterexample;
    };

    // ---- hypergraph
    auto* hg = command("hypergraph", "partitioned hypergraphs: generate, girth, adversary");
    hg->require_subcommand(1);
    unsigned hg_n = 2, hg_s = 1, hg_g = 4;
    std::optional<std::uint64_t> hg_c;
    auto* hgen = hg->add_subcommand("generate", "random partitioned hypergraph with short cycles removed");
    add_common(hgen);
    hgen->add_option("--n", hg_n);
    hgen->add_option("--s", hg_s);
    hgen->add_option("--g", hg_g);
    hgen->add_option("--c", hg_c, "part size (default from the parameter arithmetic)");
    actions[hgen] = [&] {
        WitnessGenOptions o;
        o.c_override = hg_c;
        const auto h = gen_witness_hypergraph(hg_n, hg_s, hg_g, run.seed(), o);
        run.emit("hypergraph.json", to_json(h));
        if (run.csv()) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : h.edges) rows.push_back(cells(e));
            run.emit_csv("edges.csv", {"vertex..."}, rows);
        }
        const auto girth = hypergraph_girth(h);
        run.results = {{"edges", h.edges.size()}, {"girth", girth == kInfiniteGirth ? Json("inf") : Json(girth)}};
        return kOk;
    };
    std::string hg_file;
    auto* hgir = hg->add_subcommand("girth", "Berge girth and one shortest cycle");
    add_common(hgir);
    hgir->add_option("--hypergraph", hg_file)->required();
    actions[hgir] = [&] {
        const auto h = hypergraph_from_json(run.load(hg_file));
        const auto girth = hypergraph_girth(h);
        run.emit("girth.json", {{"girth", girth == kInfiniteGirth ? Json("inf") : Json(girth)},
                                {"cycle_edges", shortest_cycle_edges(h)}});
        return kOk;
    };
    std::string adv_mode = "exhaustive";
    std::size_t adv_trials = 1000;
    unsigned adv_s = 1;
    auto* hadv = hg->add_subcommand("adversary", "search for colourings defeating the witness property");
    add_common(hadv);
    hadv->add_option("--hypergraph", hg_file)->required();
    hadv->add_option("--s", adv_s);
    hadv->add_option("--mode", adv_mode)->check(CLI::IsMember({"exhaustive", "random"}));
    hadv->add_option("--trials", adv_trials);
    actions[hadv] = [&] {
        const auto h = hypergraph_from_json(run.load(hg_file));
        const bool random = adv_mode == "random";
        const auto r = vcvrp_adversary(h, adv_s, random ? AdversaryMode::Random : AdversaryMode::Exhaustive,
                                       adv_trials, random ? run.seed() : 0, run.common.budget);
        Json j = {{"nodes", r.nodes}, {"counterexample_found", r.counterexample.has_value()}};
        if (r.counterexample) {
            Json cs = Json::array();
            for (const auto& c : *r.counterexample) cs.push_back(to_json(c));
            j["colourings"] = cs;
        }
        run.emit("adversary.json", j);
        return r.counterexample ? kCounterexample : kOk;
    };

    // ---- paste
    std::string pa_h, pa_b, pa_class;
    auto* pa = command("paste", "replace every hyperedge by a copy of B");
    pa->add_option("--hypergraph", pa_h)->required();
    pa->add_option("--b", pa_b)->required();
    pa->add_option("--class", pa_class)->required();
    actions[pa] = [&] {
        const auto h = hypergraph_from_json(run.load(pa_h));
        const Structure b = structure_from_json(run.load(pa_b));
        const auto out = paste(h, b, load_class(run, pa_class));
        Json j = to_json(out.structure);
        j["meta"] = {{"part_of", out.part_of}};
        run.emit("structure.json", j);
        if (run.csv()) structure_csv(run, "structure.csv", out.structure);
        return kOk;
    };

    // ---- build-witness
    std::string bw_class, bw_b;
    std::size_t bw_bsize = 0, bw_k = 2;
    std::optional<std::uint64_t> bw_c;
    auto* bw = command("build-witness", "recursive witness chain for B on k-sets");
    bw->add_option("--class", bw_class)->required();
    bw->add_option("--b", bw_b);
    bw->add_option("--b-size", bw_bsize);
    bw->add_option("--k", bw_k);
    bw->add_option("--c", bw_c, "part size on every level (default from the parameter arithmetic)");
    actions[bw] = [&] {
        const ClassSpec k = load_class(run, bw_class);
        const Structure b = b_structure(run, bw_b, bw_bsize);
        ChainOptions o;
        o.c_override = bw_c;
        const auto chain = build_witness_chain(k, b, bw_k, run.seed(), o);
        run.emit("chain.json", to_json(chain));
        run.results = {{"top_size", chain.top().size()}};
        return kOk;
    };

    // ---- extract
    std::string ex_chain, ex_pres;
    std::size_t ex_level = 0;
    auto* ex = command("extract", "extract a sunflower copy of B from a presentation of the chain's top");
    ex->add_option("--chain", ex_chain)->required();
    ex->add_option("--presentation", ex_pres)->required();
    ex->add_option("--level", ex_level, "chain level (default: top)");
    actions[ex] = [&] {
        const auto chain = chain_from_json(run.load(ex_chain));
        const std::size_t level = ex_level ? ex_level : chain.k();
        const auto p = presentation_from_json(run.load(ex_pres), &chain.level(level).structure);
        const auto r = extract_sunflower(chain, p, level);
        run.emit("trace.json", to_json(r.trace));
        if (!r.ok()) {
            run.emit("counterexample.json", to_json(*r.counterexample));
            return kExtractionFailed;
        }
        run.emit("certificate.json", to_json(*r.cert));
        return kOk;
    };

    // ---- verify-cert / verify-trace
    std::string vc_cert, vc_b, vc_pres, vc_chain, vc_trace, vc_base;
    auto* vc = command("verify-cert", "check a sunflower certificate");
    vc->add_option("--cert", vc_cert)->required();
    vc->add_option("--b", vc_b)->required();
    vc->add_option("--presentation", vc_pres)->required();
    vc->add_option("--base", vc_base, "base structure when the presentation has none");
    actions[vc] = [&] {
        const auto cert = cert_from_json(run.load(vc_cert));
        const Structure b = structure_from_json(run.load(vc_b));
        std::optional<Structure> base;
        if (!vc_base.empty()) base = structure_from_json(run.load(vc_base));
        const auto p = presentation_from_json(run.load(vc_pres), base ? &*base : nullptr);
        const bool ok = verify_certificate(cert, b, p);
        run.emit("verify.json", {{"valid", ok}});
        return ok ? kOk : kCounterexample;
    };
    std::size_t vt_level = 0;
    auto* vt = command("verify-trace", "replay an extraction trace");
    vt->add_option("--chain", vc_chain)->required();
    vt->add_option("--presentation", vc_pres)->required();
    vt->add_option("--trace", vc_trace)->required();
    vt->add_option("--cert", vc_cert)->required();
    vt->add_option("--level", vt_level);
    actions[vt] = [&] {
        const auto chain = chain_from_json(run.load(vc_chain));
        const std::size_t level = vt_level ? vt_level : chain.k();
        const auto p = presentation_from_json(run.load(vc_pres), &chain.level(level).structure);
        const bool ok = verify_trace(chain, p, level, trace_from_json(run.load(vc_trace)), cert_from_json(run.load(vc_cert)));
        run.emit("verify.json", {{"valid", ok}});
        return ok ? kOk : kCounterexample;
    };

    // ---- check-3dap
    std::string dap_class;
    std::size_t dap_bound = 1;
    auto* dap = command("check-3dap", "3-disjoint amalgamation over the empty set up to a side-size bound");
    dap->add_option("--class", dap_class)->required();
    dap->add_option("--bound", dap_bound);
    actions[dap] = [&] {
        const auto rep = check_3dap_over_empty(load_class(run, dap_class), dap_bound, run.common.budget);
        run.emit("dap.json", to_json(rep));
        return rep.pass ? kOk : kCounterexample;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    CLI::App* chosen = nullptr;
    std::string name;
    for (auto* s : app.get_subcommands()) {
        chosen = s;
        name = s->get_name();
        for (auto* t : s->get_subcommands()) {
            chosen = t;
            name += " " + t->get_name();
        }
    }
    const auto t0 = std::chrono::steady_clock::now();
    int status = kOk;
    try {
        fs::create_directories(run.common.out);
        status = actions.at(chosen)();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        status = kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        status = kUsage;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    try {
        Json m = manifest(name, chosen, run, status, secs);
        m["results"] = run.results;
        write_json_file(run.path("manifest.json"), m);
    } catch (const std::exception& e) {
        std::cerr << "error: cannot write manifest: " << e.what() << '\n';
    }
    return status;
}
