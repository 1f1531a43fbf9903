#include "sunflower/partitionlab.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sunflower {

void Partition::validate(std::size_t n) const {
    std::vector<char> seen(n, 0);
    std::size_t total = 0;
    for (const auto& b : blocks)
        for (auto v : b) {
            if (v >= n) throw InvalidArgument("partition: vertex out of range");
            if (seen[v]) throw InvalidArgument("partition: blocks overlap");
            seen[v] = 1;
            ++total;
        }
    if (total != n) throw InvalidArgument("partition: blocks do not cover the structure");
}

std::vector<std::size_t> Partition::block_of(std::size_t n) const {
    validate(n);
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (auto v : blocks[i]) out[v] = i;
    return out;
}

std::vector<std::string> partition_schemes() {
    return {"neighbourhood", "red-neighbourhood", "out-neighbourhood", "class-minus-point",
            "rb-CDE",        "coordinate-cut",    "rationals-cut"};
}

std::vector<int> rb_cde_labels(const Structure& s) {
    const auto& sig = s.signature();
    const std::size_t R = sig.index("R"), B = sig.index("B");
    std::vector<int> lab(s.size(), 2);
    for (Vertex n = 0; n < s.size(); ++n) {
        // neighbour lists are sorted, so the first one below n is the earliest
        for (auto i : s.neighbours(n)) {
            if (i >= n) break;
            if (s.holds(R, {i, n})) lab[n] = 0;
            else if (s.holds(B, {i, n})) lab[n] = 1;
            else continue;
            break;
        }
    }
    return lab;
}

namespace {

Vertex need_anchor(const Structure& s, std::optional<Vertex> anchor, const std::string& scheme) {
    if (!anchor) throw InvalidArgument("scheme '" + scheme + "' needs an anchor vertex");
    if (*anchor >= s.size()) throw InvalidArgument("anchor out of range");
    return *anchor;
}

Partition two_blocks(const std::vector<char>& in_first) {
    Partition p;
    p.blocks.resize(2);
    for (Vertex v = 0; v < in_first.size(); ++v) p.blocks[in_first[v] ? 0 : 1].push_back(v);
    return p;
}

} // namespace

Partition named_partition(const Structure& s, const std::string& scheme,
                          std::optional<Vertex> anchor, const std::vector<Rational>* labels) {
    const std::size_t n = s.size();
    if (scheme == "neighbourhood") {
        const Vertex v = need_anchor(s, anchor, scheme);
        // blocks: C = rest, D = N(v)
        std::vector<char> c(n, 1);
        for (auto u : s.neighbours(v)) c[u] = 0;
        return two_blocks(c);
    }
    if (scheme == "red-neighbourhood") {
        const Vertex v = need_anchor(s, anchor, scheme);
        const std::size_t R = s.signature().index("R");
        std::vector<char> c(n, 1);
        for (Vertex u = 0; u < n; ++u)
            if (s.holds(R, {v, u})) c[u] = 0;
        return two_blocks(c);
    }
    if (scheme == "out-neighbourhood") {
        const Vertex v = need_anchor(s, anchor, scheme);
        if (s.signature().empty() || s.signature().arity(0) != 2)
            throw InvalidArgument("out-neighbourhood needs a binary first relation");
        std::vector<char> out(n, 0);
        for (Vertex u = 0; u < n; ++u) out[u] = s.holds(0, {v, u}) ? 1 : 0;
        return two_blocks(out);
    }
    if (scheme == "class-minus-point") {
        const Vertex v = need_anchor(s, anchor, scheme);
        if (s.signature().empty() || s.signature().arity(0) != 2)
            throw InvalidArgument("class-minus-point needs a binary first relation");
        // blocks: C = {v} + other classes, D = class of v minus v
        std::vector<char> c(n, 1);
        for (Vertex u = 0; u < n; ++u)
            if (u != v && s.holds(0, {v, u})) c[u] = 0;
        return two_blocks(c);
    }
    if (scheme == "rb-CDE") {
        const auto lab = rb_cde_labels(s);
        Partition p;
        p.blocks.resize(3);
        for (Vertex v = 0; v < n; ++v) p.blocks[static_cast<std::size_t>(lab[v])].push_back(v);
        return p;
    }
    if (scheme == "coordinate-cut") {
        // vertices a*side^2 + b*side + c of a double-equivalence chunk; first block {a < b}
        std::size_t side = 1;
        while (side * side * side < n) ++side;
        if (side * side * side != n) throw InvalidArgument("coordinate-cut needs a cube-sized structure");
        std::vector<char> c(n, 0);
        for (Vertex v = 0; v < n; ++v) c[v] = v / (side * side) < (v / side) % side ? 1 : 0;
        return two_blocks(c);
    }
    if (scheme == "rationals-cut") {
        if (!labels || labels->size() != n) throw InvalidArgument("rationals-cut needs one rational label per vertex");
        // blocks: C = {q < 0} + {1}, D = rest
        std::vector<char> c(n, 0);
        for (Vertex v = 0; v < n; ++v) c[v] = ((*labels)[v] < 0 || (*labels)[v] == 1) ? 1 : 0;
        return two_blocks(c);
    }
    throw InvalidArgument("unknown partition scheme '" + scheme + "'");
}

// ---------------------------------------------------------------------------

std::vector<Vertex> basic_open_set(const Structure& s, const std::vector<Vertex>& a,
                                   const QfType& p) {
    validate_type(s.signature(), p);
    if (p.params.size() != a.size()) throw InvalidArgument("type does not match the parameter count");
    std::vector<char> in_a(s.size(), 0);
    for (auto x : a) {
        if (x >= s.size()) throw InvalidArgument("parameter out of range");
        in_a[x] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < s.size(); ++v)
        if (!in_a[v] && qf_type_of(s, v, a).atoms == p.atoms) out.push_back(v);
    return out;
}

PartitionReport partition_report(const Structure& s, const Partition& p, const ClassSpec* k,
                                 const std::vector<Structure>& probes, std::size_t base_bound,
                                 std::size_t max_listed) {
    p.validate(s.size());
    for (const auto& b : probes)
        if (!(b.signature() == s.signature())) throw SignatureMismatch("probe signature mismatch");
    PartitionReport rep;
    rep.base_bound = base_bound;
    for (const auto& blk : p.blocks) {
        BlockReport br;
        br.vertices = blk;
        std::sort(br.vertices.begin(), br.vertices.end());
        const Structure sub = s.induced(br.vertices);
        for (const auto& b : probes) br.probe_embeds.push_back(embeds(b, sub));
        if (k) {
            const auto defs = extension_defects(sub, *k, base_bound);
            br.defect_count = defs.size();
            std::vector<char> in_block(s.size(), 0);
            for (auto v : br.vertices) in_block[v] = 1;
            for (std::size_t i = 0; i < defs.size() && i < max_listed; ++i) {
                DefectWitness w;
                for (auto x : defs[i].base) w.base.push_back(br.vertices[x]);
                w.type = defs[i].type;
                w.type.params = w.base;
                const auto open = basic_open_set(s, w.base, w.type);
                w.open_set_size = open.size();
                w.open_set_avoids_block =
                    std::none_of(open.begin(), open.end(), [&](Vertex v) { return in_block[v] != 0; });
                br.defects.push_back(std::move(w));
            }
        }
        rep.blocks.push_back(std::move(br));
    }
    return rep;
}

ColourCopyReport colour_copy_search(const Structure& s, const Colouring& chi, const Structure& b,
                                    std::size_t limit) {
    if (chi.values.size() != s.size()) throw InvalidArgument("colouring is not total on the structure");
    ColourCopyReport rep;
    const auto& col = chi.values;
    SearchOptions opt;
    opt.prune = [&](std::span<const Vertex> map, Vertex) {
        std::set<std::uint64_t> seen;
        std::size_t mapped = 0;
        for (auto c : map)
            if (c != kNoVertex) {
                seen.insert(col[c]);
                ++mapped;
            }
        return seen.size() == 1 || seen.size() == mapped;
    };
    std::size_t found = 0;
    search_embeddings(b, s, opt, [&](std::span<const Vertex> map) {
        std::set<std::uint64_t> seen;
        for (auto c : map) seen.insert(col[c]);
        if (seen.size() <= 1) {
            ++rep.mono;
            if (!rep.first_mono) rep.first_mono = Embedding{{map.begin(), map.end()}};
        }
        if (seen.size() == map.size()) {
            ++rep.hetero;
            if (!rep.first_hetero) rep.first_hetero = Embedding{{map.begin(), map.end()}};
        }
        if (++found >= limit) {
            rep.truncated = true;
            return false;
        }
        return true;
    });
    return rep;
}

MinEmbeddingColouring min_embedding_colouring(const Structure& s, const Structure& a,
                                              const QfType& p) {
    validate_type(a.signature(), p);
    if (p.params.size() != a.size()) throw InvalidArgument("type does not match the parameter count");
    const auto embs = find_embeddings(a, s);
    if (embs.empty()) throw InvalidArgument("min_embedding_colouring: A does not embed");
    MinEmbeddingColouring out;
    out.embeddings = embs.size();
    const std::size_t n = s.size();
    out.colouring.values.assign(n, embs.size());
    std::vector<char> done(n, 0);
    std::size_t left = n;
    for (std::size_t i = 0; i < embs.size() && left > 0; ++i) {
        const auto& f = embs[i].map;
        for (Vertex v = 0; v < n; ++v) {
            if (done[v] || std::find(f.begin(), f.end(), v) != f.end()) continue;
            if (qf_type_of(s, v, f).atoms == p.atoms) {
                out.colouring.values[v] = i;
                done[v] = 1;
                --left;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (!done[v]) out.sentinel.push_back(v);
    return out;
}

} // namespace sunflower
