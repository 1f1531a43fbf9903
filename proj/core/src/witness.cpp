#include "sunflower/witness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sunflower/qftype.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/search.hpp"

namespace sunflower {

Pasted paste(const PartitionedHypergraph& h, const Structure& b, const ClassSpec& k) {
    h.validate();
    if (!(b.signature() == k.signature())) throw SignatureMismatch();
    if (h.n != b.size()) throw InvalidArgument("paste: hypergraph uniformity must equal |B|");
    const auto girth = hypergraph_girth(h);
    if (girth < 4) throw InvalidArgument("paste: hypergraph girth below 4");
    for (Vertex v = 1; v < b.size(); ++v)
        if (!qf_type(b, v, {}).same_atoms(qf_type(b, 0, {})))
            throw InvalidArgument("paste: vertices of B do not share one type over the empty set");

    const Signature& sig = b.signature();
    std::vector<std::vector<Tuple>> rels(sig.size());
    for (const auto& e : h.edges) {
        // e is sorted: B vertex i sits on e[i]
        for (std::size_t r = 0; r < sig.size(); ++r)
            for (std::size_t i = 0; i < b.tuple_count(r); ++i) {
                Tuple t;
                for (auto x : b.tuple(r, i)) t.push_back(e[x]);
                rels[r].push_back(std::move(t));
            }
    }
    Pasted out;
    out.structure = Structure(sig, h.vertex_count(), std::move(rels));
    const auto po = h.part_of();
    out.part_of.assign(po.begin(), po.end());
    if (!satisfies_class(out.structure, k))
        throw InternalConsistency("paste: pasted structure left the class");
    return out;
}

const ChainLevel& WitnessChain::level(std::size_t j) const {
    if (j < 1 || j > levels.size()) throw InvalidArgument("witness chain: level out of range");
    return levels[j - 1];
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
        r *= base;
    }
    return r;
}

} // namespace

WitnessChain build_witness_chain(const ClassSpec& k, const Structure& b, std::size_t levels,
                                 std::uint64_t seed, const ChainOptions& opt) {
    if (levels == 0) throw InvalidArgument("build_witness_chain: k must be positive");
    if (!(b.signature() == k.signature())) throw SignatureMismatch();
    for (const auto& f : k.forbidden())
        if (!is_irreducible(f))
            throw InvalidArgument("build_witness_chain: requires free amalgamation class");
    if (!is_transitive(k)) throw InvalidArgument("build_witness_chain: requires transitive class");
    if (!satisfies_class(b, k)) throw InvalidArgument("build_witness_chain: B is not in the class");

    WitnessChain chain;
    chain.target = b;
    chain.cls = k;
    chain.seed = seed;
    chain.levels.push_back(ChainLevel{b, {}, 1, nlohmann::json::object()});
    for (std::size_t j = 2; j <= levels; ++j) {
        const Structure& prev = chain.levels.back().structure;
        const std::size_t n = prev.size();
        const std::uint64_t s = checked_pow(j, n, opt.max_colourings);
        if (s > opt.max_colourings)
            throw BudgetExceeded("build_witness_chain: level " + std::to_string(j) + " needs " +
                                 std::to_string(j) + "^" + std::to_string(n) + " colourings");
        ChainLevel lv;
        lv.s = s;
        if (n == 1) {
            // a single point is a sunflower on its own
            lv.structure = prev;
            lv.part_of = {0};
            lv.hypergraph = {{"degenerate", true}};
        } else {
            WitnessGenOptions g;
            g.c_override = opt.c_override;
            g.max_attempts = opt.max_attempts;
            const auto h = gen_witness_hypergraph(static_cast<unsigned>(n), static_cast<unsigned>(s), 4,
                                                  Rng::derive(seed, j), g);
            auto pasted = paste(h, prev, k);
            lv.structure = std::move(pasted.structure);
            lv.part_of = std::move(pasted.part_of);
            lv.hypergraph = h.meta;
            lv.hypergraph["edges"] = h.edges.size();
        }
        chain.levels.push_back(std::move(lv));
    }
    return chain;
}

void validate_chain(const WitnessChain& chain) {
    if (chain.levels.empty()) throw InvalidArgument("witness chain: no levels");
    if (!(chain.levels[0].structure == chain.target)) throw InvalidArgument("witness chain: C_1 must be B");
    for (std::size_t j = 1; j <= chain.k(); ++j) {
        const auto& lv = chain.level(j);
        if (!satisfies_class(lv.structure, chain.cls))
            throw InvalidArgument("witness chain: level " + std::to_string(j) + " not in the class");
        if (j == 1) {
            if (!lv.part_of.empty() || lv.s != 1) throw InvalidArgument("witness chain: level 1 has no parts");
            continue;
        }
        const std::size_t n = chain.level(j - 1).structure.size();
        if (lv.part_of.size() != lv.structure.size())
            throw InvalidArgument("witness chain: part assignment size mismatch");
        for (auto p : lv.part_of)
            if (p >= n) throw InvalidArgument("witness chain: part index out of range");
        if (lv.s != checked_pow(j, n, ~std::uint64_t{0} - 1))
            throw InvalidArgument("witness chain: colouring count must be j^|C_{j-1}|");
    }
}

const char* to_string(ExtractionCase c) {
    switch (c) {
    case ExtractionCase::Base: return "base";
    case ExtractionCase::Mono: return "mono";
    case ExtractionCase::Transversal: return "transversal";
    }
    return "?";
}

Colouring coordinate_colouring(const Presentation& p, std::span<const Vertex> part_of,
                               std::span<const std::size_t> f) {
    if (part_of.size() != p.sets.size()) throw InvalidArgument("coordinate_colouring: part assignment size");
    Colouring c;
    c.values.reserve(p.sets.size());
    for (std::size_t v = 0; v < p.sets.size(); ++v) {
        const std::size_t i = part_of[v];
        if (i >= f.size() || f[i] >= p.sets[v].size())
            throw InvalidArgument("coordinate_colouring: f out of range");
        c.values.push_back(p.sets[v][f[i]]);
    }
    return c;
}

bool heterochromatic_under_all(const Presentation& p, std::span<const Vertex> part_of, std::size_t parts,
                               std::span<const Vertex> copy, std::size_t budget) {
    std::vector<std::size_t> f(parts, 0);
    std::size_t seen = 0;
    for (;;) {
        if (++seen > budget) throw BudgetExceeded("heterochromatic_under_all: too many functions");
        std::set<Ground> vals;
        for (auto v : copy)
            if (!vals.insert(p.sets[v][f[part_of[v]]]).second) return false;
        std::size_t i = 0;
        while (i < parts && ++f[i] == p.k) f[i++] = 0;
        if (i == parts) return true;
    }
}

namespace {

bool pairwise_disjoint(const Presentation& q, std::span<const Vertex> vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (intersect_size(q.sets[vs[a]], q.sets[vs[b]]) != 0) return false;
    return true;
}

// Presentation of C_{j-1} on (j-1)-sets read off a copy whose sets all hold lambda.
Presentation strip(const Presentation& q, const Structure& d, std::span<const Vertex> copy, Ground lambda) {
    Presentation out;
    out.base = d;
    out.k = q.k - 1;
    for (auto v : copy) {
        KSet s;
        for (auto g : q.sets[v])
            if (g != lambda) s.push_back(g);
        out.sets.push_back(std::move(s));
    }
    return out;
}

struct Extractor {
    const WitnessChain& chain;
    std::vector<TraceStep> steps;

    // q presents C_j in chain labels; the certificate comes back in those labels.
    std::optional<SunflowerCert> run(std::size_t j, const Presentation& q) {
        const Structure& b = chain.target;
        if (j == 1) {
            SunflowerCert cert;
            for (Vertex x = 0; x < b.size(); ++x) cert.iso.map.push_back(x);
            cert.petals = cert.iso.map;
            steps.push_back({1, ExtractionCase::Base, std::nullopt, {}, std::nullopt, cert.iso.map});
            return cert;
        }
        const auto& cur = chain.level(j);
        const Structure& d = chain.level(j - 1).structure;
        const std::size_t nd = d.size();

        std::vector<std::vector<Vertex>> members(nd);
        for (Vertex v = 0; v < cur.structure.size(); ++v) members[cur.part_of[v]].push_back(v);

        // (a) a chi_f-monochromatic copy inside one part; only f(i) matters there,
        // so the lexicographically first f is zero off i.
        for (Vertex i = 0; i < nd; ++i) {
            if (members[i].size() < nd) continue;
            for (std::size_t t = 0; t < j; ++t) {
                std::map<Ground, std::vector<Vertex>> groups;
                for (auto v : members[i]) groups[q.sets[v][t]].push_back(v);
                for (const auto& [lambda, grp] : groups) {
                    if (grp.size() < nd) continue;
                    const Structure sub = cur.structure.induced(grp);
                    std::optional<SunflowerCert> got;
                    search_embeddings(d, sub, {}, [&](std::span<const Vertex> map) {
                        std::vector<Vertex> copy;
                        for (auto y : map) copy.push_back(grp[y]);
                        const std::size_t mark = steps.size();
                        TraceStep st{j, ExtractionCase::Mono, i, std::vector<std::size_t>(nd, 0), lambda, copy};
                        st.f[i] = t;
                        steps.push_back(st);
                        auto inner = run(j - 1, strip(q, d, copy, lambda));
                        if (!inner) {
                            steps.resize(mark);
                            return true;
                        }
                        SunflowerCert cert;
                        for (auto x : inner->iso.map) cert.iso.map.push_back(copy[x]);
                        cert.petals = cert.iso.map;
                        std::sort(cert.petals.begin(), cert.petals.end());
                        cert.centre = inner->centre;
                        cert.centre.insert(std::upper_bound(cert.centre.begin(), cert.centre.end(), lambda),
                                           lambda);
                        got = std::move(cert);
                        return false;
                    });
                    if (got) return got;
                }
            }
        }

        // (b) a transversal copy with pairwise disjoint sets
        SearchOptions opt;
        opt.prune = [&](std::span<const Vertex> map, Vertex x) {
            const Vertex c = map[x];
            for (Vertex y = 0; y < map.size(); ++y) {
                if (y == x || map[y] == kNoVertex) continue;
                if (cur.part_of[map[y]] == cur.part_of[c]) return false;
                if (intersect_size(q.sets[map[y]], q.sets[c]) != 0) return false;
            }
            return true;
        };
        auto hit = first_embedding(d, cur.structure, opt);
        if (!hit) return std::nullopt;
        auto inb = first_embedding(b, d);
        if (!inb) throw InternalConsistency("witness chain: B does not embed in a lower level");
        steps.push_back({j, ExtractionCase::Transversal, std::nullopt, {}, std::nullopt, hit->map});
        SunflowerCert cert;
        for (auto x : inb->map) cert.iso.map.push_back(hit->map[x]);
        cert.petals = cert.iso.map;
        std::sort(cert.petals.begin(), cert.petals.end());
        return cert;
    }
};

// Presentation p relabelled onto chain labels along transport.
Presentation pull_back(const Presentation& p, const Structure& c, std::span<const Vertex> transport) {
    Presentation q;
    q.base = c;
    q.k = p.k;
    for (auto v : transport) q.sets.push_back(p.sets[v]);
    return q;
}

Presentation sorted_copy(const Presentation& p) {
    Presentation q = p;
    q.normalise();
    return q;
}

} // namespace

ExtractionResult extract_sunflower(const WitnessChain& chain, const Presentation& p0, std::size_t level) {
    const auto& lv = chain.level(level);
    const Presentation p = sorted_copy(p0);
    if (p.k != level) throw InvalidArgument("extract_sunflower: presentation must use level-sized sets");
    if (!(p.base.signature() == lv.structure.signature())) throw SignatureMismatch();

    ExtractionResult res;
    if (p.base == lv.structure) {
        for (Vertex v = 0; v < p.base.size(); ++v) res.trace.transport.push_back(v);
    } else {
        auto iso = are_isomorphic(lv.structure, p.base);
        if (!iso) throw InvalidArgument("extract_sunflower: presentation base is not the chain's structure");
        res.trace.transport = iso->map;
    }
    Extractor ex{chain, {}};
    auto cert = ex.run(level, pull_back(p, lv.structure, res.trace.transport));
    res.trace.steps = std::move(ex.steps);
    if (!cert) {
        res.counterexample = p0;
        return res;
    }
    for (auto& v : cert->iso.map) v = res.trace.transport[v];
    cert->petals = cert->iso.map;
    std::sort(cert->petals.begin(), cert->petals.end());
    res.cert = std::move(cert);
    return res;
}

bool verify_certificate(const SunflowerCert& cert, const Structure& b, const Presentation& p) {
    try {
        p.validate();
    } catch (const Error&) {
        return false;
    }
    if (!(b.signature() == p.base.signature())) return false;
    if (cert.iso.map.size() != b.size()) return false;
    for (auto v : cert.iso.map)
        if (v >= p.base.size()) return false;
    if (!is_embedding(b, p.base, cert.iso.map)) return false;
    std::vector<Vertex> petals = cert.iso.map;
    std::sort(petals.begin(), petals.end());
    if (petals != cert.petals) return false;
    for (std::size_t i = 1; i < cert.centre.size(); ++i)
        if (cert.centre[i - 1] >= cert.centre[i]) return false;
    if (petals.size() == 1) return intersect_size(p.sets[petals[0]], cert.centre) == cert.centre.size();
    for (std::size_t i = 0; i < petals.size(); ++i)
        for (std::size_t j = i + 1; j < petals.size(); ++j)
            if (intersection(p.sets[petals[i]], p.sets[petals[j]]) != cert.centre) return false;
    return petals.size() >= 2 || cert.centre.empty();
}

bool verify_trace(const WitnessChain& chain, const Presentation& p0, std::size_t level,
                  const ExtractionTrace& trace, const SunflowerCert& cert) {
    const auto& lv = chain.level(level);
    const Presentation p = sorted_copy(p0);
    if (p.k != level) return false;
    if (!verify_certificate(cert, chain.target, p)) return false;
    const auto& t = trace.transport;
    if (t.size() != lv.structure.size() || p.base.size() != t.size()) return false;
    if (std::set<Vertex>(t.begin(), t.end()).size() != t.size()) return false;
    if (!is_embedding(lv.structure, p.base, t)) return false;

    Presentation q = pull_back(p, lv.structure, t);
    std::vector<Vertex> up(lv.structure.size()); // current labels -> top chain labels
    for (Vertex v = 0; v < up.size(); ++v) up[v] = v;
    KSet lambdas;
    std::size_t j = level;
    for (std::size_t si = 0; si < trace.steps.size(); ++si) {
        const auto& st = trace.steps[si];
        const bool last = si + 1 == trace.steps.size();
        if (st.level != j) return false;
        const auto& cur = chain.level(j);
        if (st.kase == ExtractionCase::Base) {
            if (j != 1 || !last) return false;
            if (!is_embedding(chain.target, cur.structure, st.copy)) return false;
            for (Vertex x = 0; x < st.copy.size(); ++x)
                if (cert.iso.map[x] != t[up[st.copy[x]]]) return false;
            std::sort(lambdas.begin(), lambdas.end());
            return lambdas == cert.centre;
        }
        if (j < 2) return false;
        const Structure& d = chain.level(j - 1).structure;
        if (!is_embedding(d, cur.structure, st.copy)) return false;
        if (st.kase == ExtractionCase::Mono) {
            if (!st.part || !st.lambda || *st.part >= d.size() || st.f.size() != d.size()) return false;
            for (auto x : st.f)
                if (x >= j) return false;
            const auto chi = coordinate_colouring(q, cur.part_of, st.f);
            for (auto v : st.copy)
                if (cur.part_of[v] != *st.part || chi.values[v] != *st.lambda) return false;
            q = strip(q, d, st.copy, *st.lambda);
            std::vector<Vertex> nup;
            for (auto v : st.copy) nup.push_back(up[v]);
            up = std::move(nup);
            lambdas.push_back(*st.lambda);
            --j;
            continue;
        }
        // transversal
        if (!last) return false;
        std::set<Vertex> parts;
        for (auto v : st.copy) parts.insert(cur.part_of[v]);
        if (parts.size() != st.copy.size()) return false;
        if (!pairwise_disjoint(q, st.copy)) return false;
        std::set<Vertex> image;
        for (auto v : st.copy) image.insert(t[up[v]]);
        for (auto v : cert.iso.map)
            if (!image.count(v)) return false;
        std::sort(lambdas.begin(), lambdas.end());
        return lambdas == cert.centre;
    }
    return false;
}

} // namespace sunflower
