#include "sunflower/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <regex>
#include <set>

#include "sunflower/rational.hpp"
#include "sunflower/rng.hpp"

namespace sunflower {

std::string GeneratorId::str() const {
    if (name == "knfree") return "knfree(" + std::to_string(param) + ")";
    return name;
}

GeneratorId parse_generator(const std::string& text) {
    static const std::regex kn(R"(knfree\((\d+)\))");
    std::smatch m;
    if (std::regex_match(text, m, kn)) {
        GeneratorId id{"knfree", std::stoul(m[1])};
        if (id.param < 3) throw InvalidArgument("knfree(n) requires n >= 3");
        return id;
    }
    for (const auto& n : generator_names())
        if (n == text && n != "knfree(n)") return GeneratorId{text, 0};
    throw InvalidArgument("unknown generator '" + text + "'");
}

std::vector<std::string> generator_names() {
    return {"random-graph",   "knfree(n)",         "random-tournament", "random-oriented",
            "generic-poset",  "generic-ordered-graph", "equivalence-omega", "double-equivalence",
            "local-order",    "rb-bichrome",       "f-free-3hyper",     "pure-set",
            "rational-order"};
}

namespace {

Signature sig1(const std::string& name, unsigned arity = 2) {
    return Signature({{name, arity}});
}

Structure random_graph(std::size_t n, Rng& rng) {
    std::vector<std::vector<Tuple>> rels(1);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.coin()) {
                rels[0].push_back({u, v});
                rels[0].push_back({v, u});
            }
    return Structure(sig1("E"), n, std::move(rels));
}

Structure random_tournament(std::size_t n, Rng& rng) {
    std::vector<std::vector<Tuple>> rels(1);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.coin()) rels[0].push_back({u, v});
            else rels[0].push_back({v, u});
        }
    return Structure(sig1("E"), n, std::move(rels));
}

Structure random_oriented(std::size_t n, Rng& rng) {
    std::vector<std::vector<Tuple>> rels(1);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const auto c = rng.below(3);
            if (c == 1) rels[0].push_back({u, v});
            else if (c == 2) rels[0].push_back({v, u});
        }
    return Structure(sig1("E"), n, std::move(rels));
}

// Each new point picks, for every earlier point in turn, one of below /
// incomparable / above among the choices still forming a valid triple with the
// decisions made so far; such a choice always exists.
Structure generic_poset(std::size_t n, Rng& rng) {
    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
    for (Vertex x = 0; x < n; ++x) {
        std::vector<int> status(x, 0); // 0 = below x (C), 1 = incomparable (D), 2 = above x (E)
        for (Vertex v = 0; v < x; ++v) {
            bool can[3] = {true, true, true};
            for (Vertex w = 0; w < v; ++w) {
                const int s = status[w];
                if (s == 2 && !less[v][w]) can[0] = false;
                if (s == 1 && less[w][v]) can[0] = false;
                if (s == 0 && less[v][w]) can[1] = false;
                if (s == 2 && less[w][v]) can[1] = false;
                if (s == 0 && !less[w][v]) can[2] = false;
                if (s == 1 && less[v][w]) can[2] = false;
            }
            int opts[3], k = 0;
            for (int s = 0; s < 3; ++s)
                if (can[s]) opts[k++] = s;
            if (k == 0) throw InternalConsistency("poset extension got stuck");
            status[v] = opts[rng.below(static_cast<std::uint64_t>(k))];
        }
        for (Vertex v = 0; v < x; ++v) {
            if (status[v] == 0) less[v][x] = 1;
            if (status[v] == 2) less[x][v] = 1;
        }
    }
    std::vector<std::vector<Tuple>> rels(1);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (less[u][v]) rels[0].push_back({u, v});
    return Structure(sig1("L"), n, std::move(rels));
}

Structure generic_ordered_graph(std::size_t n, Rng& rng) {
    std::vector<Vertex> order; // vertices from least to greatest
    std::vector<std::vector<Tuple>> rels(2);
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex v = 0; v < x; ++v)
            if (rng.coin()) {
                rels[0].push_back({v, x});
                rels[0].push_back({x, v});
            }
        const auto pos = rng.below(order.size() + 1);
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), x);
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) rels[1].push_back({order[i], order[j]});
    return Structure(Signature({{"E", 2}, {"L", 2}}), n, std::move(rels));
}

// Substructure of s on the (few) vertices ws, by testing every tuple over ws.
Structure induced_small(const MutableStructure& s, const std::vector<Vertex>& ws) {
    const auto& sig = s.signature();
    std::vector<std::vector<Tuple>> rels(sig.size());
    for (std::size_t r = 0; r < sig.size(); ++r) {
        const unsigned a = sig.arity(r);
        std::vector<std::size_t> idx(a, 0);
        Tuple t(a), loc(a);
        for (;;) {
            for (unsigned i = 0; i < a; ++i) {
                t[i] = ws[idx[i]];
                loc[i] = static_cast<Vertex>(idx[i]);
            }
            if (s.holds(r, t)) rels[r].push_back(loc);
            std::size_t i = a;
            while (i > 0 && idx[i - 1] == ws.size() - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < a; ++j) idx[j] = 0;
        }
    }
    return Structure(sig, ws.size(), std::move(rels));
}

} // namespace

Generated gen_named(const GeneratorId& id, std::size_t size, std::uint64_t seed) {
    if (size < 1) throw InvalidArgument("generator size must be >= 1");
    Rng rng(seed);
    Generated g;
    g.meta["id"] = id.str();
    g.meta["seed"] = seed;
    const auto& nm = id.name;
    if (nm == "random-graph") {
        g.structure = random_graph(size, rng);
    } else if (nm == "knfree") {
        if (id.param < 3) throw InvalidArgument("knfree(n) requires n >= 3");
        g.structure = gen_generic(classes::knfree(id.param), size, seed);
    } else if (nm == "random-tournament") {
        g.structure = random_tournament(size, rng);
    } else if (nm == "random-oriented") {
        g.structure = random_oriented(size, rng);
    } else if (nm == "generic-poset") {
        g.structure = generic_poset(size, rng);
    } else if (nm == "generic-ordered-graph") {
        g.structure = generic_ordered_graph(size, rng);
    } else if (nm == "equivalence-omega") {
        // ceil(sqrt(size)) classes of near-equal size; class labels shuffled by seed.
        std::size_t q = 1;
        while (q * q < size) ++q;
        std::vector<std::size_t> cls(size);
        for (std::size_t v = 0; v < size; ++v) cls[v] = v % q;
        rng.shuffle(cls);
        std::vector<std::vector<Tuple>> rels(1);
        for (Vertex u = 0; u < size; ++u)
            for (Vertex v = 0; v < size; ++v)
                if (u != v && cls[u] == cls[v]) rels[0].push_back({u, v});
        g.structure = Structure(sig1("E"), size, std::move(rels));
        g.meta["classes"] = q;
        g.meta["class_of"] = cls;
    } else if (nm == "double-equivalence") {
        auto side = static_cast<std::size_t>(std::llround(std::cbrt(static_cast<double>(size))));
        side = std::max<std::size_t>(side, 1);
        const std::size_t n = side * side * side;
        std::vector<std::vector<Tuple>> rels(2);
        std::vector<std::array<std::size_t, 3>> coord(n);
        for (std::size_t v = 0; v < n; ++v) coord[v] = {v / (side * side), (v / side) % side, v % side};
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                if (u == v) continue;
                if (coord[u][0] == coord[v][0]) rels[0].push_back({u, v});
                if (coord[u][1] == coord[v][1]) rels[1].push_back({u, v});
            }
        g.structure = Structure(Signature({{"E0", 2}, {"E1", 2}}), n, std::move(rels));
        g.meta["side"] = side;
        g.meta["coords"] = coord;
    } else if (nm == "local-order") {
        // Angles i/N of a full turn, N = 2*size+1 odd so no two points are antipodal.
        const std::size_t N = 2 * size + 1;
        std::vector<std::size_t> all(N);
        for (std::size_t i = 0; i < N; ++i) all[i] = i;
        rng.shuffle(all);
        all.resize(size);
        std::vector<std::vector<Tuple>> rels(1);
        for (Vertex u = 0; u < size; ++u)
            for (Vertex v = 0; v < size; ++v) {
                if (u == v) continue;
                const std::size_t d = (all[v] + N - all[u]) % N;
                if (2 * d < N) rels[0].push_back({u, v});
            }
        g.structure = Structure(sig1("E"), size, std::move(rels));
        std::vector<std::string> angles;
        for (auto i : all) angles.push_back(to_string(Rational(i, N)));
        g.meta["angles"] = angles;
    } else if (nm == "rb-bichrome") {
        g.structure = gen_generic(classes::rb(), size, seed);
    } else if (nm == "f-free-3hyper") {
        g.structure = gen_generic(classes::f_free_3hyper(), size, seed);
    } else if (nm == "pure-set") {
        g.structure = Structure(Signature{}, size);
    } else if (nm == "rational-order") {
        // Distinct quarter-integers in [-size/2, size/2], always including 0 and 1.
        std::vector<long> ks;
        const long half = static_cast<long>(2 * size);
        for (long k = -half; k <= half; ++k)
            if (k != 0 && k != 4) ks.push_back(k);
        rng.shuffle(ks);
        ks.resize(size >= 2 ? size - 2 : 0);
        ks.push_back(0);
        if (size >= 2) ks.push_back(4);
        std::sort(ks.begin(), ks.end());
        std::vector<long> perm(ks.size());
        // Vertex labels are a seeded shuffle of the sorted values.
        std::vector<Vertex> ids(ks.size());
        for (Vertex i = 0; i < ids.size(); ++i) ids[i] = i;
        rng.shuffle(ids);
        std::vector<Rational> lab(ks.size());
        for (std::size_t i = 0; i < ks.size(); ++i) lab[ids[i]] = Rational(ks[i], 4);
        std::vector<std::vector<Tuple>> rels(1);
        for (Vertex u = 0; u < lab.size(); ++u)
            for (Vertex v = 0; v < lab.size(); ++v)
                if (lab[u] < lab[v]) rels[0].push_back({u, v});
        g.structure = Structure(sig1("L"), lab.size(), std::move(rels));
        std::vector<std::string> labels;
        for (const auto& q : lab) labels.push_back(to_string(q));
        g.meta["labels"] = labels;
    } else {
        throw InvalidArgument("unknown generator '" + nm + "'");
    }
    g.meta["size"] = g.structure.size();
    return g;
}

// ---------------------------------------------------------------------------

Structure gen_generic(const ClassSpec& k, std::size_t size, std::uint64_t seed) {
    const auto& sig = k.signature();
    Rng rng(seed);
    MutableStructure s(sig, size);
    const unsigned maxa = std::max<unsigned>(sig.max_arity(), 1);

    // Cache of locally admissible options keyed by (induced tuples on U+v, unit size).
    std::map<std::pair<std::vector<std::vector<Tuple>>, std::size_t>, std::vector<std::size_t>> local;

    for (std::size_t step = 0; step < size; ++step) {
        const Vertex v = s.add_vertex();
        // Units by size, random order within each level.
        std::vector<std::vector<Vertex>> level{{}};
        for (unsigned sz = 0; sz < maxa && sz <= v; ++sz) {
            if (sz > 0) {
                std::vector<std::vector<Vertex>> next;
                for (const auto& u : level)
                    for (Vertex w = u.empty() ? 0 : u.back() + 1; w < v; ++w) {
                        auto e = u;
                        e.push_back(w);
                        next.push_back(std::move(e));
                    }
                level = std::move(next);
            }
            auto units = level;
            rng.shuffle(units);
            for (const auto& u : units) {
                std::vector<Vertex> w = u;
                w.push_back(v);
                // Tuple slots with support exactly w.
                std::vector<std::pair<std::size_t, Tuple>> slots;
                for (std::size_t r = 0; r < sig.size(); ++r) {
                    const unsigned a = sig.arity(r);
                    if (a < w.size()) continue;
                    std::vector<std::size_t> idx(a, 0);
                    for (;;) {
                        Tuple t(a);
                        std::uint64_t seen = 0;
                        for (unsigned i = 0; i < a; ++i) {
                            t[i] = w[idx[i]];
                            seen |= std::uint64_t{1} << idx[i];
                        }
                        if (seen == (std::uint64_t{1} << w.size()) - 1) slots.emplace_back(r, std::move(t));
                        std::size_t i = a;
                        while (i > 0 && idx[i - 1] == w.size() - 1) --i;
                        if (i == 0) break;
                        ++idx[i - 1];
                        for (std::size_t j = i; j < a; ++j) idx[j] = 0;
                    }
                }
                if (slots.empty()) continue;
                if (slots.size() > 16) throw BudgetExceeded("gen_generic: too many tuple slots per unit");

                // Options admissible on w alone (independent of the rest).
                std::vector<Vertex> wv(w.begin(), w.end());
                Structure here = induced_small(s, wv);
                auto key = std::make_pair(here.all_tuples(), w.size());
                auto it = local.find(key);
                if (it == local.end()) {
                    std::vector<std::size_t> ok;
                    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
                        auto rels = here.all_tuples();
                        for (std::size_t b = 0; b < slots.size(); ++b)
                            if ((mask >> b) & 1) {
                                Tuple t;
                                for (auto x : slots[b].second)
                                    t.push_back(static_cast<Vertex>(std::find(wv.begin(), wv.end(), x) - wv.begin()));
                                rels[slots[b].first].push_back(std::move(t));
                            }
                        if (satisfies_class(Structure(sig, wv.size(), std::move(rels)), k)) ok.push_back(mask);
                    }
                    it = local.emplace(std::move(key), std::move(ok)).first;
                }
                std::vector<std::size_t> admissible;
                for (auto mask : it->second) {
                    if (mask == 0) {
                        admissible.push_back(mask);
                        continue;
                    }
                    for (std::size_t b = 0; b < slots.size(); ++b)
                        if ((mask >> b) & 1) s.add_tuple(slots[b].first, slots[b].second);
                    if (!violated_through(s, k, std::span<const Vertex>(w))) admissible.push_back(mask);
                    for (std::size_t b = 0; b < slots.size(); ++b)
                        if ((mask >> b) & 1) s.remove_tuple(slots[b].first, slots[b].second);
                }
                if (admissible.empty())
                    throw InvalidArgument("gen_generic: no admissible extension exists");
                const auto pick = admissible[rng.below(admissible.size())];
                for (std::size_t b = 0; b < slots.size(); ++b)
                    if ((pick >> b) & 1) s.add_tuple(slots[b].first, slots[b].second);
            }
        }
    }
    return s.freeze();
}

// ---------------------------------------------------------------------------

std::vector<MissingType> extension_defects(const Structure& s, const ClassSpec& k,
                                           std::size_t base_bound) {
    if (!satisfies_class(s, k)) throw InvalidArgument("extension_defects: structure is not in the class");
    std::vector<MissingType> out;
    std::map<std::pair<std::size_t, std::vector<std::vector<Tuple>>>, std::vector<QfType>> cache;
    const std::size_t n = s.size();
    for (std::size_t b = 0; b <= base_bound && b <= n; ++b) {
        std::vector<Vertex> base(b);
        for (std::size_t i = 0; i < b; ++i) base[i] = static_cast<Vertex>(i);
        for (;;) {
            const Structure a = s.induced(base);
            auto key = std::make_pair(b, a.all_tuples());
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, admissible_types(a, k)).first;
            std::set<std::vector<std::vector<std::uint8_t>>> realised;
            std::vector<char> in_base(n, 0);
            for (auto x : base) in_base[x] = 1;
            for (Vertex v = 0; v < n; ++v)
                if (!in_base[v]) realised.insert(qf_type_of(s, v, base).atoms);
            for (const auto& p : it->second)
                if (!realised.count(p.atoms)) {
                    QfType t = p;
                    t.params = base;
                    out.push_back(MissingType{base, std::move(t)});
                }
            // next increasing sequence
            std::size_t i = b;
            while (i > 0 && base[i - 1] == n - b + i - 1) --i;
            if (i == 0) break;
            ++base[i - 1];
            for (std::size_t j = i; j < b; ++j) base[j] = base[j - 1] + 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

bool is_tournament(const Structure& s, std::size_t r) {
    for (Vertex u = 0; u < s.size(); ++u) {
        if (s.holds(r, {u, u})) return false;
        for (Vertex v = u + 1; v < s.size(); ++v)
            if (s.holds(r, {u, v}) == s.holds(r, {v, u})) return false;
    }
    return s.tuple_count(r) == s.size() * (s.size() - (s.size() ? 1 : 0)) / 2;
}

bool is_strict_partial_order(const Structure& s, std::size_t r) {
    const auto n = static_cast<Vertex>(s.size());
    for (Vertex u = 0; u < n; ++u) {
        if (s.holds(r, {u, u})) return false;
        for (Vertex v = 0; v < n; ++v) {
            if (!s.holds(r, {u, v})) continue;
            if (s.holds(r, {v, u})) return false;
            for (Vertex w = 0; w < n; ++w)
                if (s.holds(r, {v, w}) && !s.holds(r, {u, w})) return false;
        }
    }
    return true;
}

bool is_strict_linear_order(const Structure& s, std::size_t r) {
    return is_strict_partial_order(s, r) && is_tournament(s, r);
}

bool is_equivalence_graph(const Structure& s, std::size_t r) {
    const auto n = static_cast<Vertex>(s.size());
    for (Vertex u = 0; u < n; ++u) {
        if (s.holds(r, {u, u})) return false;
        for (Vertex v = 0; v < n; ++v) {
            if (!s.holds(r, {u, v})) continue;
            if (!s.holds(r, {v, u})) return false;
            for (Vertex w = 0; w < n; ++w)
                if (w != u && s.holds(r, {v, w}) && !s.holds(r, {u, w})) return false;
        }
    }
    return true;
}

bool has_directed_triangle(const Structure& s, std::span<const Vertex> vs, std::size_t r) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (i == j || !s.holds(r, {vs[i], vs[j]})) continue;
            for (std::size_t l = 0; l < vs.size(); ++l)
                if (l != i && l != j && s.holds(r, {vs[j], vs[l]}) && s.holds(r, {vs[l], vs[i]}))
                    return true;
        }
    return false;
}

bool in_defining_class(const GeneratorId& id, const Structure& s) {
    const auto& nm = id.name;
    if (nm == "random-graph") return satisfies_class(s, classes::graphs());
    if (nm == "knfree") return satisfies_class(s, classes::knfree(id.param));
    if (nm == "random-tournament" || nm == "local-order") return is_tournament(s);
    if (nm == "random-oriented") return satisfies_class(s, classes::oriented());
    if (nm == "generic-poset") return is_strict_partial_order(s, 0);
    if (nm == "generic-ordered-graph") {
        Structure e = Structure(Signature({{"E", 2}}), s.size(), {s.tuples(0)});
        Structure l = Structure(Signature({{"L", 2}}), s.size(), {s.tuples(1)});
        return satisfies_class(e, classes::graphs()) && is_strict_linear_order(l, 0);
    }
    if (nm == "equivalence-omega") return is_equivalence_graph(s, 0);
    if (nm == "double-equivalence") return is_equivalence_graph(s, 0) && is_equivalence_graph(s, 1);
    if (nm == "rb-bichrome") return satisfies_class(s, classes::rb());
    if (nm == "f-free-3hyper") return satisfies_class(s, classes::f_free_3hyper());
    if (nm == "pure-set") return s.signature().empty();
    if (nm == "rational-order") return is_strict_linear_order(s, 0);
    throw InvalidArgument("unknown generator '" + nm + "'");
}

} // namespace sunflower
