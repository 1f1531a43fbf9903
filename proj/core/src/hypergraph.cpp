#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "sunflower/ramsey.hpp"
#include "sunflower/rng.hpp"

namespace sunflower {

std::size_t PartitionedHypergraph::vertex_count() const {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    return n;
}

void PartitionedHypergraph::validate() const {
    if (n < 1) throw InvalidArgument("hypergraph: uniformity must be positive");
    if (parts.size() != n) throw InvalidArgument("hypergraph: need exactly n parts");
    const std::size_t total = vertex_count();
    std::vector<char> seen(total, 0);
    for (const auto& p : parts) {
        if (p.size() != parts[0].size()) throw InvalidArgument("hypergraph: parts must have equal size");
        for (auto v : p) {
            if (v >= total || seen[v]) throw InvalidArgument("hypergraph: parts must partition 0..|V|-1");
            seen[v] = 1;
        }
    }
    std::set<std::vector<Vertex>> es;
    for (const auto& e : edges) {
        if (e.size() != n) throw InvalidArgument("hypergraph: edge of the wrong size");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] >= total) throw InvalidArgument("hypergraph: edge vertex out of range");
            if (i > 0 && e[i - 1] >= e[i]) throw InvalidArgument("hypergraph: edges must be strictly increasing");
        }
        if (!es.insert(e).second) throw InvalidArgument("hypergraph: repeated edge");
    }
}

std::vector<std::size_t> PartitionedHypergraph::part_of() const {
    std::vector<std::size_t> out(vertex_count(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto v : parts[i]) out[v] = i;
    return out;
}

bool PartitionedHypergraph::is_transversal(const std::vector<Vertex>& e) const {
    const auto po = part_of();
    std::vector<char> hit(parts.size(), 0);
    for (auto v : e) {
        if (hit[po[v]]) return false;
        hit[po[v]] = 1;
    }
    return e.size() == parts.size();
}

// ---- girth ------------------------------------------------------------------

namespace {

// Shortest cycle of the vertex/edge incidence graph (length 2m for a Berge
// m-cycle). Returns its node sequence; node ids >= V are hyperedges.
std::vector<std::size_t> incidence_shortest_cycle(const PartitionedHypergraph& h) {
    const std::size_t V = h.vertex_count(), E = h.edges.size(), N = V + E;
    std::vector<std::vector<std::size_t>> adj(N);
    for (std::size_t e = 0; e < E; ++e)
        for (auto v : h.edges[e]) {
            adj[v].push_back(V + e);
            adj[V + e].push_back(v);
        }
    std::size_t best = kInfiniteGirth;
    std::vector<std::size_t> best_cycle;
    std::vector<std::size_t> dist(N), parent(N);
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    for (std::size_t root = 0; root < N; ++root) {
        if (adj[root].empty()) continue;
        std::fill(dist.begin(), dist.end(), kNone);
        dist[root] = 0;
        parent[root] = kNone;
        std::deque<std::size_t> q{root};
        while (!q.empty()) {
            const auto u = q.front();
            q.pop_front();
            if (best != kInfiniteGirth && 2 * dist[u] + 1 >= best) break;
            for (auto w : adj[u]) {
                if (dist[w] == kNone) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u] && dist[w] >= dist[u]) {
                    const std::size_t len = dist[u] + dist[w] + 1;
                    if (len < best) {
                        // paths root->u and root->w are disjoint at a global minimum
                        std::vector<std::size_t> a, b;
                        for (auto x = u; x != kNone; x = parent[x]) a.push_back(x);
                        for (auto x = w; x != kNone; x = parent[x]) b.push_back(x);
                        std::set<std::size_t> sa(a.begin(), a.end() - 1);
                        bool simple = true;
                        for (std::size_t i = 0; i + 1 < b.size(); ++i)
                            if (sa.count(b[i])) simple = false;
                        if (!simple) continue;
                        best = len;
                        std::reverse(a.begin(), a.end());
                        best_cycle = a;
                        for (std::size_t i = 0; i + 1 < b.size(); ++i) best_cycle.push_back(b[i]);
                    }
                }
            }
        }
    }
    return best_cycle;
}

} // namespace

std::size_t hypergraph_girth(const PartitionedHypergraph& h) {
    const auto cyc = incidence_shortest_cycle(h);
    return cyc.empty() ? kInfiniteGirth : cyc.size() / 2;
}

std::vector<std::size_t> shortest_cycle_edges(const PartitionedHypergraph& h) {
    const std::size_t V = h.vertex_count();
    std::vector<std::size_t> out;
    for (auto x : incidence_shortest_cycle(h))
        if (x >= V) out.push_back(x - V);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- generation ---------------------------------------------------------------

namespace {

std::uint64_t binom_u64(std::uint64_t m, unsigned k) {
    if (k > m) return 0;
    BigInt acc = 1;
    for (unsigned i = 0; i < k; ++i) acc = acc * (m - i) / (i + 1);
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw BudgetExceeded("too many candidate n-sets");
    return acc.convert_to<std::uint64_t>();
}

// The idx-th n-subset of {0..m-1} in lexicographic order.
std::vector<Vertex> unrank(std::uint64_t idx, std::uint64_t m, unsigned k) {
    std::vector<Vertex> out;
    std::uint64_t x = 0;
    for (unsigned i = 0; i < k; ++i) {
        for (;; ++x) {
            const auto cnt = binom_u64(m - x - 1, k - i - 1);
            if (idx < cnt) break;
            idx -= cnt;
        }
        out.push_back(static_cast<Vertex>(x));
        ++x;
    }
    return out;
}

PartitionedHypergraph sample_once(unsigned n, std::uint64_t c, const Rational& p, std::uint64_t seed) {
    PartitionedHypergraph h;
    h.n = n;
    h.parts.resize(n);
    for (unsigned i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < c; ++j) h.parts[i].push_back(static_cast<Vertex>(i * c + j));
    const std::uint64_t V = n * c;
    const std::uint64_t total = binom_u64(V, n);
    Rng rng(seed);
    const long double pf = to_long_double(p);
    if (pf >= 1) {
        for (std::uint64_t i = 0; i < total; ++i) h.edges.push_back(unrank(i, V, n));
        return h;
    }
    // geometric gaps between selected candidates
    const long double lq = std::log1p(-pf);
    std::uint64_t pos = 0;
    for (;;) {
        const long double u = (static_cast<long double>(rng.next() >> 11) + 0.5L) / 9007199254740992.0L;
        const long double gap = std::floor(std::log(u) / lq);
        if (gap >= static_cast<long double>(total - pos)) break;
        pos += static_cast<std::uint64_t>(gap);
        h.edges.push_back(unrank(pos, V, n));
        if (++pos >= total) break;
    }
    return h;
}

// Keeps edges in order, dropping each edge that would close a Berge cycle of
// length < g with the edges kept so far. An edge closes such a cycle iff two
// of its vertices are already joined by a path of at most g - 2 edges (a
// shortest path repeats neither vertices nor edges). Every dropped edge lies
// on its own short cycle of the sample, so the count never exceeds theirs.
std::size_t drop_short_cycles(PartitionedHypergraph& h, unsigned g) {
    const std::size_t V = h.vertex_count();
    std::vector<std::vector<std::size_t>> inc(V);
    std::vector<std::vector<Vertex>> kept;
    std::vector<std::uint32_t> dist(V, ~std::uint32_t{0});
    std::vector<Vertex> touched, frontier, next;
    const std::uint32_t depth = g - 2;
    std::size_t removed = 0;
    for (auto& e : h.edges) {
        bool closes = false;
        for (std::size_t a = 0; a + 1 < e.size() && !closes; ++a) {
            dist[e[a]] = 0;
            touched.assign(1, e[a]);
            frontier.assign(1, e[a]);
            for (std::uint32_t d = 1; d <= depth && !frontier.empty() && !closes; ++d) {
                next.clear();
                for (auto u : frontier)
                    for (auto ei : inc[u])
                        for (auto w : kept[ei])
                            if (dist[w] == ~std::uint32_t{0}) {
                                dist[w] = d;
                                touched.push_back(w);
                                next.push_back(w);
                            }
                std::swap(frontier, next);
            }
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (dist[e[b]] != ~std::uint32_t{0}) closes = true;
            for (auto w : touched) dist[w] = ~std::uint32_t{0};
        }
        if (closes) {
            ++removed;
            continue;
        }
        for (auto v : e) inc[v].push_back(kept.size());
        kept.push_back(std::move(e));
    }
    h.edges = std::move(kept);
    return removed;
}

} // namespace

PartitionedHypergraph gen_witness_hypergraph(unsigned n, unsigned s, unsigned g, std::uint64_t seed,
                                             const WitnessGenOptions& opt) {
    if (n < 2 || s < 1 || g < 2) throw InvalidArgument("gen_witness_hypergraph: need n >= 2, s >= 1, g >= 2");
    const Rational eps = default_epsilon(g);
    const SuitableParams sp = suitable_params(n, Rational(1, 2 * s));
    const Rational a = std::min(sp.a0, Rational(1, 2));

    // Least power of two whose failure bound meets the threshold (advisory).
    long double c_theory = 0;
    {
        const long double thr = std::log(to_long_double(opt.threshold));
        const long double ep = to_long_double(eps), av = to_long_double(a);
        for (int t = 1; t < 4000; ++t) {
            const long double lc = t * std::log(2.0L);
            const long double cc = std::exp(lc);
            const long double lv = -av * std::exp((1 + ep) * lc) + (cc * n * s + cc * n + 1) * lc + cc * n * s * std::log((long double)n);
            if (lv < thr) {
                c_theory = t;
                break;
            }
        }
    }

    std::uint64_t c;
    if (opt.c_override) {
        c = *opt.c_override;
        if (c < 1) throw InvalidArgument("c must be positive");
    } else {
        c = std::max<std::uint64_t>(sp.c_min, 1);
        while (edge_probability(c, n, eps) >= Rational(1, 2)) ++c;
    }
    const GenParams gp = make_gen_params(n, s, g, c);

    for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
        const std::uint64_t sub = attempt == 0 ? seed : Rng::derive(seed, attempt);
        PartitionedHypergraph h = sample_once(n, c, gp.p, sub);
        const std::size_t sampled = h.edges.size();
        std::size_t removed = 0;
        if (g > 2) removed = drop_short_cycles(h, g);
        if (h.edges.size() < opt.edge_floor) continue;
        if (opt.require_few_removals && removed >= c) continue;
        const auto fb = failure_bound(gp, a);
        h.meta = {{"n", n},
                  {"s", s},
                  {"g", g},
                  {"epsilon", to_string(eps)},
                  {"c", c},
                  {"p", to_string(gp.p)},
                  {"p_approx", static_cast<double>(to_long_double(gp.p))},
                  {"seed", seed},
                  {"sample_seed", sub},
                  {"attempts", attempt + 1},
                  {"sampled_edges", sampled},
                  {"removed", removed},
                  {"few_removals", removed < c},
                  {"a", to_string(a)},
                  {"failure_bound_log", static_cast<double>(fb.log_value)},
                  {"failure_bound_met", fb.log_value < std::log(to_long_double(opt.threshold))},
                  {"theoretical_c_log2", static_cast<double>(c_theory)},
                  {"c_overridden", opt.c_override.has_value()}};
        return h;
    }
    throw Error("gen_witness_hypergraph: no acceptable sample within " + std::to_string(opt.max_attempts) +
                " attempts");
}

// ---- adversary ------------------------------------------------------------

bool is_vcvrp_counterexample(const PartitionedHypergraph& h, const std::vector<Colouring>& cs) {
    const auto po = h.part_of();
    for (const auto& chi : cs)
        if (chi.values.size() != po.size()) throw InvalidArgument("colouring is not total");
    for (const auto& e : h.edges) {
        std::set<std::size_t> ps;
        for (auto v : e) ps.insert(po[v]);
        if (ps.size() == 1) {
            for (const auto& chi : cs) {
                bool mono = true;
                for (auto v : e) mono = mono && chi.values[v] == chi.values[e[0]];
                if (mono) return false;
            }
        } else if (ps.size() == e.size()) {
            bool all_het = true;
            for (const auto& chi : cs) {
                std::set<std::uint64_t> cols;
                for (auto v : e) cols.insert(chi.values[v]);
                all_het = all_het && cols.size() == e.size();
            }
            if (all_het) return false;
        }
    }
    return true;
}

namespace {

Colouring to_rgs(const Colouring& chi) {
    std::map<std::uint64_t, std::uint64_t> m;
    Colouring out;
    for (auto c : chi.values) {
        auto it = m.find(c);
        if (it == m.end()) it = m.emplace(c, m.size()).first;
        out.values.push_back(it->second);
    }
    return out;
}

} // namespace

AdversaryResult vcvrp_adversary(const PartitionedHypergraph& h, unsigned s, AdversaryMode mode,
                                std::size_t trials, std::uint64_t seed, std::size_t budget) {
    h.validate();
    if (s < 1) throw InvalidArgument("vcvrp_adversary: s must be positive");
    const std::size_t V = h.vertex_count();
    const auto po = h.part_of();
    AdversaryResult res;

    if (mode == AdversaryMode::Random) {
        Rng rng(seed);
        for (std::size_t t = 0; t < trials; ++t) {
            ++res.nodes;
            std::vector<Colouring> cs(s);
            for (auto& chi : cs) {
                const auto q = 1 + rng.below(std::max<std::size_t>(V, 1));
                for (std::size_t v = 0; v < V; ++v) chi.values.push_back(rng.below(q));
                chi = to_rgs(chi);
            }
            if (is_vcvrp_counterexample(h, cs)) {
                res.counterexample = std::move(cs);
                return res;
            }
        }
        return res;
    }

    // Edges are checked once their largest vertex is coloured in every colouring.
    std::vector<std::vector<std::size_t>> closing(V);
    std::vector<int> kind(h.edges.size(), 0); // 1 inside a part, 2 transversal, 0 neither
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        closing[e.back()].push_back(i);
        std::set<std::size_t> ps;
        for (auto v : e) ps.insert(po[v]);
        kind[i] = ps.size() == 1 ? 1 : (ps.size() == e.size() ? 2 : 0);
    }
    std::vector<std::vector<std::uint64_t>> col(s, std::vector<std::uint64_t>(V, 0));
    std::vector<std::vector<std::uint64_t>> used(s, std::vector<std::uint64_t>(V + 1, 0)); // colours used before v
    bool found = false;

    auto edges_ok = [&](Vertex v) {
        for (auto i : closing[v]) {
            const auto& e = h.edges[i];
            if (kind[i] == 1) {
                for (unsigned r = 0; r < s; ++r) {
                    bool mono = true;
                    for (auto u : e) mono = mono && col[r][u] == col[r][e[0]];
                    if (mono) return false;
                }
            } else if (kind[i] == 2) {
                bool all_het = true;
                for (unsigned r = 0; r < s && all_het; ++r)
                    for (std::size_t a = 0; a < e.size() && all_het; ++a)
                        for (std::size_t b = a + 1; b < e.size(); ++b)
                            if (col[r][e[a]] == col[r][e[b]]) {
                                all_het = false;
                                break;
                            }
                if (all_het) return false;
            }
        }
        return true;
    };

    std::function<void(Vertex, unsigned)> rec = [&](Vertex v, unsigned r) {
        if (found) return;
        if (v == V) {
            found = true;
            return;
        }
        if (r == s) {
            if (edges_ok(v)) rec(v + 1, 0);
            return;
        }
        const std::uint64_t k = used[r][v];
        for (std::uint64_t c = 0; c <= k && !found; ++c) {
            if (++res.nodes > budget) throw BudgetExceeded("vcvrp_adversary: budget exceeded");
            col[r][v] = c;
            used[r][v + 1] = std::max(k, c + 1);
            rec(v, r + 1);
        }
    };
    if (V > 0) rec(0, 0);
    else found = is_vcvrp_counterexample(h, std::vector<Colouring>(s));
    if (found) {
        std::vector<Colouring> cs(s);
        for (unsigned r = 0; r < s; ++r) cs[r].values = col[r];
        res.counterexample = std::move(cs);
    }
    return res;
}

} // namespace sunflower
