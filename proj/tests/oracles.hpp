// Brute-force reference implementations used to cross-check the library.
// Deliberately naive: permutations, full enumeration, no pruning.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sunflower/ksets.hpp"
#include "sunflower/ramsey.hpp"
#include "sunflower/structure.hpp"

namespace oracle {

using namespace sunflower;

// All injective maps a -> b that preserve and reflect every relation.
inline std::vector<std::vector<Vertex>> embeddings(const Structure& a, const Structure& b) {
    std::vector<std::vector<Vertex>> out;
    const std::size_t m = a.size(), n = b.size();
    if (m > n) return out;
    std::vector<Vertex> map(m);
    std::vector<char> used(n, 0);
    auto check = [&] {
        for (std::size_t r = 0; r < a.signature().size(); ++r) {
            const unsigned ar = a.signature().arity(r);
            // every tuple over the image
            std::vector<Vertex> idx(ar, 0);
            for (;;) {
                Tuple ta(ar), tb(ar);
                for (unsigned i = 0; i < ar; ++i) {
                    ta[i] = idx[i];
                    tb[i] = map[idx[i]];
                }
                if (a.holds(r, ta) != b.holds(r, tb)) return false;
                unsigned i = 0;
                while (i < ar && ++idx[i] == m) idx[i++] = 0;
                if (i == ar) break;
            }
        }
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            if (check()) out.push_back(map);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            map[i] = v;
            rec(i + 1);
            used[v] = 0;
        }
    };
    rec(0);
    return out;
}

// Lexicographically least image of the set list under all ground permutations.
inline std::vector<KSet> canonical_sets(const std::vector<KSet>& sets) {
    std::set<Ground> ground;
    for (const auto& s : sets) ground.insert(s.begin(), s.end());
    std::vector<Ground> g(ground.begin(), ground.end());
    std::vector<Ground> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<KSet> best;
    do {
        std::map<Ground, Ground> rename;
        for (std::size_t i = 0; i < g.size(); ++i) rename[g[i]] = perm[i];
        std::vector<KSet> img;
        for (const auto& s : sets) {
            KSet t;
            for (auto x : s) t.push_back(rename[x]);
            std::sort(t.begin(), t.end());
            img.push_back(std::move(t));
        }
        if (best.empty() || img < best) best = std::move(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every presentation of n labelled vertices on k-sets, up to ground
// relabelling, as canonical set lists. Ground elements are generated in order
// of first appearance (each set takes some old elements and the next fresh
// ones), which reaches every relabelling class.
inline std::set<std::vector<KSet>> all_presentations(std::size_t n, std::size_t k) {
    std::set<std::vector<KSet>> out;
    std::vector<KSet> pick;
    std::function<void(Ground)> rec = [&](Ground used) {
        if (pick.size() == n) {
            out.insert(canonical_sets(pick));
            return;
        }
        for (std::size_t fresh = 0; fresh <= k; ++fresh) {
            const std::size_t old = k - fresh;
            if (old > used) continue;
            // all old-subsets of {0..used-1} by bitmask
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << used); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) != old) continue;
                KSet s;
                for (Ground g = 0; g < used; ++g)
                    if ((mask >> g) & 1) s.push_back(g);
                for (std::size_t f = 0; f < fresh; ++f) s.push_back(used + f);
                if (std::find(pick.begin(), pick.end(), s) != pick.end()) continue;
                pick.push_back(s);
                rec(used + fresh);
                pick.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

// True iff the sets pairwise meet in one common set.
inline bool is_sunflower(const std::vector<KSet>& fam) {
    if (fam.size() < 2) return true;
    std::vector<Ground> c;
    std::set_intersection(fam[0].begin(), fam[0].end(), fam[1].begin(), fam[1].end(), std::back_inserter(c));
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            std::vector<Ground> d;
            std::set_intersection(fam[i].begin(), fam[i].end(), fam[j].begin(), fam[j].end(),
                                  std::back_inserter(d));
            if (d != c) return false;
        }
    return true;
}

// Berge girth by exhaustive search over closed incidence walks of length m.
inline std::size_t girth(const PartitionedHypergraph& h, std::size_t max_m) {
    const std::size_t V = h.vertex_count();
    for (std::size_t m = 2; m <= max_m; ++m) {
        std::vector<Vertex> vs;
        std::vector<std::size_t> es;
        std::vector<char> vused(V, 0), eused(h.edges.size(), 0);
        auto contains = [&](std::size_t e, Vertex v) {
            return std::binary_search(h.edges[e].begin(), h.edges[e].end(), v);
        };
        bool found = false;
        std::function<void()> rec = [&] {
            if (found) return;
            if (vs.size() == m && es.size() == m - 1) {
                for (std::size_t e = 0; e < h.edges.size(); ++e)
                    if (!eused[e] && contains(e, vs.back()) && contains(e, vs.front())) found = true;
                return;
            }
            if (vs.size() == es.size()) {
                for (Vertex v = 0; v < V; ++v) {
                    if (vused[v] || (!es.empty() && !contains(es.back(), v))) continue;
                    if (!vs.empty() && v < vs.front()) continue; // the least vertex starts the cycle
                    vused[v] = 1;
                    vs.push_back(v);
                    rec();
                    vs.pop_back();
                    vused[v] = 0;
                }
            } else {
                for (std::size_t e = 0; e < h.edges.size(); ++e) {
                    if (eused[e] || !contains(e, vs.back())) continue;
                    eused[e] = 1;
                    es.push_back(e);
                    rec();
                    es.pop_back();
                    eused[e] = 0;
                }
            }
        };
        rec();
        if (found) return m;
    }
    return kInfiniteGirth;
}

// Potential m-cycles by enumeration: distinct vertices v_0..v_{m-1} of [V] and
// n-sets e_i over [V] with {v_i, v_{i+1}} in e_i.
inline std::uint64_t potential_cycles(std::size_t V, unsigned n, unsigned m) {
    // n-subsets of [V] containing {0, 1}, counted by listing all bitmasks
    std::uint64_t per_edge_choices = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << V); ++mask)
        if (static_cast<unsigned>(__builtin_popcountll(mask)) == n && (mask & 3) == 3) ++per_edge_choices;
    std::uint64_t seqs = 0;
    std::vector<Vertex> vs;
    std::vector<char> used(V, 0);
    std::function<void()> rec = [&] {
        if (vs.size() == m) {
            ++seqs;
            return;
        }
        for (Vertex v = 0; v < V; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            vs.push_back(v);
            rec();
            vs.pop_back();
            used[v] = 0;
        }
    };
    rec();
    std::uint64_t total = seqs;
    for (unsigned i = 0; i < m; ++i) total *= per_edge_choices;
    return total;
}

} // namespace oracle
