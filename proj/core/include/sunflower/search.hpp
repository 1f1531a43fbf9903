#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sunflower/structure.hpp"

namespace sunflower {

inline constexpr std::size_t kUnlimited = static_cast<std::size_t>(-1);

struct SearchOptions {
    // Fixed assignments pattern vertex -> target vertex.
    std::vector<std::pair<Vertex, Vertex>> pins;
    // Optional per-vertex admissibility (pattern vertex, target vertex).
    std::function<bool(Vertex, Vertex)> allow;
    // Called after each assignment with the partial map (unassigned entries are
    // kNoVertex) and the pattern vertex just placed; returning false cuts the branch.
    std::function<bool(std::span<const Vertex>, Vertex)> prune;
};

// Backtracking search for induced embeddings of `pattern` into `target`.
//
// Pinned pattern vertices are placed first, the rest in index order, and
// candidates are tried in ascending order, so maps are reported in
// lexicographic order of the image sequence. `visit(map)` returns false to stop.
//
// Target needs size(), degree(), neighbours() (sorted), adjacent(), holds()
// and for_each_incident(); both Structure and MutableStructure qualify.
template <class Target, class Visitor>
void search_embeddings(const Structure& pattern, const Target& target,
                       const SearchOptions& opt, Visitor&& visit) {
    if (!(pattern.signature() == target.signature())) throw SignatureMismatch();
    const std::size_t m = pattern.size();
    const std::size_t n = target.size();
    if (m > n) return;

    std::vector<Vertex> pin(m, kNoVertex);
    std::vector<char> reserved(n, 0);
    for (const auto& [x, c] : opt.pins) {
        if (x >= m || c >= n) throw InvalidArgument("pin out of range");
        if (pin[x] != kNoVertex || reserved[c]) throw InvalidArgument("conflicting pins");
        pin[x] = c;
        reserved[c] = 1;
    }

    std::vector<Vertex> order;
    order.reserve(m);
    for (Vertex x = 0; x < m; ++x)
        if (pin[x] != kNoVertex) order.push_back(x);
    for (Vertex x = 0; x < m; ++x)
        if (pin[x] == kNoVertex) order.push_back(x);
    std::vector<std::size_t> rank(m);
    for (std::size_t p = 0; p < m; ++p) rank[order[p]] = p;

    std::vector<std::vector<Vertex>> earlier(m);
    for (Vertex x = 0; x < m; ++x)
        for (auto y : pattern.neighbours(x))
            if (rank[y] < rank[x]) earlier[x].push_back(y);

    // Pattern tuples, bucketed by the position at which they become fully mapped.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> closing(m);
    for (std::size_t r = 0; r < pattern.signature().size(); ++r)
        for (std::size_t i = 0; i < pattern.tuple_count(r); ++i) {
            std::size_t last = 0;
            for (auto v : pattern.tuple(r, i)) last = std::max(last, rank[v]);
            closing[last].emplace_back(r, i);
        }

    std::vector<Vertex> map(m, kNoVertex), inv(n, kNoVertex);
    std::vector<Vertex> buf(std::max<unsigned>(pattern.signature().max_arity(), 1));
    std::vector<Vertex> pre;

    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == m) return visit(std::span<const Vertex>(map));
        const Vertex x = order[pos];

        auto attempt = [&](Vertex c) -> bool {
            if (inv[c] != kNoVertex) return true;
            if (reserved[c] && pin[x] != c) return true;
            if (target.degree(c) < pattern.degree(x)) return true;
            if (opt.allow && !opt.allow(x, c)) return true;
            for (auto y : earlier[x])
                if (!target.adjacent(map[y], c)) return true;
            map[x] = c;
            inv[c] = x;
            bool ok = true;
            for (const auto& [r, i] : closing[pos]) {
                auto t = pattern.tuple(r, i);
                for (std::size_t j = 0; j < t.size(); ++j) buf[j] = map[t[j]];
                if (!target.holds(r, std::span<const Vertex>(buf.data(), t.size()))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // Every target tuple now lying inside the image must come from the pattern.
                target.for_each_incident(c, [&](std::size_t r, std::span<const Vertex> t) {
                    if (!ok) return;
                    pre.resize(t.size());
                    for (std::size_t j = 0; j < t.size(); ++j) {
                        pre[j] = inv[t[j]];
                        if (pre[j] == kNoVertex) return;
                    }
                    if (!pattern.holds(r, pre)) ok = false;
                });
            }
            if (ok && opt.prune && !opt.prune(std::span<const Vertex>(map), x)) ok = false;
            bool cont = true;
            if (ok) cont = rec(pos + 1);
            map[x] = kNoVertex;
            inv[c] = kNoVertex;
            return cont;
        };

        if (pin[x] != kNoVertex) return attempt(pin[x]);
        if (!earlier[x].empty()) {
            Vertex anchor = map[earlier[x][0]];
            for (auto y : earlier[x])
                if (target.degree(map[y]) < target.degree(anchor)) anchor = map[y];
            for (auto c : target.neighbours(anchor))
                if (!attempt(c)) return false;
            return true;
        }
        for (Vertex c = 0; c < n; ++c)
            if (!attempt(c)) return false;
        return true;
    };
    rec(0);
}

std::vector<Embedding> find_embeddings(const Structure& a, const Structure& b,
                                       std::size_t limit = kUnlimited,
                                       const SearchOptions& opt = {});
std::optional<Embedding> first_embedding(const Structure& a, const Structure& b,
                                         const SearchOptions& opt = {});
std::size_t count_embeddings(const Structure& a, const Structure& b,
                             std::size_t limit = kUnlimited);
bool embeds(const Structure& a, const Structure& b);

// True iff map is an injective induced embedding of a into b.
bool is_embedding(const Structure& a, const Structure& b, std::span<const Vertex> map);

// Bijective induced embedding, or none. Candidates are restricted by joint
// colour refinement before backtracking.
std::optional<Embedding> are_isomorphic(const Structure& a, const Structure& b);

// Colour-refinement classes of the vertices of each structure, computed jointly
// so that equal colours are comparable across the pair.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
joint_refinement(const Structure& a, const Structure& b);

} // namespace sunflower
