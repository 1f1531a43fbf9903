#include "sunflower/ksets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sunflower/rng.hpp"

namespace sunflower {

void Presentation::normalise() {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    validate();
}

void Presentation::validate() const {
    if (k == 0) throw InvalidArgument("presentation: k must be positive");
    if (sets.size() != base.size()) throw InvalidArgument("presentation: one set per vertex required");
    for (const auto& s : sets) {
        if (s.size() != k) throw InvalidArgument("presentation: set of the wrong size");
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i - 1] >= s[i]) throw InvalidArgument("presentation: sets must be strictly increasing");
    }
    std::set<KSet> seen(sets.begin(), sets.end());
    if (seen.size() != sets.size()) throw InvalidArgument("presentation: repeated set");
}

Ground intersect_size(const KSet& a, const KSet& b) {
    Ground n = 0;
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

KSet intersection(const KSet& a, const KSet& b) {
    KSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::optional<KSet> sunflower_centre(const std::vector<KSet>& sets) {
    std::vector<KSet> sorted = sets;
    for (auto& s : sorted) std::sort(s.begin(), s.end());
    if (std::set<KSet>(sorted.begin(), sorted.end()).size() != sorted.size())
        throw InvalidArgument("sunflower_centre: sets must be distinct");
    if (sorted.empty()) return KSet{};
    if (sorted.size() == 1) return sorted[0];
    const KSet c = intersection(sorted[0], sorted[1]);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if ((i > 0 || j > 1) && intersection(sorted[i], sorted[j]) != c) return std::nullopt;
    return c;
}

std::vector<SunflowerCert> find_sunflower_copies(const Presentation& p, const Structure& b,
                                                 std::size_t limit) {
    if (!(p.base.signature() == b.signature())) throw SignatureMismatch();
    std::vector<SunflowerCert> out;
    if (limit == 0) return out;
    SearchOptions opt;
    // The sunflower condition is hereditary, so partial maps can be checked as
    // they grow: the new set must meet every mapped set in the same centre.
    opt.prune = [&](std::span<const Vertex> map, Vertex x) {
        const Vertex cx = map[x];
        Vertex a = kNoVertex, c = kNoVertex;
        for (Vertex y = 0; y < map.size(); ++y) {
            if (y == x || map[y] == kNoVertex) continue;
            if (a == kNoVertex) a = map[y];
            else if (c == kNoVertex) c = map[y];
        }
        if (a == kNoVertex) return true;
        const KSet ref = c == kNoVertex ? intersection(p.sets[cx], p.sets[a])
                                        : intersection(p.sets[a], p.sets[c]);
        for (Vertex y = 0; y < map.size(); ++y) {
            if (y == x || map[y] == kNoVertex) continue;
            if (intersection(p.sets[cx], p.sets[map[y]]) != ref) return false;
        }
        return true;
    };
    search_embeddings(b, p.base, opt, [&](std::span<const Vertex> map) {
        SunflowerCert cert;
        cert.iso.map.assign(map.begin(), map.end());
        cert.petals = cert.iso.map;
        std::sort(cert.petals.begin(), cert.petals.end());
        std::vector<KSet> fam;
        for (auto v : cert.petals) fam.push_back(p.sets[v]);
        auto c = sunflower_centre(fam);
        if (!c) throw InternalConsistency("sunflower search accepted a non-sunflower");
        cert.centre = *c;
        out.push_back(std::move(cert));
        return out.size() < limit;
    });
    return out;
}

Presentation random_presentation(const Structure& base, std::size_t k, std::size_t ground,
                                 std::uint64_t seed) {
    if (k == 0 || k > ground) throw InvalidArgument("random_presentation: need 0 < k <= ground");
    Rng rng(seed);
    Presentation p;
    p.base = base;
    p.k = k;
    std::set<KSet> used;
    std::vector<Ground> pool(ground);
    for (std::size_t i = 0; i < ground; ++i) pool[i] = i;
    std::size_t attempts = 0;
    while (p.sets.size() < base.size()) {
        if (++attempts > 1000 * (base.size() + 1))
            throw InvalidArgument("random_presentation: ground set too small for distinct sets");
        // partial Fisher-Yates for a uniform k-subset
        for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(ground - i)]);
        KSet s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(s.begin(), s.end());
        if (used.insert(s).second) p.sets.push_back(std::move(s));
    }
    return p;
}

WitnessVerdict verify_witness(const Structure& c, const Structure& b, std::size_t k, VerifyMode mode,
                              std::size_t trials, std::uint64_t seed, std::size_t budget) {
    if (!(c.signature() == b.signature())) throw SignatureMismatch();
    WitnessVerdict v;
    auto check = [&](const Presentation& p) {
        ++v.checked;
        if (find_sunflower_copies(p, b, 1).empty()) {
            v.pass = false;
            v.counterexample = p;
            return false;
        }
        return true;
    };
    if (mode == VerifyMode::Exhaustive) {
        enumerate_presentations(c, k, check, budget);
    } else {
        for (std::size_t t = 0; t < trials; ++t)
            if (!check(random_presentation(c, k, k * std::max<std::size_t>(c.size(), 1),
                                           Rng::derive(seed, t))))
                break;
    }
    return v;
}

Presentation encode_colouring(const Structure& m, const Colouring& chi) {
    if (chi.values.size() != m.size()) throw InvalidArgument("colouring is not total on the structure");
    std::map<std::uint64_t, Ground> code;
    for (auto c : chi.values) code.emplace(c, 0);
    Ground next = m.size();
    for (auto& [c, g] : code) g = next++;
    Presentation p;
    p.base = m;
    p.k = 2;
    for (Vertex v = 0; v < m.size(); ++v) p.sets.push_back({v, code.at(chi.values[v])});
    return p;
}

} // namespace sunflower
