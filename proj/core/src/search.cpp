#include "sunflower/search.hpp"

#include <map>

namespace sunflower {

std::vector<Embedding> find_embeddings(const Structure& a, const Structure& b,
                                       std::size_t limit, const SearchOptions& opt) {
    std::vector<Embedding> out;
    if (limit == 0) {
        if (!(a.signature() == b.signature())) throw SignatureMismatch();
        return out;
    }
    search_embeddings(a, b, opt, [&](std::span<const Vertex> m) {
        out.push_back(Embedding{{m.begin(), m.end()}});
        return out.size() < limit;
    });
    return out;
}

std::optional<Embedding> first_embedding(const Structure& a, const Structure& b,
                                         const SearchOptions& opt) {
    auto e = find_embeddings(a, b, 1, opt);
    if (e.empty()) return std::nullopt;
    return e.front();
}

std::size_t count_embeddings(const Structure& a, const Structure& b, std::size_t limit) {
    std::size_t n = 0;
    search_embeddings(a, b, SearchOptions{}, [&](std::span<const Vertex>) { return ++n < limit; });
    return n;
}

bool embeds(const Structure& a, const Structure& b) { return count_embeddings(a, b, 1) == 1; }

bool is_embedding(const Structure& a, const Structure& b, std::span<const Vertex> map) {
    if (!(a.signature() == b.signature())) return false;
    if (map.size() != a.size()) return false;
    std::vector<char> used(b.size(), 0);
    for (auto v : map) {
        if (v >= b.size() || used[v]) return false;
        used[v] = 1;
    }
    return b.induced(map) == a;
}

namespace {

// Per-vertex description of incident tuples under the current colouring.
std::vector<std::vector<std::int64_t>> vertex_signature(const Structure& s,
                                                        const std::vector<std::uint32_t>& col,
                                                        Vertex v) {
    std::vector<std::vector<std::int64_t>> sig;
    s.for_each_incident(v, [&](std::size_t r, std::span<const Vertex> t) {
        std::vector<std::int64_t> d;
        d.reserve(2 * t.size() + 1);
        d.push_back(static_cast<std::int64_t>(r));
        for (std::size_t j = 0; j < t.size(); ++j)
            d.push_back(t[j] == v ? -1 : static_cast<std::int64_t>(col[t[j]]));
        // equality pattern among entries
        for (std::size_t j = 0; j < t.size(); ++j) {
            std::size_t first = j;
            for (std::size_t i = 0; i < j; ++i)
                if (t[i] == t[j]) {
                    first = i;
                    break;
                }
            d.push_back(static_cast<std::int64_t>(first));
        }
        sig.push_back(std::move(d));
    });
    std::sort(sig.begin(), sig.end());
    return sig;
}

} // namespace

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
joint_refinement(const Structure& a, const Structure& b) {
    std::vector<std::uint32_t> ca(a.size(), 0), cb(b.size(), 0);
    std::size_t classes = (a.size() + b.size()) ? 1 : 0;
    for (;;) {
        using Key = std::pair<std::uint32_t, std::vector<std::vector<std::int64_t>>>;
        std::map<Key, std::uint32_t> ids;
        std::vector<Key> ka, kb;
        for (Vertex v = 0; v < a.size(); ++v) ka.emplace_back(ca[v], vertex_signature(a, ca, v));
        for (Vertex v = 0; v < b.size(); ++v) kb.emplace_back(cb[v], vertex_signature(b, cb, v));
        for (const auto& k : ka) ids.emplace(k, 0);
        for (const auto& k : kb) ids.emplace(k, 0);
        std::uint32_t next = 0;
        for (auto& [k, id] : ids) id = next++;
        for (Vertex v = 0; v < a.size(); ++v) ca[v] = ids[ka[v]];
        for (Vertex v = 0; v < b.size(); ++v) cb[v] = ids[kb[v]];
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {std::move(ca), std::move(cb)};
}

std::optional<Embedding> are_isomorphic(const Structure& a, const Structure& b) {
    if (!(a.signature() == b.signature())) throw SignatureMismatch();
    if (a.size() != b.size()) return std::nullopt;
    for (std::size_t r = 0; r < a.signature().size(); ++r)
        if (a.tuple_count(r) != b.tuple_count(r)) return std::nullopt;
    if (a == b) {
        Embedding id;
        for (Vertex v = 0; v < a.size(); ++v) id.map.push_back(v);
        return id;
    }
    auto [ca, cb] = joint_refinement(a, b);
    auto hist = [](std::vector<std::uint32_t> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    if (hist(ca) != hist(cb)) return std::nullopt;
    SearchOptions opt;
    opt.allow = [&ca = ca, &cb = cb](Vertex x, Vertex y) { return ca[x] == cb[y]; };
    return first_embedding(a, b, opt);
}

} // namespace sunflower
