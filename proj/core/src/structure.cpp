#include "sunflower/structure.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace sunflower {

Signature::Signature(std::vector<Relation> relations) : rels_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& r : rels_) {
        if (r.name.empty())
            throw InvalidArgument("relation name must be non-empty");
        if (r.arity < 1)
            throw InvalidArgument("relation '" + r.name + "' has arity 0");
        if (!seen.insert(r.name).second)
            throw InvalidArgument("duplicate relation name '" + r.name + "'");
    }
}

unsigned Signature::max_arity() const {
    unsigned m = 0;
    for (const auto& r : rels_) m = std::max(m, r.arity);
    return m;
}

std::size_t Signature::find(const std::string& name) const {
    for (std::size_t i = 0; i < rels_.size(); ++i)
        if (rels_[i].name == name) return i;
    return rels_.size();
}

std::size_t Signature::index(const std::string& name) const {
    const auto i = find(name);
    if (i == rels_.size()) throw InvalidArgument("unknown relation '" + name + "'");
    return i;
}

std::uint64_t tuple_key(std::span<const Vertex> t, std::uint64_t radix) {
    std::uint64_t k = 0;
    for (auto v : t) k = k * radix + v;
    return k;
}

void check_key_range(std::uint64_t radix, unsigned arity) {
    if (radix < 2) return;
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < arity; ++i) {
        if (acc > std::numeric_limits<std::uint64_t>::max() / radix)
            throw InvalidArgument("structure too large for tuple keys");
        acc *= radix;
    }
}

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
}

} // namespace

Structure::Structure() : Structure(Signature{}, 0) {}

Structure::Structure(Signature sig, std::size_t size)
    : Structure(std::move(sig), size, {}) {}

Structure::Structure(Signature sig, std::size_t size, std::vector<std::vector<Tuple>> relations) {
    if (size >= kNoVertex) throw InvalidArgument("structure too large");
    auto d = std::make_shared<Data>();
    const std::size_t nr = sig.size();
    if (relations.empty()) relations.resize(nr);
    if (relations.size() != nr)
        throw InvalidArgument("relation count does not match signature");
    d->size = size;
    d->flat.resize(nr);
    d->keys.resize(nr);
    d->inc.resize(size);
    d->nbrs.resize(size);
    const std::uint64_t radix = std::max<std::uint64_t>(size, 1);
    for (std::size_t r = 0; r < nr; ++r) {
        const unsigned a = sig.arity(r);
        auto& ts = relations[r];
        for (const auto& t : ts) {
            if (t.size() != a)
                throw InvalidArgument("tuple length does not match arity of '" + sig[r].name + "'");
            for (auto v : t)
                if (v >= size)
                    throw InvalidArgument("tuple entry out of range in '" + sig[r].name + "'");
        }
        if (!ts.empty()) check_key_range(radix, a);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        auto& flat = d->flat[r];
        flat.reserve(ts.size() * a);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const auto& t = ts[i];
            flat.insert(flat.end(), t.begin(), t.end());
            d->keys[r].insert(tuple_key(t, radix));
            Vertex last = kNoVertex;
            Tuple sorted = t;
            std::sort(sorted.begin(), sorted.end());
            for (auto v : sorted) {
                if (v == last) continue;
                last = v;
                d->inc[v].emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(i));
            }
            for (std::size_t x = 0; x < sorted.size(); ++x)
                for (std::size_t y = x + 1; y < sorted.size(); ++y)
                    if (sorted[x] != sorted[y]) {
                        d->nbrs[sorted[x]].push_back(sorted[y]);
                        d->nbrs[sorted[y]].push_back(sorted[x]);
                    }
        }
    }
    for (auto& nb : d->nbrs) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    d->sig = std::move(sig);
    d_ = std::move(d);
}

std::size_t Structure::total_tuples() const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < signature().size(); ++r) n += tuple_count(r);
    return n;
}

std::vector<Tuple> Structure::tuples(std::size_t r) const {
    std::vector<Tuple> out;
    out.reserve(tuple_count(r));
    for (std::size_t i = 0; i < tuple_count(r); ++i) {
        auto t = tuple(r, i);
        out.emplace_back(t.begin(), t.end());
    }
    return out;
}

std::vector<std::vector<Tuple>> Structure::all_tuples() const {
    std::vector<std::vector<Tuple>> out;
    for (std::size_t r = 0; r < signature().size(); ++r) out.push_back(tuples(r));
    return out;
}

bool Structure::holds(std::size_t r, std::span<const Vertex> t) const {
    if (d_->keys[r].empty()) return false;
    return d_->keys[r].count(tuple_key(t, std::max<std::uint64_t>(d_->size, 1))) != 0;
}

bool Structure::adjacent(Vertex u, Vertex v) const {
    const auto& a = d_->nbrs[u];
    const auto& b = d_->nbrs[v];
    if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
    return std::binary_search(b.begin(), b.end(), u);
}

Structure Structure::induced(std::span<const Vertex> vs) const {
    std::vector<Vertex> pos(size(), kNoVertex);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= size()) throw InvalidArgument("induced: vertex out of range");
        if (pos[vs[i]] != kNoVertex) throw InvalidArgument("induced: repeated vertex");
        pos[vs[i]] = static_cast<Vertex>(i);
    }
    std::vector<std::vector<Tuple>> rels(signature().size());
    // Each tuple is collected once, from its smallest original vertex.
    for (auto v : vs) {
        for (const auto& [r, i] : d_->inc[v]) {
            auto t = tuple(r, i);
            Tuple m(t.size());
            bool take = true;
            for (std::size_t j = 0; j < t.size() && take; ++j) {
                m[j] = pos[t[j]];
                take = m[j] != kNoVertex && t[j] >= v;
            }
            if (take) rels[r].push_back(std::move(m));
        }
    }
    return Structure(signature(), vs.size(), std::move(rels));
}

Structure Structure::relabelled(std::span<const Vertex> perm) const {
    if (perm.size() != size()) throw InvalidArgument("relabel: permutation has wrong length");
    std::vector<char> seen(size(), 0);
    for (auto p : perm) {
        if (p >= size() || seen[p]) throw InvalidArgument("relabel: not a permutation");
        seen[p] = 1;
    }
    std::vector<std::vector<Tuple>> rels(signature().size());
    for (std::size_t r = 0; r < signature().size(); ++r)
        for (std::size_t i = 0; i < tuple_count(r); ++i) {
            auto t = tuple(r, i);
            Tuple m;
            for (auto v : t) m.push_back(perm[v]);
            rels[r].push_back(std::move(m));
        }
    return Structure(signature(), size(), std::move(rels));
}

bool Structure::operator==(const Structure& o) const {
    return d_ == o.d_ || (signature() == o.signature() && size() == o.size() && d_->flat == o.d_->flat);
}

// ---------------------------------------------------------------------------

MutableStructure::MutableStructure(Signature sig, std::size_t capacity)
    : sig_(std::move(sig)), cap_(std::max<std::size_t>(capacity, 1)), keys_(sig_.size()) {
    for (std::size_t r = 0; r < sig_.size(); ++r) check_key_range(cap_, sig_.arity(r));
}

MutableStructure::MutableStructure(const Structure& s, std::size_t capacity)
    : MutableStructure(s.signature(), std::max(capacity, s.size())) {
    for (std::size_t v = 0; v < s.size(); ++v) add_vertex();
    for (std::size_t r = 0; r < sig_.size(); ++r)
        for (std::size_t i = 0; i < s.tuple_count(r); ++i) add_tuple(r, s.tuple(r, i));
}

Vertex MutableStructure::add_vertex() {
    if (nbrs_.size() >= cap_) throw InvalidArgument("mutable structure capacity exhausted");
    nbrs_.emplace_back();
    inc_.emplace_back();
    return static_cast<Vertex>(nbrs_.size() - 1);
}

void MutableStructure::link(Vertex u, Vertex v) {
    if (pair_count_[pair_key(u, v)]++ == 0) {
        auto& a = nbrs_[u];
        a.insert(std::lower_bound(a.begin(), a.end(), v), v);
        auto& b = nbrs_[v];
        b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    }
}

void MutableStructure::unlink(Vertex u, Vertex v) {
    auto it = pair_count_.find(pair_key(u, v));
    if (--it->second == 0) {
        pair_count_.erase(it);
        auto& a = nbrs_[u];
        a.erase(std::lower_bound(a.begin(), a.end(), v));
        auto& b = nbrs_[v];
        b.erase(std::lower_bound(b.begin(), b.end(), u));
    }
}

bool MutableStructure::add_tuple(std::size_t r, std::span<const Vertex> t) {
    if (t.size() != sig_.arity(r)) throw InvalidArgument("tuple length does not match arity");
    for (auto v : t)
        if (v >= size()) throw InvalidArgument("tuple entry out of range");
    if (!keys_[r].insert(tuple_key(t, cap_)).second) return false;
    Tuple sorted(t.begin(), t.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto v : sorted) inc_[v].emplace_back(static_cast<std::uint32_t>(r), Tuple(t.begin(), t.end()));
    for (std::size_t x = 0; x < sorted.size(); ++x)
        for (std::size_t y = x + 1; y < sorted.size(); ++y) link(sorted[x], sorted[y]);
    return true;
}

bool MutableStructure::remove_tuple(std::size_t r, std::span<const Vertex> t) {
    if (t.size() != sig_.arity(r)) throw InvalidArgument("tuple length does not match arity");
    for (auto v : t)
        if (v >= size()) return false;
    if (keys_[r].erase(tuple_key(t, cap_)) == 0) return false;
    Tuple sorted(t.begin(), t.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto v : sorted) {
        auto& lst = inc_[v];
        for (std::size_t i = 0; i < lst.size(); ++i)
            if (lst[i].first == r && std::equal(lst[i].second.begin(), lst[i].second.end(), t.begin(), t.end())) {
                lst.erase(lst.begin() + static_cast<std::ptrdiff_t>(i));
                break;
            }
    }
    for (std::size_t x = 0; x < sorted.size(); ++x)
        for (std::size_t y = x + 1; y < sorted.size(); ++y) unlink(sorted[x], sorted[y]);
    return true;
}

bool MutableStructure::holds(std::size_t r, std::span<const Vertex> t) const {
    if (keys_[r].empty()) return false;
    return keys_[r].count(tuple_key(t, cap_)) != 0;
}

bool MutableStructure::adjacent(Vertex u, Vertex v) const {
    return pair_count_.count(pair_key(u, v)) != 0;
}

Structure MutableStructure::freeze() const {
    std::vector<std::vector<Tuple>> rels(sig_.size());
    for (Vertex v = 0; v < size(); ++v)
        for (const auto& [r, t] : inc_[v])
            if (*std::min_element(t.begin(), t.end()) == v) rels[r].push_back(t);
    return Structure(sig_, size(), std::move(rels));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Vertex>> gaifman(const Structure& s) {
    std::vector<std::vector<Vertex>> g(s.size());
    for (Vertex v = 0; v < s.size(); ++v) {
        auto nb = s.neighbours(v);
        g[v].assign(nb.begin(), nb.end());
    }
    return g;
}

bool is_irreducible(const Structure& s) {
    for (Vertex v = 0; v < s.size(); ++v)
        if (s.degree(v) + 1 != s.size()) return false;
    return true;
}

Structure disjoint_union(const Structure& a, const Structure& b) {
    if (!(a.signature() == b.signature())) throw SignatureMismatch();
    auto rels = a.all_tuples();
    const auto shift = static_cast<Vertex>(a.size());
    for (std::size_t r = 0; r < b.signature().size(); ++r)
        for (auto t : b.tuples(r)) {
            for (auto& v : t) v += shift;
            rels[r].push_back(std::move(t));
        }
    return Structure(a.signature(), a.size() + b.size(), std::move(rels));
}

} // namespace sunflower
