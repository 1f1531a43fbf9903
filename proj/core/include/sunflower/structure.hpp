#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sunflower/error.hpp"

namespace sunflower {

using Vertex = std::uint32_t;
using Tuple = std::vector<Vertex>;

inline constexpr Vertex kNoVertex = ~Vertex{0};

struct Relation {
    std::string name;
    unsigned arity = 0;

    bool operator==(const Relation&) const = default;
};

// Ordered list of relation symbols. The empty signature describes pure sets.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Relation> relations);

    std::size_t size() const { return rels_.size(); }
    bool empty() const { return rels_.empty(); }
    const Relation& operator[](std::size_t i) const { return rels_[i]; }
    const std::vector<Relation>& relations() const { return rels_; }
    unsigned arity(std::size_t i) const { return rels_[i].arity; }
    unsigned max_arity() const;

    // Index of the named relation, or size() when absent.
    std::size_t find(const std::string& name) const;
    std::size_t index(const std::string& name) const; // throws when absent

    bool operator==(const Signature&) const = default;

private:
    std::vector<Relation> rels_;
};

// An injective vertex map from a source structure: source vertex i -> map[i].
struct Embedding {
    std::vector<Vertex> map;

    std::size_t size() const { return map.size(); }
    Vertex operator()(Vertex v) const { return map[v]; }
    bool operator==(const Embedding&) const = default;
};

// Mixed-radix key of a tuple over a vertex set of the given size.
std::uint64_t tuple_key(std::span<const Vertex> t, std::uint64_t radix);
// Throws when radix^arity does not fit in 64 bits.
void check_key_range(std::uint64_t radix, unsigned arity);

// Immutable finite relational structure on vertices 0..size-1. Tuples are kept
// sorted and duplicate-free; copies share storage.
class Structure {
public:
    Structure();
    Structure(Signature sig, std::size_t size);
    Structure(Signature sig, std::size_t size, std::vector<std::vector<Tuple>> relations);

    const Signature& signature() const { return d_->sig; }
    std::size_t size() const { return d_->size; }

    std::size_t tuple_count(std::size_t r) const { return d_->flat[r].size() / arity(r); }
    std::size_t total_tuples() const;
    std::span<const Vertex> tuple(std::size_t r, std::size_t i) const {
        const unsigned a = arity(r);
        return {d_->flat[r].data() + i * a, a};
    }
    std::vector<Tuple> tuples(std::size_t r) const;
    std::vector<std::vector<Tuple>> all_tuples() const;

    bool holds(std::size_t r, std::span<const Vertex> t) const;
    bool holds(std::size_t r, std::initializer_list<Vertex> t) const {
        return holds(r, std::span<const Vertex>(t.begin(), t.size()));
    }

    // Gaifman graph access; neighbour lists are sorted ascending.
    std::span<const Vertex> neighbours(Vertex v) const { return d_->nbrs[v]; }
    std::size_t degree(Vertex v) const { return d_->nbrs[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    // Calls f(r, tuple) once for each tuple containing v.
    template <class F>
    void for_each_incident(Vertex v, F&& f) const {
        for (const auto& [r, i] : d_->inc[v])
            f(static_cast<std::size_t>(r), tuple(r, i));
    }

    // Substructure induced on vs; vs[i] becomes vertex i. Entries must be distinct.
    Structure induced(std::span<const Vertex> vs) const;
    // Relabel: vertex v becomes perm[v]; perm must be a permutation.
    Structure relabelled(std::span<const Vertex> perm) const;

    bool operator==(const Structure& o) const;

private:
    unsigned arity(std::size_t r) const { return d_->sig.arity(r); }

    struct Data {
        Signature sig;
        std::size_t size = 0;
        std::vector<std::vector<Vertex>> flat;              // per relation, flattened sorted tuples
        std::vector<std::unordered_set<std::uint64_t>> keys; // per relation
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> inc;
        std::vector<std::vector<Vertex>> nbrs;
    };
    std::shared_ptr<const Data> d_;
};

// Growable structure with the same query surface as Structure, used where
// tuples are added and retracted during a search (one-point extensions).
class MutableStructure {
public:
    MutableStructure(Signature sig, std::size_t capacity);
    MutableStructure(const Structure& s, std::size_t capacity);

    const Signature& signature() const { return sig_; }
    std::size_t size() const { return nbrs_.size(); }
    std::size_t capacity() const { return cap_; }

    Vertex add_vertex();
    // Return false when the tuple was already present / absent.
    bool add_tuple(std::size_t r, std::span<const Vertex> t);
    bool remove_tuple(std::size_t r, std::span<const Vertex> t);

    bool holds(std::size_t r, std::span<const Vertex> t) const;
    std::span<const Vertex> neighbours(Vertex v) const { return nbrs_[v]; }
    std::size_t degree(Vertex v) const { return nbrs_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    template <class F>
    void for_each_incident(Vertex v, F&& f) const {
        for (const auto& [r, t] : inc_[v])
            f(static_cast<std::size_t>(r), std::span<const Vertex>(t));
    }

    Structure freeze() const;

private:
    void link(Vertex u, Vertex v);
    void unlink(Vertex u, Vertex v);

    Signature sig_;
    std::size_t cap_;
    std::vector<std::unordered_set<std::uint64_t>> keys_;
    std::vector<std::vector<std::pair<std::uint32_t, Tuple>>> inc_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::unordered_map<std::uint64_t, std::uint32_t> pair_count_;
};

// Gaifman graph as sorted adjacency lists.
std::vector<std::vector<Vertex>> gaifman(const Structure& s);
bool is_irreducible(const Structure& s);

// Disjoint union; b's vertices are shifted by a.size().
Structure disjoint_union(const Structure& a, const Structure& b);

} // namespace sunflower
