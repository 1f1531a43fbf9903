#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunflower/classes.hpp"
#include "sunflower/qftype.hpp"
#include "sunflower/structure.hpp"

namespace sunflower {

// Named generator with its optional integer parameter (knfree(n)).
struct GeneratorId {
    std::string name;
    std::size_t param = 0;

    std::string str() const;
};

GeneratorId parse_generator(const std::string& text);
std::vector<std::string> generator_names();

struct Generated {
    Structure structure;
    nlohmann::json meta; // always has "id", "size", "seed"
};

// Deterministic in (id, size, seed). For double-equivalence the size is
// rounded to a cube; meta records the effective size and per-generator extras
// (class labels, coordinates, angles, rational labels).
Generated gen_named(const GeneratorId& id, std::size_t size, std::uint64_t seed);

// Builds a structure in k by one-point extensions. For each new vertex the
// tuple slots are grouped by their support (empty set first, then singletons,
// pairs, ...; random order within a level) and each group is set uniformly at
// random among the choices that keep the structure in k.
Structure gen_generic(const ClassSpec& k, std::size_t size, std::uint64_t seed);

struct MissingType {
    std::vector<Vertex> base;
    QfType type; // params == base
};

// All (A, p) with A an increasing vertex sequence, |A| <= base_bound, p an
// admissible one-point type over A in k that no vertex of s realises.
std::vector<MissingType> extension_defects(const Structure& s, const ClassSpec& k,
                                           std::size_t base_bound);

// Validators for the defining classes of generators that are not free
// amalgamation classes.
bool is_tournament(const Structure& s, std::size_t r = 0);
bool is_strict_partial_order(const Structure& s, std::size_t r);
bool is_strict_linear_order(const Structure& s, std::size_t r);
bool is_equivalence_graph(const Structure& s, std::size_t r); // irreflexive, symmetric, transitive
// True iff the sub-tournament on vs contains a directed 3-cycle.
bool has_directed_triangle(const Structure& s, std::span<const Vertex> vs, std::size_t r = 0);

// Check that gen_named's output lies in its defining class.
bool in_defining_class(const GeneratorId& id, const Structure& s);

} // namespace sunflower
