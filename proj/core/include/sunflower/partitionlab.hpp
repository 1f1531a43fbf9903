#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sunflower/classes.hpp"
#include "sunflower/generators.hpp"
#include "sunflower/qftype.hpp"
#include "sunflower/rational.hpp"
#include "sunflower/search.hpp"
#include "sunflower/structure.hpp"

namespace sunflower {

struct Partition {
    std::vector<std::vector<Vertex>> blocks;

    // Throws unless the blocks are disjoint and cover 0..n-1.
    void validate(std::size_t n) const;
    // block_of[v] = index of the block containing v.
    std::vector<std::size_t> block_of(std::size_t n) const;
};

struct Colouring {
    std::vector<std::uint64_t> values;
};

// Schemes: neighbourhood, red-neighbourhood, out-neighbourhood,
// class-minus-point (anchor required); rb-CDE, coordinate-cut, rationals-cut.
// rationals-cut reads the rational label of each vertex from `labels`.
Partition named_partition(const Structure& s, const std::string& scheme,
                          std::optional<Vertex> anchor,
                          const std::vector<Rational>* labels = nullptr);
std::vector<std::string> partition_schemes();

// Vertex orders of the rb-CDE blocks: a vertex with an earlier neighbour goes to
// C or D by the colour of its edge to the earliest such neighbour, otherwise E.
std::vector<int> rb_cde_labels(const Structure& s);

struct DefectWitness {
    std::vector<Vertex> base; // vertices of S
    QfType type;              // params == base
    std::size_t open_set_size = 0;  // realisations in S
    bool open_set_avoids_block = false;
};

struct BlockReport {
    std::vector<Vertex> vertices;
    std::vector<bool> probe_embeds; // one per probe
    std::optional<std::size_t> defect_count; // absent when no class was given
    std::vector<DefectWitness> defects;      // first `max_listed` defects
};

struct PartitionReport {
    std::vector<BlockReport> blocks;
    std::size_t base_bound = 0;
};

// k may be null (no defect scan). Listed defects are re-verified against S.
PartitionReport partition_report(const Structure& s, const Partition& p, const ClassSpec* k,
                                 const std::vector<Structure>& probes, std::size_t base_bound,
                                 std::size_t max_listed = 16);

struct ColourCopyReport {
    std::size_t mono = 0;   // monochromatic embeddings of B
    std::size_t hetero = 0; // injectively coloured embeddings of B
    std::optional<Embedding> first_mono;
    std::optional<Embedding> first_hetero;
    bool truncated = false; // stopped at the limit
};

// Counts induced embeddings of B (not copies up to automorphism), pruning
// partial maps that can be neither mono- nor heterochromatic.
ColourCopyReport colour_copy_search(const Structure& s, const Colouring& chi, const Structure& b,
                                    std::size_t limit = kUnlimited);

// { v not in A : qf_type(S, v, A) has the atoms of p }, ascending.
std::vector<Vertex> basic_open_set(const Structure& s, const std::vector<Vertex>& a,
                                   const QfType& p);

struct MinEmbeddingColouring {
    Colouring colouring;
    std::size_t embeddings = 0;       // number of f_i; also the sentinel colour
    std::vector<Vertex> sentinel;      // vertices realising p over no f_i(A)
};

// chi(v) = least i with qf_type(S, v, f_i(A)) = f_i . p, f_i in find_embeddings order.
MinEmbeddingColouring min_embedding_colouring(const Structure& s, const Structure& a,
                                              const QfType& p);

} // namespace sunflower
