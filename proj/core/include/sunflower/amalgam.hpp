#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sunflower/classes.hpp"
#include "sunflower/structure.hpp"

namespace sunflower {

struct Amalgam {
    Structure result;
    Embedding g0; // B0 -> result
    Embedding g1; // B1 -> result
};

// Free amalgam of f0 : A -> B0 and f1 : A -> B1. B0 keeps its labels; vertices
// of B1 outside f1(A) are appended in increasing order.
Amalgam free_amalgam(const Structure& a, const Structure& b0, const Embedding& f0,
                     const Structure& b1, const Embedding& f1);

// A 3-disjoint family over the empty set: three sides and their pairwise
// amalgams. pair[0] amalgamates sides (0,1), pair[1] (0,2), pair[2] (1,2); in
// each, the first side occupies the low vertex labels.
struct DapFamily {
    Structure side[3];
    Structure pair[3];
};

struct DapReport {
    bool pass = true;
    std::optional<DapFamily> counterexample;
    std::size_t families_checked = 0;
};

// Enumerates 3-disjoint families over the empty set with sides of size
// 1..size_bound (sides up to isomorphism, pairwise amalgams exhaustively) and
// searches each for a 3-disjoint amalgam by completing the union of the three
// pairwise amalgams with tuples that meet all three sides.
DapReport check_3dap_over_empty(const ClassSpec& k, std::size_t size_bound,
                                std::size_t budget = 50'000'000);

// All structures in k on exactly n vertices, one per isomorphism class.
std::vector<Structure> class_members(const ClassSpec& k, std::size_t n);

// Every structure on a.size()+b.size() vertices in k restricting to a on the
// low labels and to b on the high labels.
std::vector<Structure> strong_amalgams_over_empty(const Structure& a, const Structure& b,
                                                  const ClassSpec& k);

} // namespace sunflower
