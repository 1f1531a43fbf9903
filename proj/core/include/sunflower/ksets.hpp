#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sunflower/partitionlab.hpp"
#include "sunflower/search.hpp"
#include "sunflower/structure.hpp"

namespace sunflower {

using Ground = std::uint64_t;
using KSet = std::vector<Ground>; // sorted ascending

// A structure whose vertex v is the k-set sets[v].
struct Presentation {
    Structure base;
    std::size_t k = 0;
    std::vector<KSet> sets;

    // Throws unless every set has exactly k distinct elements, the sets are
    // distinct, and there is one per base vertex. Sorts each set.
    void normalise();
    void validate() const;
};

Ground intersect_size(const KSet& a, const KSet& b);
KSet intersection(const KSet& a, const KSet& b);

// Common pairwise intersection of distinct sets, or none. A single set is its
// own centre and the empty family has empty centre (both degenerate).
std::optional<KSet> sunflower_centre(const std::vector<KSet>& sets);
inline bool degenerate_family(std::size_t count) { return count < 2; }

struct SunflowerCert {
    Embedding iso;             // B vertex i -> presentation vertex iso(i)
    std::vector<Vertex> petals; // image of iso, ascending
    KSet centre;
};

// Induced copies of B whose sets form a sunflower, in embedding search order.
std::vector<SunflowerCert> find_sunflower_copies(const Presentation& p, const Structure& b,
                                                 std::size_t limit = kUnlimited);

// Presentations of C on k-sets up to renaming of ground elements, each exactly
// once and in canonical form (see canonical_presentation). The visitor returns
// false to stop. Throws BudgetExceeded past `budget` presentations.
void enumerate_presentations(const Structure& c, std::size_t k,
                             const std::function<bool(const Presentation&)>& visit,
                             std::size_t budget = 50'000'000);
std::size_t count_presentations(const Structure& c, std::size_t k,
                                std::size_t budget = 50'000'000);

// Ground elements relabelled 0,1,... so that they appear in increasing order
// when vertices are read in index order, choosing the lexicographically least
// such labelling. Two presentations of the same base differ by a ground
// bijection iff their canonical forms are equal.
Presentation canonical_presentation(const Presentation& p);

enum class VerifyMode { Exhaustive, Random };

struct WitnessVerdict {
    bool pass = true;
    std::optional<Presentation> counterexample;
    std::size_t checked = 0;
};

// Exhaustive mode walks enumerate_presentations; random mode samples `trials`
// presentations over a ground set of size k*|C|.
WitnessVerdict verify_witness(const Structure& c, const Structure& b, std::size_t k, VerifyMode mode,
                              std::size_t trials = 0, std::uint64_t seed = 0,
                              std::size_t budget = 50'000'000);

// Uniformly random k-subsets of {0..ground-1}, distinct across vertices.
Presentation random_presentation(const Structure& base, std::size_t k, std::size_t ground,
                                 std::uint64_t seed);

// v -> {v, n + rank of chi(v) among the colours used}; k = 2.
Presentation encode_colouring(const Structure& m, const Colouring& chi);

} // namespace sunflower
