#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunflower/partitionlab.hpp"
#include "sunflower/rational.hpp"
#include "sunflower/structure.hpp"

namespace sunflower {

// ---- suitable n-sets --------------------------------------------------------

struct SuitableParams {
    unsigned n = 0;
    Rational a1;
    Rational epsilon;
    Rational a0;
    std::uint64_t c_min = 0;
};

// epsilon: largest 1/2^t with (1 - n eps)^n > 1 - a1; a0 = eps^n / (2 n!), half
// the leading coefficient of binom(x eps, n); c_min: least C with
// binom(c eps, n) - a0 c^n > 0 for every integer c >= C (exact).
SuitableParams suitable_params(unsigned n, const Rational& a1);

// Both defining inequalities, re-evaluated exactly; the second is checked on
// [c_min, c_min + span] and beyond via a root bound.
bool check_suitable_params(const SuitableParams& p, std::uint64_t span = 64);

// binom(c eps, n) - a0 c^n as a polynomial in c, coefficients by degree.
std::vector<Rational> suitable_polynomial(const SuitableParams& p);

struct SuitableCounts {
    // mono[r][i]: n-subsets of part i monochromatic in colouring r
    std::vector<std::vector<BigInt>> mono;
    // hetero[r]: transversals heterochromatic in colouring r
    std::vector<BigInt> hetero;
    // n-sets inside a part monochromatic in every colouring, or transversals
    // heterochromatic in every colouring
    BigInt jointly_suitable;
};

enum class CountMethod { Enumerate, Tally };

// Parts are disjoint vertex lists (n = number of parts); each colouring must
// cover every listed vertex (indexed by vertex id).
SuitableCounts count_suitable(const std::vector<std::vector<Vertex>>& parts,
                              const std::vector<Colouring>& colourings,
                              CountMethod method = CountMethod::Tally);

// The dichotomy for one colouring over n equal parts of size c: some part
// has > a0 c^n monochromatic n-sets, or > (1 - a1) c^n transversals are
// heterochromatic.
bool suitable_dichotomy(const SuitableParams& p, const std::vector<std::vector<Vertex>>& parts,
                        const Colouring& chi);

// ---- probabilistic construction ----------------------------------------------

struct GenParams {
    unsigned n = 2;
    unsigned s = 1;
    unsigned g = 2;
    Rational epsilon;
    std::uint64_t c = 1;
    Rational p; // lower rational approximation of c^(1 - n + eps), error < 2^-48 relative
};

// Largest 1/2^t strictly below 1/g.
Rational default_epsilon(unsigned g);
// c^(1-n+eps) rounded down on a 2^-48 grid before the division by c^(n-1).
Rational edge_probability(std::uint64_t c, unsigned n, const Rational& eps);
GenParams make_gen_params(unsigned n, unsigned s, unsigned g, std::uint64_t c);

struct FailureBound {
    long double log_value = 0; // -a c^(1+eps) + (cns + cn + 1) log c + cns log n
    long double value = 0;     // exp(log_value), may be +inf
    bool vacuous = false;      // log_value >= 0
};

FailureBound failure_bound(const GenParams& params, const Rational& a);

// ---- partitioned hypergraphs -----------------------------------------------

struct PartitionedHypergraph {
    unsigned n = 0;
    std::vector<std::vector<Vertex>> parts;
    std::vector<std::vector<Vertex>> edges; // each sorted, n vertices
    nlohmann::json meta = nlohmann::json::object();

    std::size_t vertex_count() const;
    void validate() const; // uniformity, disjoint equal parts, edges in range, no repeats
    // part_of[v]
    std::vector<std::size_t> part_of() const;
    bool is_transversal(const std::vector<Vertex>& e) const;
};

inline constexpr std::size_t kInfiniteGirth = static_cast<std::size_t>(-1);

// Berge girth: least m >= 2 admitting a cycle of m distinct vertices and m
// distinct edges; kInfiniteGirth when acyclic.
std::size_t hypergraph_girth(const PartitionedHypergraph& h);
// Edge indices of one shortest Berge cycle, empty when acyclic.
std::vector<std::size_t> shortest_cycle_edges(const PartitionedHypergraph& h);

// Potential m-cycles v_0 e_0 ... v_{m-1} e_{m-1}: distinct vertices, arbitrary
// n-sets e_i over the vertex set with {v_i, v_{i+1}} in e_i (closed form).
BigInt count_potential_cycles(std::size_t vertices, unsigned n, unsigned m);

struct WitnessGenOptions {
    std::optional<std::uint64_t> c_override;
    Rational threshold{1, 2};        // failure_bound target for the reported theoretical c
    std::size_t edge_floor = 1;      // fewer edges after removal => retry
    std::size_t max_attempts = 32;   // regeneration attempts with derived seeds
    bool require_few_removals = false; // removed < c, else retry; meta records few_removals either way
};

// Parts V_i = {i c, ..., (i+1) c - 1}. meta: epsilon, c, p, removed, seed,
// attempts, failure bound at c and the least power of two meeting the threshold.
PartitionedHypergraph gen_witness_hypergraph(unsigned n, unsigned s, unsigned g, std::uint64_t seed,
                                             const WitnessGenOptions& opt = {});

enum class AdversaryMode { Exhaustive, Random };

struct AdversaryResult {
    std::optional<std::vector<Colouring>> counterexample; // s colourings (restricted growth form)
    std::size_t nodes = 0;                               // search nodes / trials used
};

// Looks for s colourings such that no edge inside a part is monochromatic in
// any colouring and every transversal edge is not heterochromatic in at least
// one colouring. Colourings are searched up to kernel (restricted growth).
AdversaryResult vcvrp_adversary(const PartitionedHypergraph& h, unsigned s, AdversaryMode mode,
                                std::size_t trials = 0, std::uint64_t seed = 0,
                                std::size_t budget = 2'000'000'000);

// True iff the s colourings form a counterexample as above.
bool is_vcvrp_counterexample(const PartitionedHypergraph& h, const std::vector<Colouring>& cs);

} // namespace sunflower
