#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunflower/classes.hpp"
#include "sunflower/ksets.hpp"
#include "sunflower/partitionlab.hpp"
#include "sunflower/ramsey.hpp"
#include "sunflower/structure.hpp"

namespace sunflower {

struct Pasted {
    Structure structure;
    std::vector<Vertex> part_of; // per vertex, carried over from the hypergraph
};

// Replaces every edge of H by a copy of B: the sorted edge vertices carry B's
// vertices in index order. Requires girth >= 4 and B vertex-transitive at the
// level of 1-types; the result is re-checked against K.
Pasted paste(const PartitionedHypergraph& h, const Structure& b, const ClassSpec& k);

struct ChainLevel {
    Structure structure;
    std::vector<Vertex> part_of; // empty on level 1; else a vertex of the previous level
    std::uint64_t s = 1;         // number of colourings the level was built for
    nlohmann::json hypergraph = nlohmann::json::object(); // generation meta
};

// levels[0] is C_1 = B, levels[j-1] is C_j.
struct WitnessChain {
    Structure target;
    ClassSpec cls;
    std::uint64_t seed = 0;
    std::vector<ChainLevel> levels;

    std::size_t k() const { return levels.size(); }
    const ChainLevel& level(std::size_t j) const; // 1-based
    const Structure& top() const { return levels.back().structure; }
};

struct ChainOptions {
    std::optional<std::uint64_t> c_override; // part size on every level >= 2
    std::size_t max_attempts = 32;
    std::uint64_t max_colourings = 1u << 16; // refuse levels needing more
};

WitnessChain build_witness_chain(const ClassSpec& k, const Structure& b, std::size_t levels,
                                 std::uint64_t seed, const ChainOptions& opt = {});

// Checks the chain invariants: every level in the class, parts indexed by the
// previous level, s_j = j^|C_{j-1}|, B = C_1.
void validate_chain(const WitnessChain& chain);

enum class ExtractionCase { Base, Mono, Transversal };
const char* to_string(ExtractionCase c);

struct TraceStep {
    std::size_t level = 0; // j: the sets at this step are j-sets
    ExtractionCase kase = ExtractionCase::Base;
    std::optional<Vertex> part;   // Mono: part holding the copy
    std::vector<std::size_t> f;   // Mono: chosen coordinate function
    std::optional<Ground> lambda; // Mono: the shared element
    std::vector<Vertex> copy;     // copy[x] = image of C_{j-1} vertex x (of B on level 1)
};

struct ExtractionTrace {
    std::vector<Vertex> transport; // top-level chain vertex -> presentation vertex
    std::vector<TraceStep> steps;  // top level first
};

struct ExtractionResult {
    std::optional<SunflowerCert> cert; // in the presentation's labels
    ExtractionTrace trace;
    std::optional<Presentation> counterexample; // set when extraction failed
    bool ok() const { return cert.has_value(); }
};

// P must present the chain's level-`level` structure (up to isomorphism) on
// level-sets. Failure is an outcome, not an exception.
ExtractionResult extract_sunflower(const WitnessChain& chain, const Presentation& p, std::size_t level);

bool verify_certificate(const SunflowerCert& cert, const Structure& b, const Presentation& p);

// Re-runs the checks recorded in the trace and the final certificate.
bool verify_trace(const WitnessChain& chain, const Presentation& p, std::size_t level,
                  const ExtractionTrace& trace, const SunflowerCert& cert);

// chi_f(v) = f(part of v)-th element of v's sorted set.
Colouring coordinate_colouring(const Presentation& p, std::span<const Vertex> part_of,
                               std::span<const std::size_t> f);

// Whether `copy` is heterochromatic under every chi_f, f in j^parts, by direct
// evaluation (exponential; throws BudgetExceeded past `budget` functions).
bool heterochromatic_under_all(const Presentation& p, std::span<const Vertex> part_of, std::size_t parts,
                               std::span<const Vertex> copy, std::size_t budget = 1u << 20);

} // namespace sunflower
