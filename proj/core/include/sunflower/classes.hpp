#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sunflower/qftype.hpp"
#include "sunflower/search.hpp"
#include "sunflower/structure.hpp"

namespace sunflower {

// Class of finite structures omitting (as induced substructures) a finite set
// of irreducible structures; hence always closed under free amalgamation.
class ClassSpec {
public:
    ClassSpec() = default;
    ClassSpec(Signature sig, std::vector<Structure> forbidden, std::string name = {});

    const Signature& signature() const { return sig_; }
    const std::vector<Structure>& forbidden() const { return forbidden_; }
    const std::string& name() const { return name_; }

private:
    Signature sig_;
    std::vector<Structure> forbidden_;
    std::string name_;
};

bool satisfies_class(const Structure& s, const ClassSpec& k);

// True iff some forbidden structure embeds with every vertex of `through` in
// its image. For a structure that was in the class before tuples touching all
// of `through` changed, this is exactly membership failure.
template <class Target>
bool violated_through(const Target& s, const ClassSpec& k, std::span<const Vertex> through) {
    const std::size_t t = through.size();
    for (const auto& f : k.forbidden()) {
        const std::size_t m = f.size();
        if (m < t) continue;
        // Every injective placement of `through` among the pattern's vertices.
        std::vector<Vertex> slot(t, 0);
        std::vector<char> used(m, 0);
        bool found = false;
        auto place = [&](auto&& self, std::size_t i) -> void {
            if (found) return;
            if (i == t) {
                SearchOptions opt;
                for (std::size_t j = 0; j < t; ++j) opt.pins.emplace_back(slot[j], through[j]);
                search_embeddings(f, s, opt, [&](std::span<const Vertex>) {
                    found = true;
                    return false;
                });
                return;
            }
            for (Vertex x = 0; x < m && !found; ++x) {
                if (used[x]) continue;
                used[x] = 1;
                slot[i] = x;
                self(self, i + 1);
                used[x] = 0;
            }
        };
        place(place, 0);
        if (found) return true;
    }
    return false;
}

// Every one-point extension type over `base` (parameters 0..m-1) whose
// realisation stays in the class, in deterministic order. `base` must be in k.
std::vector<QfType> admissible_types(const Structure& base, const ClassSpec& k,
                                     std::size_t budget = 1u << 22);

// All 1-vertex structures in the class.
std::vector<Structure> one_point_structures(const ClassSpec& k);
// Exactly one 1-vertex structure (up to isomorphism) lies in the class.
bool is_transitive(const ClassSpec& k);

// Local shape constraints per relation, compiled into irreducible forbidden
// structures on at most max-arity vertices.
enum class Shape { Free, Symmetric, Oriented };
struct ShapeRules {
    std::vector<Shape> shape;                               // per relation
    std::vector<std::pair<std::size_t, std::size_t>> disjoint; // relation pairs sharing no support
};
std::vector<Structure> shape_forbidden(const Signature& sig, const ShapeRules& rules);

// Structure on n vertices where relation r holds on every injective tuple.
Structure complete_structure(const Signature& sig, std::size_t r, std::size_t n);
// Keep one representative per isomorphism class (first occurrence wins).
std::vector<Structure> dedupe_isomorphic(const std::vector<Structure>& xs);

namespace classes {

ClassSpec pure();
ClassSpec graphs();
ClassSpec knfree(std::size_t n);
ClassSpec oriented();
ClassSpec hypergraphs(unsigned r);
ClassSpec kn_hyper_free(std::size_t n, unsigned r);
ClassSpec f_free_3hyper();
ClassSpec rb();
ClassSpec two_types();

// The 5-vertex 3-hypergraph: complete on {0,1,2,3} plus {0,1,4} and {2,3,4}.
Structure f_hypergraph();

// Names: pure, graphs, knfree(n), oriented, hypergraphs(r), kfree(n,r),
// f-free-3hyper, rb, two-types.
ClassSpec by_name(const std::string& name);
std::vector<std::string> names();

} // namespace classes

} // namespace sunflower
