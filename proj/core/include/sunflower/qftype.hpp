#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sunflower/structure.hpp"

namespace sunflower {

// Position patterns for one relation over m parameters: each entry is -1 (the
// new point) or a parameter index, with at least one -1; lexicographic order.
const std::vector<std::vector<int>>& type_patterns(unsigned arity, std::size_t m);

// Quantifier-free 1-type of a new point over an ordered parameter sequence.
// atoms[r][j] is the truth value of relation r on type_patterns(arity_r, m)[j].
// Atoms refer to parameter positions, so transporting along an embedding only
// rewrites `params`.
struct QfType {
    std::vector<Vertex> params;
    std::vector<std::vector<std::uint8_t>> atoms;

    bool same_atoms(const QfType& o) const { return atoms == o.atoms; }
    bool operator==(const QfType&) const = default;
};

// All-false type over the given parameters.
QfType empty_type(const Signature& sig, std::vector<Vertex> params);

// Throws InvalidArgument when atom vectors do not match the pattern layout.
void validate_type(const Signature& sig, const QfType& p);

template <class Target>
QfType qf_type_of(const Target& s, Vertex v, std::span<const Vertex> params) {
    const auto& sig = s.signature();
    for (auto a : params)
        if (a == v) throw InvalidArgument("qf_type: point belongs to the parameter sequence");
    QfType p;
    p.params.assign(params.begin(), params.end());
    p.atoms.resize(sig.size());
    std::vector<Vertex> t;
    for (std::size_t r = 0; r < sig.size(); ++r) {
        const auto& pats = type_patterns(sig.arity(r), params.size());
        auto& out = p.atoms[r];
        out.assign(pats.size(), 0);
        for (std::size_t j = 0; j < pats.size(); ++j) {
            t.resize(pats[j].size());
            for (std::size_t i = 0; i < t.size(); ++i)
                t[i] = pats[j][i] < 0 ? v : params[static_cast<std::size_t>(pats[j][i])];
            out[j] = s.holds(r, t) ? 1 : 0;
        }
    }
    return p;
}

QfType qf_type(const Structure& s, Vertex v, std::span<const Vertex> params);

// Structure on m+1 vertices: `base` (on the m parameters, in order) plus a new
// vertex m whose atoms over the parameters are those of p.
Structure realise(const Structure& base, const QfType& p);

// Number of atom slots for m parameters over sig.
std::size_t atom_count(const Signature& sig, std::size_t m);

} // namespace sunflower
