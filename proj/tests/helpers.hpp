#pragma once

#include <utility>
#include <vector>

#include "sunflower/structure.hpp"

namespace testing {

using namespace sunflower;

inline Structure graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    std::vector<std::vector<Tuple>> rels(1);
    for (auto [u, v] : edges) {
        rels[0].push_back({u, v});
        rels[0].push_back({v, u});
    }
    return Structure(Signature({{"E", 2}}), n, std::move(rels));
}

inline Structure pure(std::size_t n) { return Structure(Signature{}, n); }

} // namespace testing
