#pragma once

#include <map>
#include <optional>
#include <utility>

#include "balflip/coloring.hpp"
#include "balflip/complex.hpp"

namespace balflip {

using VertexMap = std::map<Vertex, Vertex>;

struct IsoOptions {
  // When set, the map must send κ_a(v) to κ_b(φ(v)) exactly.
  std::optional<std::pair<Coloring, Coloring>> colors;
  // Pairs the map is required to contain.
  VertexMap fixed;
};

// A vertex bijection V(a) -> V(b) inducing a facet bijection, or nullopt.
// Deterministic: the first map found by the backtracking order.
std::optional<VertexMap> are_isomorphic(const Complex& a, const Complex& b,
                                        const IsoOptions& opts = {});

// True iff m is a bijection V(a) -> V(b) mapping facets onto facets.
bool is_isomorphism(const Complex& a, const Complex& b, const VertexMap& m);

Face map_face(const Face& f, const VertexMap& m);
Complex map_complex(const Complex& c, const VertexMap& m);

}  // namespace balflip
