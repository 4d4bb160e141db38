#pragma once

#include <map>
#include <optional>

#include "balflip/complex.hpp"

namespace balflip {

struct Coloring {
  std::map<Vertex, int> color;
  int num_colors = 0;

  int at(const Vertex& v) const;  // throws BadParams when v is uncolored
  bool defines(const Vertex& v) const { return color.count(v) != 0; }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// True iff every vertex of c has a color in [0, m) and no edge is monochromatic.
bool is_proper_coloring(const Complex& c, const Coloring& kappa, int m);
// Exact backtracking for a proper (dim+1)-coloring; nullopt if none exists.
std::optional<Coloring> find_balanced_coloring(const Complex& c);
// κ(i) = κ(v_i) = i on Base/Sub vertices.
Coloring index_coloring(const Complex& c);

}  // namespace balflip
