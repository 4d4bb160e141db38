#include "balflip/manifold.hpp"

#include <map>

#include "balflip/errors.hpp"

namespace balflip {

const char* to_string(ManifoldVerdict v) {
  switch (v) {
    case ManifoldVerdict::Closed: return "Closed";
    case ManifoldVerdict::WithBoundary: return "WithBoundary";
    case ManifoldVerdict::No: return "No";
    case ManifoldVerdict::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

SphereBall classify_graph(const Complex& c) {
  std::map<Vertex, int> degree;
  for (const auto& e : c.facets())
    for (const auto& v : e) ++degree[v];
  int ends = 0;
  for (const auto& [v, n] : degree) {
    if (n > 2) return SphereBall::Neither;
    if (n == 1) ++ends;
  }
  if (!is_connected(c)) return SphereBall::Neither;
  if (ends == 0) return SphereBall::Sphere;
  return ends == 2 ? SphereBall::Ball : SphereBall::Neither;
}

SphereBall classify_surface(const Complex& c) {
  if (!is_connected(c)) return SphereBall::Neither;
  std::map<Face, int> per_edge;
  for (const auto& t : c.facets())
    for (const auto& x : t) ++per_edge[face_difference(t, Face{x})];
  bool has_boundary = false;
  for (const auto& [e, n] : per_edge) {
    if (n > 2) return SphereBall::Neither;
    if (n == 1) has_boundary = true;
  }
  for (const auto& v : c.vertices()) {
    const auto lk = classify_graph(link(c, Face{v}));
    if (lk == SphereBall::Neither) return SphereBall::Neither;
  }
  // A connected surface with boundary and χ = 1 is a disk; without boundary
  // χ = 2 forces the sphere.
  const long long chi = euler_characteristic(c);
  if (!has_boundary) return chi == 2 ? SphereBall::Sphere : SphereBall::Neither;
  return chi == 1 ? SphereBall::Ball : SphereBall::Neither;
}

}  // namespace

SphereBall classify_sphere_or_ball(const Complex& c) {
  if (c.is_empty() || !c.is_pure()) return SphereBall::Neither;
  switch (c.dim()) {
    case -1: return SphereBall::Sphere;
    case 0:
      if (c.num_facets() == 2) return SphereBall::Sphere;
      return c.num_facets() == 1 ? SphereBall::Ball : SphereBall::Neither;
    case 1: return classify_graph(c);
    case 2: return classify_surface(c);
    default: return SphereBall::Undecided;
  }
}

ManifoldVerdict is_combinatorial_manifold(const Complex& c) {
  if (!c.is_pure()) throw Error(ErrorKind::NotPure, "manifold check of an impure complex");
  if (c.dim() >= 4) return ManifoldVerdict::Undecided;
  if (c.is_empty() || !is_connected(c)) return ManifoldVerdict::No;
  bool boundary = false;
  for (const auto& v : c.vertices()) {
    switch (classify_sphere_or_ball(link(c, Face{v}))) {
      case SphereBall::Sphere: break;
      case SphereBall::Ball: boundary = true; break;
      case SphereBall::Neither: return ManifoldVerdict::No;
      case SphereBall::Undecided: return ManifoldVerdict::Undecided;
    }
  }
  return boundary ? ManifoldVerdict::WithBoundary : ManifoldVerdict::Closed;
}

}  // namespace balflip
