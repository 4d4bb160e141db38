#include "balflip/moves.hpp"

#include <algorithm>
#include <set>

#include "balflip/errors.hpp"
#include "balflip/manifold.hpp"

namespace balflip {

int next_fresh_index(const Complex& c) {
  int k = 0;
  for (const auto& v : c.vertices())
    if (v.is_fresh()) k = std::max(k, v.index() + 1);
  return k;
}

Complex stellar_subdivide(const Complex& c, const Face& f) {
  return stellar_subdivide(c, f, Vertex::fresh(next_fresh_index(c)));
}

Complex stellar_subdivide(const Complex& c, const Face& f, const Vertex& v) {
  if (f.empty() || !c.contains(f)) throw Error(ErrorKind::FaceNotPresent, face_to_string(f));
  if (face_contains(c.vertices(), v)) throw Error(ErrorKind::VertexCollision, v.to_string() + " already used");
  std::vector<Face> gs;
  for (const auto& g : c.facets()) {
    if (!is_subset(f, g)) {
      gs.push_back(g);
      continue;
    }
    for (const auto& x : f) {
      Face h = face_difference(g, Face{x});
      h.push_back(v);
      gs.push_back(make_face(std::move(h)));
    }
  }
  return Complex::generated_by(std::move(gs));
}

namespace {

// Whether lk = ∂F′ ∗ L for some L on vertices disjoint from F′; returns L.
std::optional<Complex> split_off_boundary(const Complex& lk, const Face& fp) {
  if (fp.empty()) return std::nullopt;
  // In ∂F′ ∗ L the link of F′ minus one vertex is exactly L.
  const Face ridge(fp.begin() + 1, fp.end());
  if (!lk.contains(ridge)) return std::nullopt;
  const Complex l = link(lk, ridge);
  if (!face_intersection(l.vertices(), fp).empty()) return std::nullopt;
  if (join(simplex_boundary_of(fp), l) != lk) return std::nullopt;
  return l;
}

}  // namespace

Complex stellar_weld(const Complex& c, const Vertex& v, const std::optional<Face>& hint) {
  if (!face_contains(c.vertices(), v)) throw Error(ErrorKind::FaceNotPresent, v.to_string());
  const Complex lk = link(c, Face{v});
  std::vector<std::pair<Face, Complex>> candidates;
  auto consider = [&](const Face& fp) {
    if (face_contains(fp, v) || c.contains(fp)) return;
    if (auto l = split_off_boundary(lk, fp)) {
      for (const auto& [g, _] : candidates)
        if (g == fp) return;
      candidates.emplace_back(fp, *l);
    }
  };
  if (hint) {
    consider(make_face(*hint));
  } else {
    // F′ meets every facet H of lk(v) in all but one vertex x ∉ H.
    const auto lv = lk.vertices();
    const Face& h = lk.facets().front();
    for (const auto& x : lv) {
      if (face_contains(h, x)) continue;
      for (unsigned long mask = 0; mask < (1ul << h.size()); ++mask) {
        Face fp{x};
        for (std::size_t i = 0; i < h.size(); ++i)
          if (mask >> i & 1) fp.push_back(h[i]);
        if (fp.size() >= 2) consider(make_face(std::move(fp)));
      }
    }
  }
  if (candidates.size() != 1)
    throw Error(ErrorKind::NotWeldable, v.to_string() + (candidates.empty() ? ": link does not split as ∂F ∗ L"
                                                                            : ": several faces could be restored; pass one"));
  const auto& [fp, l] = candidates.front();
  std::vector<Face> gs;
  for (const auto& g : c.facets())
    if (!face_contains(g, v)) gs.push_back(g);
  for (const auto& g : l.facets()) gs.push_back(face_union(fp, g));
  return Complex::generated_by(std::move(gs));
}

bool is_bistellar_applicable(const Complex& c, const BistellarFlip& flip) {
  const Face a = make_face(flip.a), b = make_face(flip.b);
  if (a.empty() || b.empty() || !face_intersection(a, b).empty()) return false;
  if (!c.contains(a) || c.contains(b)) return false;
  return link(c, a) == simplex_boundary_of(b);
}

Complex apply_bistellar(const Complex& c, const BistellarFlip& flip) {
  if (!is_bistellar_applicable(c, flip))
    throw Error(ErrorKind::NotApplicable, "lk(" + face_to_string(flip.a) + ") is not ∂" + face_to_string(flip.b) +
                                              " or the target face exists");
  const Face a = make_face(flip.a), b = make_face(flip.b);
  std::vector<Face> gs;
  for (const auto& g : c.facets())
    if (!is_subset(a, g)) gs.push_back(g);
  for (const auto& x : a) gs.push_back(face_union(face_difference(a, Face{x}), b));
  return Complex::generated_by(std::move(gs));
}

std::vector<BistellarFlip> list_bistellar(const Complex& c) {
  std::vector<BistellarFlip> out;
  if (c.is_empty()) return out;
  const Vertex fresh = Vertex::fresh(next_fresh_index(c));
  const int d = c.dim();
  for (int k = 0; k <= d; ++k)
    for (const auto& a : c.faces(k)) {
      const Complex lk = link(c, a);
      if (lk == Complex::void_complex()) {
        out.push_back({a, Face{fresh}});
        continue;
      }
      const Face b = lk.vertices();
      if (static_cast<int>(b.size()) > d + 1 || c.contains(b)) continue;
      if (lk == simplex_boundary_of(b)) out.push_back({a, b});
    }
  return out;
}

namespace {

void check_shelling_conditions(const Complex& c, const ShellingMove& m) {
  const Face f = make_face(m.facet), a = make_face(m.a), r = make_face(m.r);
  if (a.empty() || r.empty() || !face_intersection(a, r).empty() || face_union(a, r) != f)
    throw Error(ErrorKind::ConditionViolated, "(1) F must split as A ∪ R with A, R nonempty and disjoint", 1);
  const Complex bd = boundary_complex(c);
  if (bd.contains(a)) throw Error(ErrorKind::ConditionViolated, "(2) A = " + face_to_string(a) + " lies in the boundary", 2);
  if (a.size() == 1) {
    if (!bd.contains(r)) throw Error(ErrorKind::ConditionViolated, "(3) R = " + face_to_string(r) + " is not a boundary face", 3);
    return;
  }
  for (const auto& x : a) {
    const Face g = face_union(face_difference(a, Face{x}), r);
    if (!bd.contains(g))
      throw Error(ErrorKind::ConditionViolated, "(3) " + face_to_string(g) + " is not a boundary face", 3);
  }
}

}  // namespace

Complex shelling_move(const Complex& c, const ShellingMove& m) {
  const Face f = make_face(m.facet);
  if (!c.has_facet(f)) throw Error(ErrorKind::FaceNotPresent, face_to_string(f) + " is not a facet");
  check_shelling_conditions(c, m);
  std::vector<Face> gs;
  for (const auto& g : c.facets())
    if (g != f) gs.push_back(g);
  return Complex::generated_by(std::move(gs));
}

Complex inverse_shelling(const Complex& c, const ShellingMove& m) {
  const Face f = make_face(m.facet);
  if (c.contains(f)) throw Error(ErrorKind::NotApplicable, face_to_string(f) + " is already a face");
  std::vector<Face> gs = c.facets();
  gs.push_back(f);
  const Complex next = Complex::generated_by(std::move(gs));
  if (!next.has_facet(f)) throw Error(ErrorKind::NotApplicable, face_to_string(f) + " would not be a facet");
  check_shelling_conditions(next, m);
  return next;
}

namespace {

// Colors for vertices of `after` missing from kappa: the first color no
// neighbour uses. False when some vertex has no free color or an edge is
// monochromatic.
bool balanced_after(const Complex& after, const Coloring& kappa, int m) {
  Coloring k = kappa;
  for (const auto& v : after.vertices()) {
    if (k.defines(v)) continue;
    std::set<int> used;
    for (const auto& g : after.facets())
      if (face_contains(g, v))
        for (const auto& u : g)
          if (u != v && k.defines(u)) used.insert(k.at(u));
    int col = 0;
    while (used.count(col)) ++col;
    if (col >= m) return false;
    k.color[v] = col;
  }
  return is_proper_coloring(after, k, m);
}

int color_count(const Complex& c, const Coloring& kappa) { return std::max(kappa.num_colors, c.dim() + 1); }

}  // namespace

bool preserves_balancedness(const Complex& c, const Coloring& kappa, const ShellingMove& forward) {
  return balanced_after(shelling_move(c, forward), kappa, color_count(c, kappa));
}

bool preserves_balancedness_inverse(const Complex& c, const Coloring& kappa, const ShellingMove& inverse) {
  return balanced_after(inverse_shelling(c, inverse), kappa, color_count(c, kappa));
}

bool preserves_balancedness(const Complex& c, const Coloring& kappa, const BistellarFlip& flip) {
  return balanced_after(apply_bistellar(c, flip), kappa, color_count(c, kappa));
}

bool preserves_balancedness(const Complex& c, const Coloring& kappa, const CrossFlip& flip) {
  const auto res = apply_cross_flip(c, flip, kappa);
  return is_proper_coloring(res.complex, *res.coloring, color_count(c, kappa));
}

Complex boundary_bistellar_realization(const Complex& c, const Face& a_in, const Face& b_in) {
  const Face a = make_face(a_in), b = make_face(b_in);
  if (c.dim() <= 3 && is_combinatorial_manifold(c) != ManifoldVerdict::WithBoundary)
    throw Error(ErrorKind::NotApplicableOnBoundary, "complex is not a manifold with boundary");
  const Complex bd = boundary_complex(c);
  if (!is_bistellar_applicable(bd, {a, b}))
    throw Error(ErrorKind::NotApplicableOnBoundary, "χ_{A,B} does not apply to the boundary");
  const Face ab = face_union(a, b);
  std::vector<Face> gs;
  if (c.has_facet(ab)) {
    for (const auto& g : c.facets())
      if (g != ab) gs.push_back(g);
  } else if (!c.contains(ab)) {
    gs = c.facets();
    gs.push_back(ab);
  } else {
    throw Error(ErrorKind::NotApplicableOnBoundary, face_to_string(ab) + " is a non-facet face");
  }
  Complex out = Complex::generated_by(std::move(gs));
  if (boundary_complex(out) != apply_bistellar(bd, {a, b}))
    throw Error(ErrorKind::NotApplicableOnBoundary, "one-facet change does not realise the boundary flip");
  return out;
}

}  // namespace balflip
