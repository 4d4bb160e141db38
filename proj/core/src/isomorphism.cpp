#include "balflip/isomorphism.hpp"

#include <algorithm>
#include <set>

#include "balflip/errors.hpp"

namespace balflip {

Face map_face(const Face& f, const VertexMap& m) {
  std::vector<Vertex> out;
  out.reserve(f.size());
  for (const auto& v : f) {
    auto it = m.find(v);
    if (it == m.end()) throw Error(ErrorKind::BadParams, "map misses vertex " + v.to_string());
    out.push_back(it->second);
  }
  return make_face(std::move(out));
}

Complex map_complex(const Complex& c, const VertexMap& m) {
  std::vector<Face> fs;
  for (const auto& f : c.facets()) fs.push_back(map_face(f, m));
  return Complex::generated_by(std::move(fs));
}

bool is_isomorphism(const Complex& a, const Complex& b, const VertexMap& m) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  if (va.size() != vb.size() || a.num_facets() != b.num_facets()) return false;
  std::set<Vertex> image;
  for (const auto& v : va) {
    auto it = m.find(v);
    if (it == m.end()) return false;
    image.insert(it->second);
  }
  if (image != std::set<Vertex>(vb.begin(), vb.end())) return false;
  std::set<Face> mapped;
  for (const auto& f : a.facets()) {
    Face g = map_face(f, m);
    if (g.size() != f.size() || !b.has_facet(g)) return false;
    mapped.insert(std::move(g));
  }
  return mapped.size() == b.num_facets();
}

namespace {

struct Indexed {
  std::vector<Vertex> vs;
  std::vector<std::vector<int>> facets;        // vertex ids, sorted
  std::set<std::vector<int>> facet_set;
  std::vector<std::vector<char>> adjacent;     // 1-skeleton
  std::vector<std::vector<int>> facets_of;     // facet ids per vertex
  std::vector<std::vector<long long>> invariant;

  explicit Indexed(const Complex& c, const Coloring* kappa) : vs(c.vertices()) {
    const std::size_t n = vs.size();
    adjacent.assign(n, std::vector<char>(n, 0));
    facets_of.resize(n);
    for (const auto& f : c.facets()) {
      std::vector<int> ids;
      for (const auto& v : f) ids.push_back(id(v));
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < ids.size(); ++j)
          if (i != j) adjacent[ids[i]][ids[j]] = 1;
      for (auto x : ids) facets_of[x].push_back(static_cast<int>(facets.size()));
      facet_set.insert(ids);
      facets.push_back(std::move(ids));
    }
    invariant.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto& inv = invariant[x];
      inv.push_back(kappa ? kappa->at(vs[x]) : 0);
      long long deg = 0;
      for (std::size_t y = 0; y < n; ++y) deg += adjacent[x][y];
      inv.push_back(deg);
      const auto lf = f_vector(link(c, Face{vs[x]}));
      inv.push_back(static_cast<long long>(lf.size()));
      inv.insert(inv.end(), lf.begin(), lf.end());
    }
  }

  int id(const Vertex& v) const {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  }
};

}  // namespace

std::optional<VertexMap> are_isomorphic(const Complex& a, const Complex& b, const IsoOptions& opts) {
  if (a.is_empty() != b.is_empty() || a.num_facets() != b.num_facets() || f_vector(a) != f_vector(b))
    return std::nullopt;
  const Coloring* ka = opts.colors ? &opts.colors->first : nullptr;
  const Coloring* kb = opts.colors ? &opts.colors->second : nullptr;
  const Indexed A(a, ka);
  const Indexed B(b, kb);
  const std::size_t n = A.vs.size();
  if (n != B.vs.size()) return std::nullopt;
  {
    auto ia = A.invariant, ib = B.invariant;
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib) return std::nullopt;
  }

  // Visit a's vertices breadth-first from the smallest so every step after
  // the first is constrained by an already mapped neighbour.
  std::vector<int> order;
  {
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::vector<int> queue{static_cast<int>(s)};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        order.push_back(queue[q]);
        for (std::size_t y = 0; y < n; ++y)
          if (A.adjacent[queue[q]][y] && !seen[y]) {
            seen[y] = 1;
            queue.push_back(static_cast<int>(y));
          }
      }
    }
  }
  std::vector<int> pos_in_order(n);
  for (std::size_t i = 0; i < n; ++i) pos_in_order[order[i]] = static_cast<int>(i);

  std::vector<int> fwd(n, -1), bwd(n, -1);
  for (const auto& [u, w] : opts.fixed) {
    const int x = A.id(u), y = B.id(w);
    if (x >= static_cast<int>(n) || A.vs[x] != u || y >= static_cast<int>(n) || B.vs[y] != w)
      return std::nullopt;
    if ((fwd[x] >= 0 && fwd[x] != y) || (bwd[y] >= 0 && bwd[y] != x)) return std::nullopt;
    fwd[x] = y;
    bwd[y] = x;
  }

  // Facets of a whose last vertex in visiting order is x; checked when x is placed.
  std::vector<std::vector<int>> closing(n);
  for (std::size_t f = 0; f < A.facets.size(); ++f) {
    int last = A.facets[f].front();
    for (auto x : A.facets[f])
      if (pos_in_order[x] > pos_in_order[last]) last = x;
    closing[last].push_back(static_cast<int>(f));
  }

  auto consistent = [&](int x, int y) {
    if (A.invariant[x] != B.invariant[y]) return false;
    for (std::size_t z = 0; z < n; ++z)
      if (fwd[z] >= 0 && static_cast<int>(z) != x && A.adjacent[x][z] != B.adjacent[y][fwd[z]])
        return false;
    return true;
  };
  auto facets_ok = [&](int x) {
    for (auto f : closing[x]) {
      std::vector<int> img;
      for (auto u : A.facets[f]) img.push_back(fwd[u]);
      std::sort(img.begin(), img.end());
      if (!B.facet_set.count(img)) return false;
    }
    return true;
  };
  for (std::size_t x = 0; x < n; ++x)
    if (fwd[x] >= 0 && !consistent(static_cast<int>(x), fwd[x])) return std::nullopt;

  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    const int x = order[pos];
    if (fwd[x] >= 0) return facets_ok(x) && self(self, pos + 1);
    for (std::size_t y = 0; y < n; ++y) {
      if (bwd[y] >= 0 || !consistent(x, static_cast<int>(y))) continue;
      fwd[x] = static_cast<int>(y);
      bwd[y] = x;
      if (facets_ok(x) && self(self, pos + 1)) return true;
      fwd[x] = -1;
      bwd[y] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  VertexMap m;
  for (std::size_t x = 0; x < n; ++x) m[A.vs[x]] = B.vs[fwd[x]];
  return m;
}

}  // namespace balflip
