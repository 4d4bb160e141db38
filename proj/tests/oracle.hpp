// Brute-force reference computations for the tests. Nothing here calls the
// library's algorithms; only its value types are shared.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "balflip/complex.hpp"
#include "balflip/coloring.hpp"
#include "balflip/vertex.hpp"

namespace oracle {

using balflip::Complex;
using balflip::Face;
using balflip::Vertex;

inline long long choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Every subset of every facet, the empty face included.
inline std::set<Face> all_faces(const std::vector<Face>& facets) {
  std::set<Face> out;
  for (const auto& f : facets) {
    const unsigned n = static_cast<unsigned>(f.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Face s;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      out.insert(s);
    }
  }
  return out;
}

inline std::set<Face> all_faces(const Complex& c) { return all_faces(c.facets()); }

// f_{-1}, f_0, ..., f_dim
inline std::vector<long long> f_vector(const Complex& c) {
  std::size_t top = 0;
  for (const auto& f : c.facets()) top = std::max(top, f.size());
  std::vector<long long> f(top + 1, 0);
  for (const auto& s : oracle::all_faces(c)) ++f[s.size()];
  return f;
}

// Coefficients of Σ_i f_{i-1} x^i (1-x)^{d+1-i}.
inline std::vector<long long> h_vector(const Complex& c) {
  const auto f = oracle::f_vector(c);
  const int n = static_cast<int>(f.size()) - 1;  // d+1
  std::vector<long long> h(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    std::vector<long long> poly{1};
    for (int k = 0; k < n - i; ++k) {
      std::vector<long long> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j] += poly[j];
        next[j + 1] -= poly[j];
      }
      poly = std::move(next);
    }
    for (std::size_t j = 0; j < poly.size(); ++j) h[i + j] += f[i] * poly[j];
  }
  return h;
}

inline long long euler(const Complex& c) {
  long long e = 0;
  for (const auto& s : oracle::all_faces(c))
    if (!s.empty()) e += (s.size() % 2 == 1) ? 1 : -1;
  return e;
}

inline std::vector<Vertex> vertex_set(const std::vector<Face>& facets) {
  std::set<Vertex> vs;
  for (const auto& f : facets) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

inline bool induced(const Complex& c, const Complex& sub) {
  const auto vs = oracle::vertex_set(sub.facets());
  const std::set<Vertex> vset(vs.begin(), vs.end());
  const auto sub_faces = oracle::all_faces(sub);
  for (const auto& s : oracle::all_faces(c)) {
    bool inside = true;
    for (const auto& v : s) inside = inside && vset.count(v);
    if (inside && !sub_faces.count(s)) return false;
  }
  return true;
}

inline bool proper_coloring(const Complex& c, const balflip::Coloring& k) {
  for (const auto& f : c.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (!k.defines(f[i]) || !k.defines(f[j])) return false;
        if (k.at(f[i]) == k.at(f[j])) return false;
      }
  return true;
}

struct ShellingCheck {
  bool ok = true;
  std::size_t failing = 0;
  std::vector<Face> restrictions;
};

inline bool is_subset_of(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Face intersect(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Definition check: each new facet meets the union of the earlier ones
// (plus `removed`, for relative shellings) in a pure complex of codimension one.
// The restriction face collects the vertices whose opposite face is old.
inline ShellingCheck check_shelling(const std::vector<Face>& order, const std::vector<Face>& removed = {}) {
  ShellingCheck out;
  std::vector<Face> earlier = removed;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Face& f = order[j];
    std::vector<Face> meets;
    for (const auto& g : earlier) meets.push_back(oracle::intersect(f, g));
    std::vector<Face> maximal;
    for (const auto& m : meets) {
      bool dominated = false;
      for (const auto& n : meets)
        if (m != n && m.size() < n.size() && oracle::is_subset_of(m, n)) dominated = true;
      if (!dominated && std::find(maximal.begin(), maximal.end(), m) == maximal.end()) maximal.push_back(m);
    }
    const bool first = earlier.empty();
    bool pure = true;
    for (const auto& m : maximal) pure = pure && m.size() + 1 == f.size();
    if (!first && (!pure || maximal.empty())) {
      out.ok = false;
      out.failing = j;
      return out;
    }
    Face r;
    for (const auto& v : f) {
      Face opp;
      for (const auto& w : f)
        if (w != v) opp.push_back(w);
      bool old = false;
      for (const auto& g : earlier) old = old || oracle::is_subset_of(opp, g);
      if (old) r.push_back(v);
    }
    out.restrictions.push_back(r);
    earlier.push_back(f);
  }
  return out;
}

// Tries every vertex bijection; fine up to about nine vertices.
inline bool isomorphic(const Complex& a, const Complex& b) {
  if (a.num_facets() != b.num_facets()) return false;
  const auto va = oracle::vertex_set(a.facets()), vb = oracle::vertex_set(b.facets());
  if (va.size() != vb.size()) return false;
  const std::set<Face> fb(b.facets().begin(), b.facets().end());
  std::vector<std::size_t> perm(va.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < va.size(); ++i) m[va[i]] = vb[perm[i]];
    bool good = true;
    for (const auto& f : a.facets()) {
      Face g;
      for (const auto& v : f) g.push_back(m[v]);
      std::sort(g.begin(), g.end());
      if (!fb.count(g)) {
        good = false;
        break;
      }
    }
    if (good) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Closed surface: connected, every edge in two triangles, every vertex link one cycle.
inline bool closed_surface(const Complex& c) {
  std::map<Face, int> edge_count;
  std::map<Vertex, std::vector<Face>> link_edges;
  for (const auto& f : c.facets()) {
    if (f.size() != 3) return false;
    for (int i = 0; i < 3; ++i) {
      Face e;
      for (int j = 0; j < 3; ++j)
        if (j != i) e.push_back(f[j]);
      ++edge_count[e];
      link_edges[f[i]].push_back(e);
    }
  }
  for (const auto& [e, n] : edge_count)
    if (n != 2) return false;
  for (const auto& [v, edges] : link_edges) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : edges) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    for (const auto& [u, ns] : adj)
      if (ns.size() != 2) return false;
    std::set<Vertex> seen{adj.begin()->first};
    std::vector<Vertex> stack{adj.begin()->first};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (const auto& w : adj[u])
        if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != adj.size()) return false;
  }
  std::map<Vertex, std::set<Vertex>> g;
  for (const auto& f : c.facets())
    for (const auto& v : f)
      for (const auto& w : f) g[v].insert(w);
  std::set<Vertex> seen{g.begin()->first};
  std::vector<Vertex> stack{g.begin()->first};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (const auto& w : g[u])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == g.size();
}

// Basis exchange: for B1, B2 and x ∈ B1∖B2 some y ∈ B2∖B1 has B1-x+y a basis.
template <class T>
bool basis_exchange(const std::vector<std::set<T>>& family) {
  const std::set<std::set<T>> fam(family.begin(), family.end());
  for (const auto& b1 : fam)
    for (const auto& b2 : fam)
      for (const auto& x : b1) {
        if (b2.count(x)) continue;
        bool ok = false;
        for (const auto& y : b2) {
          if (b1.count(y)) continue;
          auto t = b1;
          t.erase(x);
          t.insert(y);
          ok = ok || fam.count(t);
        }
        if (!ok) return false;
      }
  return true;
}

// A shellable 2-complex grown one triangle at a time from a random pool.
inline std::vector<Face> random_shellable_2complex(std::mt19937& rng, int vertices, int target) {
  std::vector<Vertex> pool;
  for (int i = 0; i < vertices; ++i) pool.push_back(Vertex::named("p" + std::to_string(i)));
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  std::vector<Face> order;
  auto tri = [&] {
    std::set<Vertex> s;
    while (s.size() < 3) s.insert(pool[pick(rng)]);
    return Face(s.begin(), s.end());
  };
  order.push_back(tri());
  for (int tries = 0; tries < 4000 && static_cast<int>(order.size()) < target; ++tries) {
    Face f = tri();
    if (std::find(order.begin(), order.end(), f) != order.end()) continue;
    auto next = order;
    next.push_back(f);
    if (check_shelling(next).ok) order = std::move(next);
  }
  return order;
}

}  // namespace oracle
