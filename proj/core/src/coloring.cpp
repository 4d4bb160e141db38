#include "balflip/coloring.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "balflip/errors.hpp"

namespace balflip {

int Coloring::at(const Vertex& v) const {
  auto it = color.find(v);
  if (it == color.end()) throw Error(ErrorKind::BadParams, "vertex " + v.to_string() + " has no color");
  return it->second;
}

bool is_proper_coloring(const Complex& c, const Coloring& kappa, int m) {
  for (const auto& v : c.vertices()) {
    auto it = kappa.color.find(v);
    if (it == kappa.color.end() || it->second < 0 || it->second >= m) return false;
  }
  for (const auto& g : c.facets())
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (kappa.color.at(g[i]) == kappa.color.at(g[j])) return false;
  return true;
}

std::optional<Coloring> find_balanced_coloring(const Complex& c) {
  const auto vs = c.vertices();
  const int m = c.dim() + 1;
  const std::size_t n = vs.size();
  if (n == 0) return Coloring{{}, std::max(m, 0)};
  auto id = [&](const Vertex& v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& g : c.facets())
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        adj[id(g[i])].push_back(id(g[j]));
        adj[id(g[j])].push_back(id(g[i]));
      }
  std::vector<int> col(n, -1);
  // The first facet is colored 0..d outright; this only removes color symmetry.
  if (!c.facets().empty()) {
    const auto& f0 = c.facets().front();
    if (static_cast<int>(f0.size()) > m) return std::nullopt;
    for (std::size_t i = 0; i < f0.size(); ++i) col[id(f0[i])] = static_cast<int>(i);
  }
  // Visit vertices in the order facets are reached through shared ridges,
  // so in a pseudomanifold almost every choice is forced.
  std::vector<std::size_t> order;
  {
    std::vector<char> seen_v(n, 0), seen_f(c.num_facets(), 0);
    std::map<Face, std::vector<std::size_t>> by_ridge;
    for (std::size_t i = 0; i < c.num_facets(); ++i)
      for (const auto& x : c.facets()[i]) by_ridge[face_difference(c.facets()[i], Face{x})].push_back(i);
    for (std::size_t start = 0; start < c.num_facets(); ++start) {
      if (seen_f[start]) continue;
      std::vector<std::size_t> queue{start};
      seen_f[start] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const auto& g = c.facets()[queue[q]];
        for (const auto& x : g)
          if (!seen_v[id(x)]) {
            seen_v[id(x)] = 1;
            order.push_back(id(x));
          }
        for (const auto& x : g)
          for (auto nb : by_ridge[face_difference(g, Face{x})])
            if (!seen_f[nb]) {
              seen_f[nb] = 1;
              queue.push_back(nb);
            }
      }
    }
  }
  std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const std::size_t k = order[pos];
    if (col[k] >= 0) return assign(pos + 1);
    for (int x = 0; x < m; ++x) {
      bool ok = true;
      for (auto w : adj[k])
        if (col[w] == x) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[k] = x;
      if (assign(pos + 1)) return true;
      col[k] = -1;
    }
    return false;
  };
  // Pre-colored vertices may already clash.
  for (std::size_t v = 0; v < n; ++v)
    if (col[v] >= 0)
      for (auto w : adj[v])
        if (col[w] == col[v]) return std::nullopt;
  if (!assign(0)) return std::nullopt;
  Coloring out;
  out.num_colors = m;
  for (std::size_t i = 0; i < n; ++i) out.color[vs[i]] = col[i];
  return out;
}

Coloring index_coloring(const Complex& c) {
  Coloring k;
  int m = 0;
  for (const auto& v : c.vertices()) {
    if (v.kind() != Vertex::Kind::Indexed)
      throw Error(ErrorKind::BadParams, "index coloring needs Base/Sub vertices, got " + v.to_string());
    k.color[v] = v.index();
    m = std::max(m, v.index() + 1);
  }
  k.num_colors = std::max(m, c.dim() + 1);
  return k;
}

}  // namespace balflip
