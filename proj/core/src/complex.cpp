#include "balflip/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "balflip/errors.hpp"

namespace balflip {

struct Complex::Cache {
  std::mutex mu;
  std::map<int, std::vector<Face>> by_dim;
};

namespace {

void sort_facets(std::vector<Face>& fs) {
  for (auto& f : fs) f = make_face(std::move(f));
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
}

}  // namespace

Complex::Complex() : cache_(std::make_shared<Cache>()) {}

Complex Complex::from_facets(std::vector<Face> facets) {
  const std::size_t given = facets.size();
  sort_facets(facets);
  if (facets.size() != given) throw Error(ErrorKind::NotAntichain, "repeated facet");
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && facets[i].size() <= facets[j].size() && is_subset(facets[i], facets[j]))
        throw Error(ErrorKind::NotAntichain,
                    face_to_string(facets[i]) + " is contained in " + face_to_string(facets[j]));
  Complex c;
  c.facets_ = std::move(facets);
  for (const auto& f : c.facets_) c.dim_ = std::max(c.dim_, static_cast<int>(f.size()) - 1);
  return c;
}

Complex Complex::generated_by(std::vector<Face> faces) {
  sort_facets(faces);
  // Larger faces first so every candidate only needs checking against kept ones.
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> kept;
  for (auto& f : faces) {
    bool covered = false;
    for (const auto& k : kept)
      if (k.size() > f.size() && is_subset(f, k)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  Complex c;
  c.facets_ = std::move(kept);
  for (const auto& f : c.facets_) c.dim_ = std::max(c.dim_, static_cast<int>(f.size()) - 1);
  return c;
}

Complex Complex::simplex(const Face& f) { return generated_by({f}); }

Complex Complex::void_complex() { return generated_by({Face{}}); }

bool Complex::is_pure() const {
  for (const auto& f : facets_)
    if (static_cast<int>(f.size()) - 1 != dim_) return false;
  return true;
}

bool Complex::contains(const Face& f) const {
  for (const auto& g : facets_)
    if (g.size() >= f.size() && is_subset(f, g)) return true;
  return false;
}

bool Complex::has_facet(const Face& f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f);
}

std::vector<Vertex> Complex::vertices() const {
  std::vector<Vertex> vs;
  for (const auto& f : facets_) vs.insert(vs.end(), f.begin(), f.end());
  return make_face(std::move(vs));
}

const std::vector<Face>& Complex::faces(int k) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->by_dim.find(k);
  if (it != cache_->by_dim.end()) return it->second;
  std::vector<Face> out;
  const std::size_t size = k + 1;
  if (k >= -1) {
    for (const auto& f : facets_) {
      if (f.size() < size) continue;
      // Enumerate (size)-subsets of f by index combinations.
      std::vector<std::size_t> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        Face g;
        g.reserve(size);
        for (auto i : idx) g.push_back(f[i]);
        out.push_back(std::move(g));
        std::size_t pos = size;
        while (pos > 0 && idx[pos - 1] == f.size() - size + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return cache_->by_dim.emplace(k, std::move(out)).first->second;
}

Complex link(const Complex& c, const Face& f) {
  if (!c.contains(f)) throw Error(ErrorKind::FaceNotPresent, face_to_string(f));
  std::vector<Face> gs;
  for (const auto& g : c.facets())
    if (is_subset(f, g)) gs.push_back(face_difference(g, f));
  return Complex::generated_by(std::move(gs));
}

Complex star(const Complex& c, const Face& f) {
  if (!c.contains(f)) throw Error(ErrorKind::FaceNotPresent, face_to_string(f));
  std::vector<Face> gs;
  for (const auto& g : c.facets())
    if (is_subset(f, g)) gs.push_back(g);
  return Complex::generated_by(std::move(gs));
}

Complex delete_face(const Complex& c, const Face& f) {
  if (!c.contains(f)) throw Error(ErrorKind::FaceNotPresent, face_to_string(f));
  std::vector<Face> gs;
  for (const auto& g : c.facets()) {
    if (!is_subset(f, g)) {
      gs.push_back(g);
      continue;
    }
    for (const auto& x : f) gs.push_back(face_difference(g, Face{x}));
  }
  return Complex::generated_by(std::move(gs));
}

Complex delete_subcomplex(const Complex& c, const Complex& sub) {
  std::vector<Face> gs;
  for (const auto& g : c.facets())
    if (!sub.has_facet(g)) gs.push_back(g);
  return Complex::generated_by(std::move(gs));
}

Complex join(const Complex& a, const Complex& b) {
  auto va = a.vertices();
  auto vb = b.vertices();
  if (!face_intersection(va, vb).empty())
    throw Error(ErrorKind::VertexCollision, "join operands share " +
                                               face_to_string(face_intersection(va, vb)));
  std::vector<Face> gs;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) gs.push_back(face_union(f, g));
  return Complex::from_facets(std::move(gs));
}

Complex complex_union(const Complex& a, const Complex& b) {
  std::vector<Face> gs = a.facets();
  gs.insert(gs.end(), b.facets().begin(), b.facets().end());
  return Complex::generated_by(std::move(gs));
}

Complex simplex_boundary_of(const Face& f) {
  std::vector<Face> gs;
  for (const auto& x : f) gs.push_back(face_difference(f, Face{x}));
  return Complex::generated_by(std::move(gs));
}

Complex boundary_complex(const Complex& c) {
  if (!c.is_pure()) throw Error(ErrorKind::NotPure, "boundary of an impure complex");
  std::map<Face, int> count;
  for (const auto& g : c.facets())
    for (const auto& x : g) ++count[face_difference(g, Face{x})];
  std::vector<Face> gs;
  for (auto& [r, n] : count)
    if (n == 1) gs.push_back(r);
  return Complex::generated_by(std::move(gs));
}

bool is_subcomplex(const Complex& sub, const Complex& c) {
  for (const auto& f : sub.facets())
    if (!c.contains(f)) return false;
  return true;
}

bool is_induced(const Complex& c, const Complex& sub) {
  if (!is_subcomplex(sub, c)) throw Error(ErrorKind::NotSubcomplex, "is_induced");
  const auto vs = sub.vertices();
  for (const auto& g : c.facets())
    if (!sub.contains(face_intersection(g, vs))) return false;
  return true;
}

Complex induced_subcomplex(const Complex& c, const std::vector<Vertex>& vs) {
  const Face w = make_face(vs);
  std::vector<Face> gs;
  for (const auto& g : c.facets()) gs.push_back(face_intersection(g, w));
  return Complex::generated_by(std::move(gs));
}

std::vector<long long> f_vector(const Complex& c) {
  std::vector<long long> f;
  if (c.is_empty()) return f;
  for (int k = -1; k <= c.dim(); ++k) f.push_back(static_cast<long long>(c.faces(k).size()));
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<long long> h_vector(const Complex& c) {
  if (!c.is_pure()) throw Error(ErrorKind::NotPure, "h-vector of an impure complex");
  if (c.is_empty()) return {};
  const int d = c.dim();
  const auto f = f_vector(c);  // f[i] = f_{i-1}
  std::vector<long long> h(d + 2, 0);
  for (int j = 0; j <= d + 1; ++j)
    for (int i = 0; i <= j; ++i) {
      const long long term = binomial(d + 1 - i, j - i) * f[i];
      h[j] += ((j - i) % 2 == 0) ? term : -term;
    }
  return h;
}

long long euler_characteristic(const Complex& c) {
  long long chi = 0;
  for (int k = 0; k <= c.dim(); ++k) {
    const long long n = static_cast<long long>(c.faces(k).size());
    chi += (k % 2 == 0) ? n : -n;
  }
  return chi;
}

bool is_connected(const Complex& c) {
  const auto vs = c.vertices();
  if (vs.empty()) return true;
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto id = [&](const Vertex& v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const auto& g : c.facets())
    for (std::size_t i = 1; i < g.size(); ++i) parent[find(id(g[i]))] = find(id(g[0]));
  const auto root = find(0);
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

}  // namespace balflip
