#include <algorithm>
#include <iterator>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>

#include "balflip/errors.hpp"
#include "balflip/moves.hpp"
#include "balflip/shelling.hpp"

namespace balflip {

namespace {

// Facet adjacency of the ambient, built once per site search.
struct FaceHash {
  std::size_t operator()(const Face& f) const {
    std::size_t h = f.size();
    for (const auto& v : f) h = h * 1000003u ^ v.hash();
    return h;
  }
};

struct FacetIndex {
  const Complex& c;
  std::unordered_map<Face, std::vector<std::size_t>, FaceHash> by_ridge;
  std::unordered_map<Vertex, std::vector<std::size_t>> by_vertex;

  explicit FacetIndex(const Complex& cx) : c(cx) {
    const auto& fs = c.facets();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (const auto& x : fs[i]) {
        by_ridge[face_difference(fs[i], Face{x})].push_back(i);
        by_vertex[x].push_back(i);
      }
    }
  }

  bool induced(const Complex& d_img) const {
    const auto vs = d_img.vertices();
    std::vector<std::size_t> touched;
    for (const auto& v : vs) {
      auto it = by_vertex.find(v);
      if (it == by_vertex.end()) return false;
      touched.insert(touched.end(), it->second.begin(), it->second.end());
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (auto i : touched)
      if (!d_img.contains(face_intersection(c.facets()[i], vs))) return false;
    return true;
  }
};

struct Pattern {
  int d;
  IndexSet index;
  Complex complex;
  Face anchor;
  std::size_t num_vertices;
  // Per facet: (neighbouring facet, shared ridge).
  std::vector<std::vector<std::pair<std::size_t, Face>>> adjacent;

  Pattern(int dd, const IndexSet& I)
      : d(dd), index(I), complex(diamond_closed_form(dd, I)), anchor(pattern_anchor(dd, I)),
        num_vertices(complex.vertices().size()) {
    const auto& fs = complex.facets();
    adjacent.resize(fs.size());
    std::map<Face, std::vector<std::size_t>> by_ridge;
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (const auto& x : fs[i]) by_ridge[face_difference(fs[i], Face{x})].push_back(i);
    for (auto& [r, ids] : by_ridge)
      if (ids.size() == 2) {
        adjacent[ids[0]].emplace_back(ids[1], r);
        adjacent[ids[1]].emplace_back(ids[0], r);
      }
  }
};

// Extends anchor -> image across interior ridges of the pattern.
// Every facet the search reads contains a vertex of `used`; that set is reported through `touched`.
std::optional<VertexMap> propagate(const FacetIndex& idx, const Pattern& p, const std::vector<Vertex>& image,
                                   std::vector<Vertex>* touched = nullptr) {
  if (image.size() != p.anchor.size()) return std::nullopt;
  VertexMap m;
  std::set<Vertex> used;
  struct Report {
    std::set<Vertex>& used;
    std::vector<Vertex>* out;
    ~Report() {
      if (out) out->assign(used.begin(), used.end());
    }
  } report{used, touched};
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (!used.insert(image[k]).second) return std::nullopt;
    m[p.anchor[k]] = image[k];
  }
  const auto& fs = p.complex.facets();
  const std::size_t start =
      static_cast<std::size_t>(std::lower_bound(fs.begin(), fs.end(), p.anchor) - fs.begin());
  std::vector<char> done(fs.size(), 0);
  std::vector<std::size_t> queue{start};
  done[start] = 1;
  if (!idx.c.has_facet(map_face(p.anchor, m))) return std::nullopt;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t cur = queue[q];
    const Face cur_img = map_face(fs[cur], m);
    for (const auto& [nb, ridge] : p.adjacent[cur]) {
      const Face r_img = map_face(ridge, m);
      auto it = idx.by_ridge.find(r_img);
      if (it == idx.by_ridge.end() || it->second.size() != 2) return std::nullopt;
      const auto& a = idx.c.facets()[it->second[0]];
      const Face& other = (a == cur_img) ? idx.c.facets()[it->second[1]] : a;
      const Vertex z = face_difference(other, r_img).front();
      const Vertex y = face_difference(fs[nb], ridge).front();
      auto my = m.find(y);
      if (my != m.end()) {
        if (my->second != z) return std::nullopt;
      } else {
        if (!used.insert(z).second) return std::nullopt;
        m[y] = z;
      }
      if (!done[nb]) {
        done[nb] = 1;
        queue.push_back(nb);
      }
    }
  }
  if (m.size() != p.num_vertices) return std::nullopt;
  return m;
}

bool valid_pattern(const Complex& c, int d, const IndexSet& I) {
  if (c.is_empty() || !c.is_pure() || c.dim() != d || d < 0) return false;
  if (I.empty() || !std::is_sorted(I.begin(), I.end())) return false;
  if (I.front() < 0 || I.back() > d + 1 || static_cast<int>(I.size()) >= d + 2) return false;
  return std::adjacent_find(I.begin(), I.end()) == I.end();
}

}  // namespace

Face pattern_anchor(int d, const IndexSet& I) { return absolute_shelling_order(d, I).order.front(); }

Complex cross_flip_image(const CrossFlip& flip) {
  return map_complex(diamond_closed_form(flip.d, flip.index), flip.embedding);
}

std::optional<CrossFlip> embed_by_anchor(const Complex& c, int d, const IndexSet& I,
                                         const std::vector<Vertex>& anchor_image) {
  if (!valid_pattern(c, d, I)) return std::nullopt;
  const Pattern p(d, I);
  const FacetIndex idx(c);
  auto m = propagate(idx, p, anchor_image);
  if (!m || !idx.induced(map_complex(p.complex, *m))) return std::nullopt;
  return CrossFlip{d, I, *m};
}

namespace {

struct Candidate {
  std::optional<CrossFlip> site;
  std::vector<Vertex> touched;  // sorted
};

// The color-forced embedding whose anchor facet lands on h, if any.
Candidate try_anchor(const FacetIndex& idx, const Pattern& p, const Coloring& kappa, const Face& h) {
  Candidate out;
  const int d = p.d;
  std::vector<Vertex> by_color(d + 1);
  std::vector<char> hit(d + 1, 0);
  for (const auto& v : h) {
    auto it = kappa.color.find(v);
    if (it == kappa.color.end() || it->second < 0 || it->second > d || hit[it->second]) {
      out.touched = h;
      return out;
    }
    hit[it->second] = 1;
    by_color[it->second] = v;
  }
  std::vector<Vertex> image;
  for (const auto& u : p.anchor) image.push_back(by_color[u.index()]);
  auto m = propagate(idx, p, image, &out.touched);
  if (!m) return out;
  for (const auto& [u, w] : *m)
    if (!kappa.defines(w) || kappa.at(w) != u.index()) return out;
  if (!idx.induced(map_complex(p.complex, *m))) return out;
  out.site = CrossFlip{d, p.index, *m};
  return out;
}

// An induced image is determined by its vertex set.
std::vector<Vertex> image_vertices(const CrossFlip& f) {
  std::vector<Vertex> vs;
  for (const auto& [u, w] : f.embedding) vs.push_back(w);
  std::sort(vs.begin(), vs.end());
  return vs;
}

void collect_sites(const FacetIndex& idx, const Coloring& kappa, const IndexSet& I, std::vector<CrossFlip>& out) {
  const Complex& c = idx.c;
  const int d = c.dim();
  if (!valid_pattern(c, d, I)) return;
  const Pattern p(d, I);
  std::set<std::vector<Vertex>> images;
  for (const auto& h : c.facets()) {
    auto cand = try_anchor(idx, p, kappa, h);
    if (cand.site && images.insert(image_vertices(*cand.site)).second) out.push_back(std::move(*cand.site));
  }
}

}  // namespace

std::vector<CrossFlip> find_cross_flip_sites(const Complex& c, const Coloring& kappa, const IndexSet& I) {
  std::vector<CrossFlip> out;
  if (c.is_empty()) return out;
  const FacetIndex idx(c);
  collect_sites(idx, kappa, I, out);
  return out;
}

std::vector<CrossFlip> find_cross_flip_sites(const Complex& c, const Coloring& kappa,
                                             const std::vector<IndexSet>& classes) {
  std::vector<CrossFlip> out;
  if (c.is_empty()) return out;
  const FacetIndex idx(c);
  for (const auto& I : classes) collect_sites(idx, kappa, I, out);
  return out;
}

std::vector<CrossFlip> find_all_cross_flip_embeddings(const Complex& c, const IndexSet& I) {
  std::vector<CrossFlip> out;
  const int d = c.dim();
  if (!valid_pattern(c, d, I)) return out;
  const Pattern p(d, I);
  const FacetIndex idx(c);
  std::set<VertexMap> seen;
  for (const auto& h : c.facets()) {
    std::vector<Vertex> image = h;
    do {
      auto m = propagate(idx, p, image);
      if (!m || !seen.insert(*m).second) continue;
      if (!idx.induced(map_complex(p.complex, *m))) continue;
      out.push_back(CrossFlip{d, I, *m});
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return out;
}

CrossFlipResult apply_cross_flip(const Complex& c, const CrossFlip& flip, const std::optional<Coloring>& kappa) {
  const int d = flip.d;
  const Complex pattern = diamond_closed_form(d, flip.index);
  const Complex cp = cross_polytope(d);
  const Complex complement = delete_subcomplex(cp, pattern);
  if (complement.is_empty()) throw Error(ErrorKind::BadParams, "index set must be a proper subset");
  const auto pv = pattern.vertices();
  std::set<Vertex> targets;
  for (const auto& u : pv) {
    auto it = flip.embedding.find(u);
    if (it == flip.embedding.end())
      throw Error(ErrorKind::BadParams, "embedding misses pattern vertex " + u.to_string());
    if (!targets.insert(it->second).second)
      throw Error(ErrorKind::EmbeddingNotInjective, it->second.to_string() + " is hit twice");
  }
  VertexMap e;
  for (const auto& u : pv) e[u] = flip.embedding.at(u);
  const Complex image = map_complex(pattern, e);
  for (const auto& f : image.facets())
    if (!c.has_facet(f)) throw Error(ErrorKind::NotApplicable, face_to_string(f) + " is not a facet of the ambient");
  if (!is_induced(c, image)) throw Error(ErrorKind::NotInduced, "image of the pattern is not induced");
  if (!is_shellable(pattern)) throw Error(ErrorKind::NotShellable, "pattern is not shellable");
  if (!is_shellable(complement)) throw Error(ErrorKind::NotCoShellable, "complement of the pattern is not shellable");

  int next = next_fresh_index(c);
  for (const auto& u : cp.vertices())
    if (!e.count(u)) e[u] = Vertex::fresh(next++);

  std::vector<Face> gs;
  for (const auto& g : c.facets())
    if (!image.has_facet(g)) gs.push_back(g);
  const Complex glued = map_complex(complement, e);
  gs.insert(gs.end(), glued.facets().begin(), glued.facets().end());

  CrossFlipResult out;
  out.complex = Complex::generated_by(std::move(gs));
  out.extended = e;
  out.complement_induced = is_induced(out.complex, glued);
  if (kappa) {
    Coloring k;
    k.num_colors = kappa->num_colors;
    std::map<Vertex, Vertex> origin;  // result vertex -> pattern vertex, for fresh ones
    for (const auto& [u, w] : e) origin[w] = u;
    const auto old_vertices = c.vertices();
    for (const auto& v : out.complex.vertices()) {
      if (kappa->defines(v) && face_contains(old_vertices, v)) {
        k.color[v] = kappa->at(v);
        continue;
      }
      // A fresh vertex takes the color of the image of its Base/Sub partner.
      const Vertex partner = origin.at(v).partner();
      k.color[v] = kappa->at(e.at(partner));
    }
    out.coloring = std::move(k);
  }
  return out;
}

struct CrossFlipSiteCache::State {
  Complex c;
  Coloring kappa;
  std::vector<IndexSet> classes;
  std::vector<std::optional<Pattern>> patterns;
  std::vector<std::map<Face, Candidate>> entries;
};

CrossFlipSiteCache::CrossFlipSiteCache(const Complex& c, const Coloring& kappa, std::vector<IndexSet> classes)
    : state_(std::make_unique<State>()) {
  State& st = *state_;
  st.c = c;
  st.kappa = kappa;
  st.classes = std::move(classes);
  st.entries.resize(st.classes.size());
  const int d = c.dim();
  for (const auto& I : st.classes) {
    if (valid_pattern(c, d, I)) st.patterns.emplace_back(std::in_place, d, I);
    else st.patterns.emplace_back();
  }
  if (!c.is_empty()) {
    const FacetIndex idx(st.c);
    for (std::size_t k = 0; k < st.classes.size(); ++k)
      if (st.patterns[k])
        for (const auto& h : st.c.facets()) st.entries[k].emplace(h, try_anchor(idx, *st.patterns[k], st.kappa, h));
  }
  rebuild();
}

CrossFlipSiteCache::~CrossFlipSiteCache() = default;

void CrossFlipSiteCache::update(const Complex& c, const Coloring& kappa) {
  State& st = *state_;
  if (c.dim() != st.c.dim() || !c.is_pure() || c.is_empty()) {
    *this = CrossFlipSiteCache(c, kappa, st.classes);
    return;
  }
  const auto& before = st.c.facets();
  const auto& after = c.facets();
  std::vector<Face> removed, added;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(removed));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(added));
  std::vector<Vertex> changed;
  for (const auto& f : removed) changed.insert(changed.end(), f.begin(), f.end());
  for (const auto& f : added) changed.insert(changed.end(), f.begin(), f.end());
  std::sort(changed.begin(), changed.end());
  changed.erase(std::unique(changed.begin(), changed.end()), changed.end());

  st.c = c;
  st.kappa = kappa;
  const FacetIndex idx(st.c);
  for (std::size_t k = 0; k < st.classes.size(); ++k) {
    if (!st.patterns[k]) continue;
    auto& es = st.entries[k];
    for (const auto& f : removed) es.erase(f);
    for (auto& [h, cand] : es) {
      const auto& t = cand.touched;
      bool stale = false;
      for (auto a = t.cbegin(), b = changed.cbegin(); a != t.cend() && b != changed.cend();) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else {
          stale = true;
          break;
        }
      }
      if (stale) cand = try_anchor(idx, *st.patterns[k], st.kappa, h);
    }
    for (const auto& f : added) es[f] = try_anchor(idx, *st.patterns[k], st.kappa, f);
  }
  rebuild();
}

void CrossFlipSiteCache::rebuild() {
  sites_.clear();
  for (const auto& es : state_->entries) {
    std::set<std::vector<Vertex>> images;
    for (const auto& [h, cand] : es)
      if (cand.site && images.insert(image_vertices(*cand.site)).second) sites_.push_back(*cand.site);
  }
}

}  // namespace balflip
