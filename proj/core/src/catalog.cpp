#include "balflip/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "balflip/errors.hpp"
#include "balflip/isomorphism.hpp"

namespace balflip {

std::vector<FlipClass> enumerate_basic_flips(int d, int cap) {
  if (d > cap)
    throw Error(ErrorKind::DimensionCapExceeded, "d = " + std::to_string(d) + " exceeds the cap " + std::to_string(cap));
  if (d < 1) throw Error(ErrorKind::BadParams, "d must be at least 1");
  std::vector<FlipClass> out;
  for (unsigned long mask = 1; mask < (1ul << (d + 1)); ++mask) {
    FlipClass fc;
    for (int i = 0; i <= d; ++i)
      if (mask >> i & 1) {
        fc.canonical_index.push_back(i);
        fc.facet_count += 1ll << (d - i);
      }
    fc.h = h_vector_formula(d, fc.canonical_index);
    fc.complement_class = complement_index(d, fc.canonical_index);
    fc.sufficient = std::binary_search(fc.canonical_index.begin(), fc.canonical_index.end(), d);
    out.push_back(std::move(fc));
  }
  std::sort(out.begin(), out.end(),
            [](const FlipClass& a, const FlipClass& b) { return a.canonical_index < b.canonical_index; });
  return out;
}

namespace {

std::string ints_json(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string longs_json(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::string catalog_to_json(int d, const std::vector<FlipClass>& classes) {
  std::string s = "[";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    s += (i ? ",\n " : "") + std::string("{\"d\": ") + std::to_string(d) +
         ", \"canonical_index\": " + ints_json(c.canonical_index) +
         ", \"facet_count\": " + std::to_string(c.facet_count) + ", \"h\": " + longs_json(c.h) +
         ", \"complement_class\": " + ints_json(c.complement_class) +
         ", \"sufficient\": " + (c.sufficient ? "true" : "false") + "}";
  }
  return s + "]\n";
}

std::string catalog_to_table(int d, const std::vector<FlipClass>& classes) {
  std::string s = "d=" + std::to_string(d) + "  classes=" + std::to_string(classes.size()) + "\n";
  s += "index        facets  h                    complement   sufficient\n";
  for (const auto& c : classes) {
    auto pad = [](std::string t, std::size_t w) {
      if (t.size() < w) t.append(w - t.size(), ' ');
      return t;
    };
    std::string h;
    for (std::size_t i = 0; i < c.h.size(); ++i) h += (i ? "," : "") + std::to_string(c.h[i]);
    s += pad("{" + index_set_to_string(c.canonical_index) + "}", 13) + pad(std::to_string(c.facet_count), 8) +
         pad("(" + h + ")", 21) + pad("{" + index_set_to_string(c.complement_class) + "}", 13) +
         (c.sufficient ? "yes" : "no") + "\n";
  }
  return s;
}

bool same_up_to_locus(const Complex& ambient, const Complex& x, const Complex& y) {
  IsoOptions opts;
  const auto common = face_intersection(face_intersection(ambient.vertices(), x.vertices()), y.vertices());
  for (const auto& v : common) opts.fixed[v] = v;
  return are_isomorphic(x, y, opts).has_value();
}

bool verify_reducibility_composition(int d, const IndexSet& I_in, const Complex& ambient, const CrossFlip& site,
                                     std::string* detail) {
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  IndexSet I = I_in;
  std::sort(I.begin(), I.end());
  if (I.empty() || I.front() < 0 || I.back() >= d) return fail("I must be a nonempty subset of {0,...,d-1}");
  if (site.d != d || site.index != I) return fail("site does not embed ⋄(Γ_I)");
  try {
    const Complex direct = apply_cross_flip(ambient, site).complex;
    const VertexMap& phi = site.embedding;
    const VertexMap rho = rho_map(d), sigma = sigma_map(d);

    const IndexSet j1 = shift_index_set(I, 1);
    const Complex p1 = diamond_closed_form(d, j1);
    CrossFlip first{d, j1, {}};
    for (const auto& u : p1.vertices()) first.embedding[u] = phi.at(rho.at(u));
    const auto r1 = apply_cross_flip(ambient, first);

    IndexSet j2 = j1;
    j2.insert(j2.begin(), 0);
    const Complex p2 = diamond_closed_form(d, j2);
    const auto p1v = p1.vertices();
    CrossFlip second{d, j2, {}};
    // The copy of ⋄(Γ_{I+1}) left untouched is reached through σ; the rest of
    // the pattern sits in the part glued in by the first flip.
    for (const auto& u : p2.vertices())
      second.embedding[u] = face_contains(p1v, u) ? phi.at(sigma.at(u)) : r1.extended.at(u);
    const auto r2 = apply_cross_flip(r1.complex, second);

    if (!same_up_to_locus(ambient, r2.complex, direct))
      return fail("composition differs from the direct flip");
    if (detail) *detail = "ok";
    return true;
  } catch (const Error& e) {
    return fail(e.what());
  }
}

bool verify_pentagon_composition(const Complex& ambient, const CrossFlip& site, bool reverse, std::string* detail) {
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  const IndexSet expected = reverse ? IndexSet{0, 2} : IndexSet{1, 2};
  if (site.d != 2 || site.index != expected) return fail("site must embed ⋄(Γ_{" + index_set_to_string(expected) + "}) at d = 2");
  try {
    const Complex direct = apply_cross_flip(ambient, site).complex;
    const Complex image = cross_flip_image(site);
    std::set<Face> untouched;
    for (const auto& f : ambient.facets())
      if (!image.has_facet(f)) untouched.insert(f);

    std::vector<std::pair<IndexSet, int>> budget =
        reverse ? std::vector<std::pair<IndexSet, int>>{{{1, 2}, 2}, {{0, 1, 2}, 1}}
                : std::vector<std::pair<IndexSet, int>>{{{2}, 1}, {{0, 2}, 2}};
    std::vector<std::string> trail;
    std::function<bool(const Complex&, int)> search = [&](const Complex& cur, int left) -> bool {
      if (left == 0) return same_up_to_locus(ambient, cur, direct);
      for (auto& [I, n] : budget) {
        if (n == 0) continue;
        for (const auto& emb : find_all_cross_flip_embeddings(cur, I)) {
          const Complex img = cross_flip_image(emb);
          bool local = true;
          for (const auto& f : img.facets())
            if (untouched.count(f)) local = false;
          if (!local) continue;
          --n;
          trail.push_back("{" + index_set_to_string(I) + "}");
          const bool ok = search(apply_cross_flip(cur, emb).complex, left - 1);
          ++n;
          if (ok) return true;
          trail.pop_back();
        }
      }
      return false;
    };
    if (!search(ambient, 3)) return fail("no composition within the locus reproduces the direct flip");
    if (detail) {
      *detail = "composition";
      for (const auto& t : trail) *detail += " " + t;
    }
    return true;
  } catch (const Error& e) {
    return fail(e.what());
  }
}

AmbientSite default_ambient(int d, const IndexSet& I) {
  std::vector<std::pair<std::string, ColoredComplex>> candidates;
  {
    const Complex cp = cross_polytope(d);
    candidates.push_back({"cross-polytope", {cp, index_coloring(cp)}});
  }
  for (int copies = 2; copies <= 3; ++copies) {
    auto s = stacked_cross_sphere_with_shelling(copies, d);
    candidates.push_back({"stacked-" + std::to_string(copies), {s.complex, s.coloring}});
  }
  if (d <= 3) candidates.push_back({"barycentric", barycentric_sphere(d)});
  {
    // D glued to a copy of itself along ∂D; interior vertices of the copy are fresh.
    const Complex dc = diamond_closed_form(d, I);
    const auto bv = boundary_complex(dc).vertices();
    VertexMap copy;
    int k = 0;
    for (const auto& v : dc.vertices()) copy[v] = face_contains(bv, v) ? v : Vertex::fresh(k++);
    const Complex dbl = complex_union(dc, map_complex(dc, copy));
    Coloring kappa;
    kappa.num_colors = d + 1;
    for (const auto& [v, w] : copy) kappa.color[v] = kappa.color[w] = v.index();
    candidates.push_back({"double", {dbl, kappa}});
    // Last resort: D ∪ (apex ∗ ∂D). D is always induced; the apex breaks balance.
    std::vector<Face> fs = dc.facets();
    const Vertex apex = Vertex::fresh(k);
    const Complex bd = boundary_complex(dc);
    for (const auto& r : bd.facets()) fs.push_back(face_union(r, Face{apex}));
    Coloring cone_kappa;
    cone_kappa.num_colors = d + 1;
    for (const auto& v : dc.vertices()) cone_kappa.color[v] = v.index();
    cone_kappa.color[apex] = 0;
    candidates.push_back({"cone", {Complex::generated_by(std::move(fs)), cone_kappa}});
  }
  for (auto& [name, cc] : candidates) {
    auto sites = find_cross_flip_sites(cc.complex, cc.coloring, I);
    if (!sites.empty()) return AmbientSite{cc.complex, cc.coloring, sites.front(), name};
  }
  throw Error(ErrorKind::NotApplicable, "no default ambient contains ⋄(Γ_{" + index_set_to_string(I) + "}) induced");
}

BasisFamily printed_basis_family() {
  const IndexSet a{1}, b{2}, c{0, 1}, e{0, 1, 2}, f{0, 2}, g{1, 2};
  return {{a, c, f}, {a, c, g}, {a, e, f}, {a, e, g}, {b, c, f}, {b, c, g}, {b, e, f}, {b, e, g}};
}

MatroidReport check_matroid_bases(const BasisFamily& family_in) {
  MatroidReport rep;
  std::set<std::set<IndexSet>> family;
  std::set<IndexSet> ground;
  for (const auto& b : family_in) {
    std::set<IndexSet> s(b.begin(), b.end());
    ground.insert(s.begin(), s.end());
    family.insert(std::move(s));
  }
  rep.ground_size = static_cast<int>(ground.size());
  rep.rank = family.empty() ? 0 : static_cast<int>(family.begin()->size());
  rep.exchange_ok = !family.empty();
  for (const auto& b1 : family)
    for (const auto& b2 : family)
      for (const auto& x : b1) {
        if (b2.count(x)) continue;
        bool found = false;
        for (const auto& y : b2) {
          if (b1.count(y)) continue;
          auto t = b1;
          t.erase(x);
          t.insert(y);
          if (family.count(t)) {
            found = true;
            break;
          }
        }
        if (!found) rep.exchange_ok = false;
      }

  auto interchangeable = [&](const IndexSet& x, const IndexSet& y) {
    for (const auto& b : family) {
      if (b.count(x) && b.count(y)) return false;
      for (const auto& [p, q] : {std::pair{x, y}, std::pair{y, x}})
        if (b.count(p)) {
          auto t = b;
          t.erase(p);
          t.insert(q);
          if (!family.count(t)) return false;
        }
    }
    return true;
  };
  std::set<IndexSet> placed;
  for (const auto& x : ground) {
    if (placed.count(x)) continue;
    std::vector<IndexSet> cls{x};
    placed.insert(x);
    for (const auto& y : ground)
      if (!placed.count(y) && interchangeable(x, y)) {
        cls.push_back(y);
        placed.insert(y);
      }
    rep.parallel_classes.push_back(std::move(cls));
  }
  std::size_t product = 1;
  bool pairs = static_cast<int>(rep.parallel_classes.size()) == rep.rank;
  for (const auto& cls : rep.parallel_classes) {
    product *= cls.size();
    if (cls.size() != 2) pairs = false;
  }
  bool one_each = true;
  for (const auto& b : family)
    for (const auto& cls : rep.parallel_classes) {
      int hits = 0;
      for (const auto& x : cls) hits += static_cast<int>(b.count(x));
      if (hits != 1) one_each = false;
    }
  rep.is_sum_of_rank_one_uniform = pairs && one_each && product == family.size();
  return rep;
}

StackedSphere stacked_cross_sphere_with_shelling(int copies, int d) {
  if (copies < 1 || d < 0) throw Error(ErrorKind::BadParams, "copies >= 1 and d >= 0 required");
  StackedSphere s;
  s.complex = cross_polytope(d);
  s.coloring = index_coloring(s.complex);
  IndexSet all;
  for (int i = 0; i <= d + 1; ++i) all.push_back(i);
  s.shelling = absolute_shelling_order(d, all).order;
  IndexSet rest;
  for (int i = 0; i < d; ++i) rest.push_back(i);
  rest.push_back(d + 1);
  const auto rest_order = absolute_shelling_order(d, rest).order;
  for (int k = 1; k < copies; ++k) {
    // Flip the last facet of the current shelling; its complement is then
    // shelled in reverse, which keeps the tracked order a shelling.
    const Face last = s.shelling.back();
    std::vector<Vertex> by_color(d + 1);
    for (const auto& v : last) by_color.at(s.coloring.at(v)) = v;
    CrossFlip flip{d, {d}, {}};
    for (const auto& u : pattern_anchor(d, {d})) flip.embedding[u] = by_color.at(u.index());
    auto res = apply_cross_flip(s.complex, flip, s.coloring);
    s.complex = std::move(res.complex);
    s.coloring = std::move(*res.coloring);
    s.shelling.pop_back();
    for (auto it = rest_order.rbegin(); it != rest_order.rend(); ++it) s.shelling.push_back(map_face(*it, res.extended));
  }
  return s;
}

Complex stacked_cross_sphere(int copies, int d) { return stacked_cross_sphere_with_shelling(copies, d).complex; }

ColoredComplex barycentric_sphere(int d) {
  if (d > 3) throw Error(ErrorKind::DimensionCapExceeded, "barycentric sphere is built for d <= 3");
  if (d < 0) throw Error(ErrorKind::BadParams, "d must be >= 0");
  std::vector<int> perm(d + 2);
  for (int i = 0; i <= d + 1; ++i) perm[i] = i;
  std::vector<Face> fs;
  ColoredComplex out;
  do {
    Face f;
    for (int k = 1; k <= d + 1; ++k) {
      std::vector<int> s(perm.begin(), perm.begin() + k);
      std::sort(s.begin(), s.end());
      std::string name = "f";
      for (int x : s) name += std::to_string(x);
      const Vertex v = Vertex::named(name);
      out.coloring.color[v] = k - 1;
      f.push_back(v);
    }
    fs.push_back(make_face(std::move(f)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.complex = Complex::generated_by(std::move(fs));
  out.coloring.num_colors = d + 1;
  return out;
}

}  // namespace balflip
