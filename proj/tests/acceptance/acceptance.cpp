// One PASS/FAIL line per acceptance criterion. `balflip_acceptance N` runs only criterion N.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "../oracle.hpp"
#include "balflip/catalog.hpp"
#include "balflip/coloring.hpp"
#include "balflip/diamond.hpp"
#include "balflip/errors.hpp"
#include "balflip/io.hpp"
#include "balflip/isomorphism.hpp"
#include "balflip/manifold.hpp"
#include "balflip/moves.hpp"
#include "balflip/shelling.hpp"
#include "balflip/verify.hpp"
#include "balflip_cli/commands.hpp"

using namespace balflip;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<IndexSet> index_sets(int d, bool include_full) {
  std::vector<IndexSet> out;
  for (unsigned mask = 1; mask < (1u << (d + 2)); ++mask) {
    IndexSet I;
    for (int i = 0; i <= d + 1; ++i)
      if (mask & (1u << i)) I.push_back(i);
    if (include_full || static_cast<int>(I.size()) < d + 2) out.push_back(I);
  }
  return out;
}

std::string set_str(const IndexSet& I) { return "{" + index_set_to_string(I) + "}"; }

Outcome catalog_count() {
  Outcome o;
  for (int d = 1; d <= 6; ++d) {
    const auto classes = enumerate_basic_flips(d);
    if (classes.size() != (std::size_t{1} << (d + 1)) - 1) o.fail("d=" + std::to_string(d) + " count " + std::to_string(classes.size()));
    if (d > 3) continue;
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        const auto a = diamond_closed_form(d, classes[i].canonical_index);
        const auto b = diamond_closed_form(d, classes[j].canonical_index);
        if (oracle::isomorphic(a, b) || are_isomorphic(a, b))
          o.fail("d=" + std::to_string(d) + " " + set_str(classes[i].canonical_index) + " ≅ " + set_str(classes[j].canonical_index));
      }
  }
  o.detail = o.pass ? "2^{d+1}-1 classes for d=1..6, pairwise non-isomorphic for d<=3" : o.detail;
  return o;
}

Outcome facet_count_law() {
  Outcome o;
  for (int d = 1; d <= 5; ++d)
    for (int l = 0; l <= d + 1; ++l) {
      const std::size_t want = l == d + 1 ? 1 : std::size_t{1} << (d - l);
      if (diamond_closed_form(d, {l}).num_facets() != want || diamond(gamma(d, {l}), d).num_facets() != want)
        o.fail("d=" + std::to_string(d) + " l=" + std::to_string(l));
    }
  if (o.pass) o.detail = "f_d = 2^{d-l}, and 1 for l=d+1, d<=5";
  return o;
}

Outcome closed_form_vs_recursion() {
  Outcome o;
  int n = 0;
  for (int d = 1; d <= 4; ++d)
    for (const auto& I : index_sets(d, true)) {
      ++n;
      if (diamond(gamma(d, I), d) != diamond_closed_form(d, I)) o.fail("d=" + std::to_string(d) + " I=" + set_str(I));
    }
  if (o.pass) o.detail = std::to_string(n) + " index sets, d<=4";
  return o;
}

Outcome h_vector_formula_check() {
  Outcome o;
  int n = 0;
  for (int d = 1; d <= 4; ++d)
    for (const auto& I : index_sets(d, true)) {
      ++n;
      const auto D = diamond_closed_form(d, I);
      const auto h = h_vector_formula(d, I);
      if (h != h_vector(D) || h != oracle::h_vector(D)) o.fail("d=" + std::to_string(d) + " I=" + set_str(I));
    }
  if (o.pass) o.detail = std::to_string(n) + " index sets, d<=4";
  return o;
}

Outcome complement_identity() {
  Outcome o;
  int n = 0;
  for (int d = 1; d <= 4; ++d) {
    const auto cp = cross_polytope(d);
    for (const auto& fc : enumerate_basic_flips(d)) {
      ++n;
      const auto D = diamond_closed_form(d, fc.canonical_index);
      const auto hd = oracle::h_vector(D);
      const auto hc = oracle::h_vector(delete_subcomplex(cp, D));
      for (int i = 0; i <= d + 1; ++i)
        if (hd[i] + hc[d + 1 - i] != oracle::choose(d + 1, i))
          o.fail("d=" + std::to_string(d) + " I=" + set_str(fc.canonical_index) + " i=" + std::to_string(i));
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " canonical classes, d<=4";
  return o;
}

Outcome shelling_theorems() {
  Outcome o;
  int absolute = 0, relative = 0;
  for (int d = 1; d <= 3; ++d)
    for (const auto& I : index_sets(d, true)) {
      const auto D = diamond_closed_form(d, I);
      const auto cert = absolute_shelling_order(d, I);
      ++absolute;
      const auto ref = oracle::check_shelling(cert.order);
      if (!is_shelling(D, cert.order).ok || !ref.ok || ref.restrictions != cert.restrictions)
        o.fail("absolute d=" + std::to_string(d) + " I=" + set_str(I));
      if (static_cast<int>(I.size()) == d + 2) continue;
      const auto bd = boundary_complex(D);
      for (int i1 : I) {
        std::vector<int> seq{i1};
        for (int x : I)
          if (x != i1) seq.push_back(x);
        const auto first = diamond_closed_form(d, {i1});
        for (const auto& f : bd.facets()) {
          bool admissible = false;
          for (const auto& g : first.facets()) admissible = admissible || is_subset(f, g);
          if (!admissible) continue;
          ++relative;
          const auto rc = cone_ambient(d, I, f);
          // D induced in the ambient and meeting its boundary in exactly F.
          const auto amb_bd = oracle::all_faces(boundary_complex(rc.ambient));
          std::set<Face> meet;
          for (const auto& s : oracle::all_faces(D))
            if (amb_bd.count(s)) meet.insert(s);
          if (!oracle::induced(rc.ambient, D) || meet != oracle::all_faces(std::vector<Face>{f})) {
            o.fail("ambient precondition d=" + std::to_string(d) + " I=" + set_str(I));
            continue;
          }
          const auto rcert = relative_shelling_order(d, seq, f);
          const auto lib = is_relative_shelling(rc, rcert.order);
          const auto chk = oracle::check_shelling(rcert.order, rc.removed.facets());
          if (!lib.ok || !chk.ok || chk.restrictions != rcert.restrictions)
            o.fail("relative d=" + std::to_string(d) + " seq starts " + std::to_string(i1) + " I=" + set_str(I) +
                   " F=" + face_to_string(f));
        }
      }
    }
  if (o.pass) o.detail = std::to_string(absolute) + " absolute and " + std::to_string(relative) + " relative orders, d<=3";
  return o;
}

Outcome h_from_shelling_check() {
  Outcome o;
  for (int d = 1; d <= 4; ++d) {
    const auto cp = cross_polytope(d);
    const auto order = absolute_shelling_order(d, [&] {
      IndexSet all;
      for (int i = 0; i <= d + 1; ++i) all.push_back(i);
      return all;
    }());
    const auto h = h_from_shelling(cp, order.order);
    for (int i = 0; i <= d + 1; ++i)
      if (h[i] != oracle::choose(d + 1, i)) o.fail("cross-polytope d=" + std::to_string(d));
  }
  for (int d = 1; d <= 3; ++d)
    for (const auto& I : index_sets(d, true)) {
      const auto D = diamond_closed_form(d, I);
      if (h_from_shelling(D, absolute_shelling_order(d, I).order) != oracle::h_vector(D))
        o.fail("diamond d=" + std::to_string(d) + " I=" + set_str(I));
    }
  std::mt19937 rng(20240611);
  int made = 0;
  while (made < 50) {
    const auto order = oracle::random_shellable_2complex(rng, 7 + made % 4, 4 + made % 9);
    if (order.size() < 2) continue;
    ++made;
    const auto c = Complex::from_facets(order);
    const auto h = h_from_shelling(c, order);
    if (h != oracle::h_vector(c) || h != h_vector(c)) o.fail("random complex " + std::to_string(made));
  }
  if (o.pass) o.detail = "cross-polytopes d<=4, all diamonds d<=3, 50 random shellable 2-complexes";
  return o;
}

Outcome reducibility() {
  Outcome o;
  int n = 0;
  for (int d = 2; d <= 3; ++d)
    for (const auto& I : nonempty_subsets(d)) {
      ++n;
      const auto amb = default_ambient(d, I);
      std::string why;
      if (!verify_reducibility_composition(d, I, amb.ambient, amb.site, &why))
        o.fail("d=" + std::to_string(d) + " I=" + set_str(I) + " on " + amb.source + ": " + why);
    }
  std::string pent;
  for (bool reverse : {false, true}) {
    const auto amb = default_ambient(2, reverse ? IndexSet{0, 2} : IndexSet{1, 2});
    std::string why;
    if (!verify_pentagon_composition(amb.ambient, amb.site, reverse, &why))
      o.fail(std::string(reverse ? "reverse" : "forward") + " pentagon on " + amb.source + ": " + why);
    pent += std::string(reverse ? "; reverse " : "forward ") + why;
  }
  if (o.pass) o.detail = std::to_string(n) + " reductions at d=2,3; pentagon " + pent;
  return o;
}

Outcome stacked_spheres() {
  Outcome o;
  for (int d = 1; d <= 3; ++d)
    for (int c = 1; c <= 4; ++c) {
      const auto s = stacked_cross_sphere_with_shelling(c, d);
      const auto direct = oracle::h_vector(s.complex);
      const auto shelled = h_from_shelling(s.complex, s.shelling);
      const bool ends = direct.front() == 1 && direct.back() == 1;
      bool interior = true;
      for (int i = 1; i <= d; ++i)
        interior = interior && direct[i] == c * oracle::choose(d + 1, i) && shelled[i] == direct[i];
      if (!ends || !interior || s.complex != stacked_cross_sphere(c, d))
        o.fail("copies=" + std::to_string(c) + " d=" + std::to_string(d));
    }
  if (o.pass) o.detail = "h_i = c*binom(d+1,i) from the complex and from its shelling, c<=4, d<=3";
  return o;
}

Outcome walk_invariants() {
  Outcome o;
  cli::WalkConfig cfg;
  cfg.steps = 500;
  cfg.seed = 1;
  cfg.d = 2;
  int checked = 0;
  cfg.on_step = [&](int step, const ComplexFile& f) {
    ++checked;
    const auto& c = f.complex;
    if (!f.coloring || !oracle::proper_coloring(c, *f.coloring)) o.fail("step " + std::to_string(step) + ": coloring");
    if (is_combinatorial_manifold(c) != ManifoldVerdict::Closed || !oracle::closed_surface(c))
      o.fail("step " + std::to_string(step) + ": not a closed 2-manifold");
    std::set<Face> edges;
    for (const auto& g : c.facets())
      for (std::size_t i = 0; i < 3; ++i) edges.insert(Face{g[i], g[(i + 1) % 3]} < Face{g[(i + 1) % 3], g[i]}
                                                           ? Face{g[i], g[(i + 1) % 3]}
                                                           : Face{g[(i + 1) % 3], g[i]});
    const long long chi = static_cast<long long>(c.vertices().size()) - static_cast<long long>(edges.size()) +
                          static_cast<long long>(c.num_facets());
    if (chi != 2 || euler_characteristic(c) != 2) o.fail("step " + std::to_string(step) + ": euler " + std::to_string(chi));
  };
  const auto w = cli::run_walk(cfg);
  if (checked != 501) o.fail("visited " + std::to_string(checked) + " states");
  if (o.pass)
    o.detail = "500 steps from the octahedron, final size " + std::to_string(w.rows.back().facets) + " facets";
  return o;
}

Outcome matroid() {
  Outcome o;
  const auto family = printed_basis_family();
  const auto rep = check_matroid_bases(family);
  std::vector<std::set<IndexSet>> sets;
  for (const auto& b : family) sets.emplace_back(b.begin(), b.end());
  if (!rep.exchange_ok || !oracle::basis_exchange(sets)) o.fail("basis exchange fails");
  if (o.pass) o.detail = "8 bases, rank " + std::to_string(rep.rank) + " on " + std::to_string(rep.ground_size) + " elements";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  const auto ball = parse_complex_json(read_text_file(BALFLIP_FIXTURES "/nonshelling_ball.json")).complex;
  const auto cert = parse_certificate_json(read_text_file(BALFLIP_FIXTURES "/nonshelling_order.json"));
  const auto v = is_relative_shelling(RelativeComplex::make(ball, *cert.removed), cert.certificate.order);
  if (v.ok || !v.failing_index || cert.labels.at(*v.failing_index) != "6") o.fail("fixture not rejected at facet 6");

  // A facet that meets the boundary of a ball in an edge and an isolated vertex.
  const auto fan = Complex::from_facets({parse_face("x,p,q"), parse_face("x,p,a"), parse_face("x,q,b")});
  const Face f = parse_face("p,q,x");
  int reached_three = 0;
  for (unsigned mask = 1; mask < 7; ++mask) {
    Face a, r;
    for (unsigned i = 0; i < 3; ++i) ((mask >> i) & 1 ? a : r).push_back(f[i]);
    try {
      shelling_move(fan, {f, a, r});
      o.fail("xpq removal accepted with A=" + face_to_string(a));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ConditionViolated) o.fail(std::string("wrong error: ") + e.what());
      reached_three += e.condition() == 3;
    }
  }
  if (reached_three != 2) o.fail("interior splits of xpq did not fail at condition 3");

  const auto two = Complex::from_facets({parse_face("a,b,c"), parse_face("b,c,d")});
  Coloring k;
  k.num_colors = 3;
  k.color = {{Vertex::named("a"), 0}, {Vertex::named("b"), 1}, {Vertex::named("c"), 2}, {Vertex::named("d"), 0}};
  if (preserves_balancedness_inverse(two, k, {parse_face("a,b,d"), parse_face("b"), parse_face("a,d")}))
    o.fail("monochromatic edge a-d accepted");
  if (!preserves_balancedness_inverse(Complex::from_facets({parse_face("a,b,c")}), k,
                                      {parse_face("b,c,d"), parse_face("b,c"), parse_face("d")}))
    o.fail("a color-respecting inverse shelling was rejected");
  if (o.pass) o.detail = "fixture rejected at facet 6; edge-plus-vertex removal fails condition 3; monochromatic inverse shelling rejected";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no stated limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "catalog count", 10, catalog_count},
      {2, "facet-count law", 0, facet_count_law},
      {3, "closed form vs recursion", 30, closed_form_vs_recursion},
      {4, "h-vector formula", 0, h_vector_formula_check},
      {5, "complement identity", 0, complement_identity},
      {6, "shelling theorems", 60, shelling_theorems},
      {7, "h from shelling", 0, h_from_shelling_check},
      {8, "reducibility", 120, reducibility},
      {9, "stacked spheres", 0, stacked_spheres},
      {10, "balancedness preservation", 60, walk_invariants},
      {11, "matroid check", 0, matroid},
      {12, "negative controls", 0, negative_controls},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      std::ostringstream why;
      why << "took " << secs << " s, limit " << c.limit_seconds << " s";
      o.fail(why.str());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << " (" << timing << ")\n";
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
