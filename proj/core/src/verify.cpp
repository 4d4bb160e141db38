#include "balflip/verify.hpp"

#include <set>

#include "balflip/catalog.hpp"
#include "balflip/errors.hpp"
#include "balflip/isomorphism.hpp"

namespace balflip {

std::vector<IndexSet> nonempty_subsets(int n) {
  std::vector<IndexSet> out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    IndexSet I;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) I.push_back(i);
    out.push_back(std::move(I));
  }
  return out;
}

std::vector<std::string> verification_targets() {
  return {"count", "hvector", "complement", "shelling-theorem", "reducibility", "pentagon", "matroid"};
}

RelativeComplex cone_ambient(int d, const IndexSet& I, const Face& boundary_face) {
  const Complex dc = diamond_closed_form(d, I);
  const Vertex apex = Vertex::fresh(0);
  const Face skip = face_union(boundary_face, Face{apex});
  std::vector<Face> cone;
  const Complex bd = boundary_complex(dc);
  for (const auto& r : bd.facets()) {
    Face g = face_union(r, Face{apex});
    if (g != skip) cone.push_back(std::move(g));
  }
  std::vector<Face> all = dc.facets();
  all.insert(all.end(), cone.begin(), cone.end());
  return RelativeComplex::make(Complex::generated_by(std::move(all)), Complex::generated_by(std::move(cone)));
}

namespace {

void cap(int d, int lo, int hi) {
  if (d < lo) throw Error(ErrorKind::BadParams, "d must be at least " + std::to_string(lo));
  if (d > hi) throw Error(ErrorKind::DimensionCapExceeded, "d = " + std::to_string(d) + " exceeds " + std::to_string(hi));
}

std::string seq_string(const std::vector<int>& seq) {
  std::string s = "(" + std::to_string(seq[0]) + ";";
  for (std::size_t i = 1; i < seq.size(); ++i) s += (i > 1 ? "," : "") + std::to_string(seq[i]);
  return s + ")";
}

VerifyReport verify_count(int d) {
  cap(d, 1, kDefaultDimensionCap);
  const auto classes = enumerate_basic_flips(d);
  const std::size_t want = (std::size_t{1} << (d + 1)) - 1;
  VerifyReport r;
  std::set<long long> counts;
  int sufficient = 0;
  for (const auto& c : classes) {
    counts.insert(c.facet_count);
    sufficient += c.sufficient;
  }
  if (classes.size() != want || counts.size() != want) {
    r.counterexample = "classes=" + std::to_string(classes.size()) + " distinct facet counts=" + std::to_string(counts.size());
  } else if (sufficient != (1 << d)) {
    r.counterexample = "sufficient classes=" + std::to_string(sufficient);
  } else if (d <= 3) {
    for (std::size_t a = 0; a < classes.size() && r.counterexample.empty(); ++a)
      for (std::size_t b = a + 1; b < classes.size(); ++b)
        if (are_isomorphic(diamond_closed_form(d, classes[a].canonical_index),
                           diamond_closed_form(d, classes[b].canonical_index))) {
          r.counterexample = "{" + index_set_to_string(classes[a].canonical_index) + "} ≅ {" +
                             index_set_to_string(classes[b].canonical_index) + "}";
          break;
        }
  }
  r.pass = r.counterexample.empty();
  r.summary = std::to_string(classes.size());
  return r;
}

VerifyReport verify_hvector(int d) {
  cap(d, 0, 5);
  VerifyReport r;
  int n = 0;
  for (const auto& I : nonempty_subsets(d + 2)) {
    ++n;
    if (h_vector_formula(d, I) != h_vector(diamond_closed_form(d, I))) {
      r.counterexample = "I={" + index_set_to_string(I) + "}";
      break;
    }
  }
  r.pass = r.counterexample.empty();
  r.summary = std::to_string(n) + " index sets";
  return r;
}

VerifyReport verify_complement(int d) {
  cap(d, 0, 5);
  VerifyReport r;
  const Complex cp = cross_polytope(d);
  int n = 0;
  for (const auto& I : nonempty_subsets(d + 1)) {
    ++n;
    const auto hd = h_vector(diamond_closed_form(d, I));
    const auto hc = h_vector(delete_subcomplex(cp, diamond_closed_form(d, I)));
    for (int i = 0; i <= d + 1; ++i)
      if (hd[i] + hc[d + 1 - i] != binomial(d + 1, i)) {
        r.counterexample = "I={" + index_set_to_string(I) + "} i=" + std::to_string(i);
        break;
      }
    if (!r.counterexample.empty()) break;
  }
  r.pass = r.counterexample.empty();
  r.summary = std::to_string(n) + " canonical index sets";
  return r;
}

VerifyReport verify_shelling_theorem(int d) {
  cap(d, 1, 3);
  VerifyReport r;
  int absolute = 0, relative = 0;
  for (const auto& I : nonempty_subsets(d + 2)) {
    const Complex dc = diamond_closed_form(d, I);
    const auto cert = absolute_shelling_order(d, I);
    const auto v = is_shelling(dc, cert.order);
    ++absolute;
    if (!v.ok || v.restrictions != cert.restrictions) {
      r.counterexample = "absolute I={" + index_set_to_string(I) + "}";
      break;
    }
    if (static_cast<int>(I.size()) == d + 2) continue;  // D would be the whole sphere
    const auto bd = boundary_complex(dc);
    for (int i1 : I) {
      std::vector<int> seq{i1};
      for (int x : I)
        if (x != i1) seq.push_back(x);
      const Complex first = diamond_closed_form(d, {i1});
      for (const auto& f : bd.facets()) {
        bool in_first = false;
        for (const auto& g : first.facets()) in_first = in_first || is_subset(f, g);
        if (!in_first) continue;
        const auto rc = cone_ambient(d, I, f);
        const auto rcert = relative_shelling_order(d, seq, f);
        const auto rv = is_relative_shelling(rc, rcert.order);
        ++relative;
        if (!rv.ok || rv.restrictions != rcert.restrictions) {
          r.counterexample = "relative " + seq_string(seq) + " F=" + face_to_string(f);
          break;
        }
      }
      if (!r.counterexample.empty()) break;
    }
    if (!r.counterexample.empty()) break;
  }
  r.pass = r.counterexample.empty();
  r.summary = std::to_string(absolute) + " absolute, " + std::to_string(relative) + " relative";
  return r;
}

VerifyReport verify_reducibility(int d) {
  cap(d, 1, 3);
  VerifyReport r;
  int n = 0;
  for (const auto& I : nonempty_subsets(d)) {
    ++n;
    const auto amb = default_ambient(d, I);
    std::string why;
    if (!verify_reducibility_composition(d, I, amb.ambient, amb.site, &why)) {
      r.counterexample = "I={" + index_set_to_string(I) + "} on " + amb.source + ": " + why;
      break;
    }
  }
  r.pass = r.counterexample.empty();
  r.summary = std::to_string(n) + " index sets";
  return r;
}

VerifyReport verify_pentagon(int d) {
  if (d != 2) throw Error(ErrorKind::BadParams, "the pentagon composition is stated for d = 2");
  VerifyReport r;
  for (bool reverse : {false, true}) {
    const IndexSet I = reverse ? IndexSet{0, 2} : IndexSet{1, 2};
    const auto amb = default_ambient(2, I);
    std::string why;
    if (!verify_pentagon_composition(amb.ambient, amb.site, reverse, &why)) {
      r.counterexample = std::string(reverse ? "reverse" : "forward") + " on " + amb.source + ": " + why;
      break;
    }
    r.summary += std::string(r.summary.empty() ? "" : "; ") + (reverse ? "reverse " : "forward ") + why;
  }
  r.pass = r.counterexample.empty();
  return r;
}

VerifyReport verify_matroid(int d) {
  if (d != 2) throw Error(ErrorKind::BadParams, "the basis family is given for d = 2");
  const auto rep = check_matroid_bases(printed_basis_family());
  VerifyReport r;
  r.pass = rep.exchange_ok && rep.rank == 3 && rep.ground_size == 6 && rep.is_sum_of_rank_one_uniform;
  r.summary = "rank " + std::to_string(rep.rank) + " on " + std::to_string(rep.ground_size) + " elements, " +
              std::to_string(rep.parallel_classes.size()) + " parallel classes";
  if (!r.pass) r.counterexample = rep.exchange_ok ? "unexpected structure" : "basis exchange fails";
  return r;
}

}  // namespace

VerifyReport run_verification(const std::string& target, int d) {
  if (target == "count") return verify_count(d);
  if (target == "hvector") return verify_hvector(d);
  if (target == "complement") return verify_complement(d);
  if (target == "shelling-theorem") return verify_shelling_theorem(d);
  if (target == "reducibility") return verify_reducibility(d);
  if (target == "pentagon") return verify_pentagon(d);
  if (target == "matroid") return verify_matroid(d);
  throw Error(ErrorKind::BadParams, "unknown verification target '" + target + "'");
}

}  // namespace balflip
