#pragma once

#include <memory>
#include <vector>

#include "balflip/vertex.hpp"

namespace balflip {

// A finite simplicial complex stored by its facets. Values are immutable;
// the per-dimension face cache is shared between copies and guarded.
//
// The empty complex (no faces) and the void complex {∅} are different
// values: the latter has the single facet ∅ and dimension -1.
class Complex {
 public:
  Complex();  // the empty complex

  // Facets must be pairwise incomparable; throws NotAntichain otherwise.
  static Complex from_facets(std::vector<Face> facets);
  // The complex generated by the given faces (keeps only maximal ones).
  static Complex generated_by(std::vector<Face> faces);
  static Complex simplex(const Face& f);  // ⟨f⟩
  static Complex void_complex();          // {∅}

  const std::vector<Face>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }
  bool is_empty() const { return facets_.empty(); }
  // -1 for {∅} and for the empty complex; use is_empty() to tell them apart.
  int dim() const { return dim_; }
  bool is_pure() const;
  bool contains(const Face& f) const;
  bool has_facet(const Face& f) const;
  std::vector<Vertex> vertices() const;
  // All faces with k+1 vertices, sorted. k = -1 gives {∅} unless empty.
  const std::vector<Face>& faces(int k) const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.facets_ == b.facets_; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

 private:
  struct Cache;
  std::vector<Face> facets_;
  int dim_ = -1;
  std::shared_ptr<Cache> cache_;
};

Complex link(const Complex& c, const Face& f);
Complex star(const Complex& c, const Face& f);
// {G ∈ c : f ⊄ G}
Complex delete_face(const Complex& c, const Face& f);
// Generated by the facets of c that are not facets of sub.
Complex delete_subcomplex(const Complex& c, const Complex& sub);
Complex join(const Complex& a, const Complex& b);
Complex complex_union(const Complex& a, const Complex& b);
// ∂⟨f⟩, i.e. all proper subsets of f.
Complex simplex_boundary_of(const Face& f);
Complex boundary_complex(const Complex& c);
bool is_subcomplex(const Complex& sub, const Complex& c);
bool is_induced(const Complex& c, const Complex& sub);
Complex induced_subcomplex(const Complex& c, const std::vector<Vertex>& vs);

// f_{-1}, ..., f_d.
std::vector<long long> f_vector(const Complex& c);
// h_0, ..., h_{d+1} with h_j = Σ_i (-1)^{j-i} C(d+1-i, j-i) f_{i-1}.
std::vector<long long> h_vector(const Complex& c);
long long euler_characteristic(const Complex& c);  // reduced by +1: Σ (-1)^i f_i, i ≥ 0
bool is_connected(const Complex& c);

long long binomial(int n, int k);

}  // namespace balflip
