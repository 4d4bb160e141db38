#pragma once

#include <string>
#include <vector>

#include "balflip/coloring.hpp"
#include "balflip/complex.hpp"
#include "balflip/diamond.hpp"
#include "balflip/moves.hpp"

namespace balflip {

constexpr int kDefaultDimensionCap = 6;

struct FlipClass {
  IndexSet canonical_index;
  long long facet_count = 0;  // Σ_{ℓ∈I} 2^{d-ℓ}
  std::vector<long long> h;
  IndexSet complement_class;
  bool sufficient = false;  // d ∈ I
};

// One class per nonempty I ⊆ {0,...,d}. Throws DimensionCapExceeded.
std::vector<FlipClass> enumerate_basic_flips(int d, int cap = kDefaultDimensionCap);
std::string catalog_to_json(int d, const std::vector<FlipClass>& classes);
std::string catalog_to_table(int d, const std::vector<FlipClass>& classes);

// True iff the two results agree up to an isomorphism fixing every vertex
// that both complexes inherited from the ambient.
bool same_up_to_locus(const Complex& ambient, const Complex& x, const Complex& y);

// Flips ρ(⋄(Γ_{I+1})), regroups, flips ⋄(Γ_{(I+1)∪{0}}) and compares with the
// direct flip of the site. I ⊆ {0,...,d-1}.
bool verify_reducibility_composition(int d, const IndexSet& I, const Complex& ambient, const CrossFlip& site,
                                     std::string* detail = nullptr);

// Forward: the site is ⋄(Γ_{1,2}) and the composition uses {2} once and
// {0,2} twice. Reverse: the site is ⋄(Γ_{0,2}) and the composition uses
// {1,2} twice and {0,1,2} once. d = 2.
bool verify_pentagon_composition(const Complex& ambient, const CrossFlip& site, bool reverse = false,
                                 std::string* detail = nullptr);

// An ambient sphere containing ⋄(Γ_I) induced, with a site. Tries 𝒞_d,
// stacked spheres, the barycentric sphere and the double of ⋄(Γ_I) along its
// boundary, all balanced. Falls back to ⋄(Γ_I) ∪ (apex ∗ ∂⋄(Γ_I)), which is
// not balanced; the apex gets color 0.
struct AmbientSite {
  Complex ambient;
  Coloring coloring;
  CrossFlip site;
  std::string source;
};
AmbientSite default_ambient(int d, const IndexSet& I);

using BasisFamily = std::vector<std::vector<IndexSet>>;
BasisFamily printed_basis_family();

struct MatroidReport {
  bool exchange_ok = false;
  int rank = 0;
  int ground_size = 0;
  // Classes of elements that never share a basis and are interchangeable.
  std::vector<std::vector<IndexSet>> parallel_classes;
  // Whether the family is exactly one pick from each class (U_{1,2} sums).
  bool is_sum_of_rank_one_uniform = false;
};
MatroidReport check_matroid_bases(const BasisFamily& family);

struct StackedSphere {
  Complex complex;
  Coloring coloring;
  std::vector<Face> shelling;  // tracked through the construction
};
StackedSphere stacked_cross_sphere_with_shelling(int copies, int d);
Complex stacked_cross_sphere(int copies, int d);

struct ColoredComplex {
  Complex complex;
  Coloring coloring;
};
// Barycentric subdivision of ∂σ^{d+1}, colored by face dimension; d <= 3.
ColoredComplex barycentric_sphere(int d);

}  // namespace balflip
