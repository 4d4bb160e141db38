#pragma once

#include <optional>
#include <vector>

#include "balflip/certificate.hpp"
#include "balflip/complex.hpp"
#include "balflip/isomorphism.hpp"

namespace balflip {

// Index sets are sorted vectors of distinct integers in {0, ..., d+1}.
using IndexSet = std::vector<int>;

std::string index_set_to_string(const IndexSet& I);  // "0,2"
IndexSet parse_index_set(std::string_view comma_list);

// 𝒞_d on Base(i)/Sub(i), i = 0..d.
Complex cross_polytope(int d);
// ∂σ^{d+1} on Base(0..d+1).
Complex simplex_boundary(int d);
// ⟨Γ_i : i ∈ I⟩ where Γ_i omits vertex i. Throws EmptyIndexSet.
Complex gamma(int d, const IndexSet& I);

// Iterated stellar subdivision of c ⊆ ∂σ^{d+1} at F_i = {i+1,...,d+1},
// introducing Sub(i). Throws NotSubcomplexOfSimplexBoundary.
Complex diamond(const Complex& c, int d);
// Union over i ∈ I of ⟨{0,...,i-1,v_i}⟩ ∗ 𝒞(i+1,...,d), and ⟨{0,...,d}⟩ for i = d+1.
Complex diamond_closed_form(int d, const IndexSet& I);

// Rewrites the trailing run {ℓ+1,...,d+1} ⊆ I to {ℓ}. The full set
// {0,...,d+1} has no such representative and is returned unchanged.
IndexSet canonicalize(int d, const IndexSet& I);
IndexSet complement_index(int d, const IndexSet& I);

// A facet of ⋄(Γ_ell): {0,...,ell-1, v_ell} plus a Base/Sub choice for each
// position ell+1..d. ell = d+1 stands for {0,...,d}.
struct DiamondFacet {
  int d = 0;
  int ell = 0;
  std::vector<bool> sub;  // sub[j] chooses v_{ell+1+j}

  Face expand() const;
  static DiamondFacet from_face(int d, const Face& f);  // throws BadParams
  friend bool operator==(const DiamondFacet&, const DiamondFacet&) = default;
};

struct CharVector {
  std::vector<int> bits;
  int degree = 0;
};

// bit j = 0 iff base and g agree at position ell+1+j. Throws MismatchedGamma.
CharVector char_vector(const DiamondFacet& base, const DiamondFacet& g);
// Degree first, then the bit vectors lexicographically with 0 < 1.
bool deg_lex_less(const DiamondFacet& base, const DiamondFacet& a, const DiamondFacet& b);
// All facets of ⋄(Γ_ell) in degree-lex order from base.
std::vector<DiamondFacet> deg_lex_order(const DiamondFacet& base);

// sequence = (i_1; i_2 < ... < i_k); ell is 1-based. For ell = 1 the hint
// must be a facet of ⋄(Γ_{i_1}) and is returned as is.
DiamondFacet initial_facet(int d, const std::vector<int>& sequence, int ell,
                           const std::optional<Face>& hint);

// Shelling of (Δ, Δ∖⋄(Γ)) for any Δ containing ⋄(Γ) induced with
// ⋄(Γ) ∩ ∂Δ = ⟨boundary_face⟩. Blocks run k,...,1, each reversed.
ShellingCertificate relative_shelling_order(int d, const std::vector<int>& sequence,
                                            const Face& boundary_face);
// Shelling of ⋄(Γ_I) with blocks ascending, each in degree-lex order.
ShellingCertificate absolute_shelling_order(int d, const IndexSet& I);

// h_ℓ = Σ_j C(d - i_j, ℓ - j + 1).
std::vector<long long> h_vector_formula(int d, const IndexSet& I);

struct RhoSigmaDecomposition {
  Complex rho_part;    // ρ(⋄(Γ_{I+1})), the facets through d
  Complex sigma_part;  // σ(⋄(Γ_{I+1})), the facets through v_d
  Complex intersection;
  VertexMap rho;
  VertexMap sigma;
};
// Requires d ∉ I ⊆ {0,...,d}.
RhoSigmaDecomposition decompose_rho_sigma(int d, const IndexSet& I);

struct ZeroDecomposition {
  Complex rest;       // ⋄(Γ_{I∖{0}})
  Complex zero_part;  // ⋄(Γ_0)
  Complex intersection;
  VertexMap pi;       // i -> i+1, v_i -> v_{i+1} on dimension d-1 labels
};
// Requires 0 ∈ I ⊆ {0,...,d}.
ZeroDecomposition decompose_zero(int d, const IndexSet& I);

// ρ: i -> i-1, v_i -> v_{i-1} modulo d+1; ψ swaps d and v_d.
VertexMap rho_map(int d);
VertexMap sigma_map(int d);
IndexSet shift_index_set(const IndexSet& I, int by);

}  // namespace balflip
