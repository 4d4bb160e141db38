#pragma once

#include <string>
#include <vector>

#include "balflip/diamond.hpp"
#include "balflip/shelling.hpp"

namespace balflip {

struct VerifyReport {
  bool pass = false;
  std::string summary;
  std::string counterexample;  // empty on pass
};

// Targets: count, hvector, complement, shelling-theorem, reducibility,
// pentagon, matroid. Throws BadParams for unknown targets and
// DimensionCapExceeded past the per-target caps.
VerifyReport run_verification(const std::string& target, int d);
std::vector<std::string> verification_targets();

// D = ⋄(Γ_I) plus a cone from a fresh apex over ∂D with the cone facet over
// boundary_face left out. D is induced and meets the boundary in
// ⟨boundary_face⟩; the removed part is everything outside D.
RelativeComplex cone_ambient(int d, const IndexSet& I, const Face& boundary_face);

// All nonempty subsets of {0,...,n-1}, in increasing bitmask order.
std::vector<IndexSet> nonempty_subsets(int n);

}  // namespace balflip
