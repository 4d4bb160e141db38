#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "balflip/complex.hpp"

namespace balflip {

// A complex together with a subcomplex whose faces count as already present.
struct RelativeComplex {
  Complex ambient;
  Complex removed;

  // Throws NotSubcomplex unless every face of removed lies in ambient.
  static RelativeComplex make(Complex ambient, Complex removed);
};

struct ShellingVerdict {
  bool ok = false;
  std::optional<std::size_t> failing_index;
  // The antichain of minimal new faces at the failing position.
  std::vector<Face> minimal_new_faces;
  // Restriction face of every accepted position.
  std::vector<Face> restrictions;
};

// Order must list the facets of c exactly once; throws NotAPermutation.
ShellingVerdict is_shelling(const Complex& c, const std::vector<Face>& order);
// Order must list the facets of the ambient that are not faces of removed.
ShellingVerdict is_relative_shelling(const RelativeComplex& rc, const std::vector<Face>& order);

constexpr std::size_t kDefaultShellingBudget = 24;

// Exhaustive search over placed-facet sets. Throws BudgetExceeded when c has
// more facets than the budget allows.
std::optional<std::vector<Face>> find_shelling(const Complex& c, std::size_t budget = kDefaultShellingBudget);
bool is_shellable(const Complex& c, std::size_t budget = kDefaultShellingBudget);
// Whether 𝒞_d ∖ D is shellable.
bool is_co_shellable_in_crosspolytope(const Complex& d_complex, int d,
                                      std::size_t budget = kDefaultShellingBudget);

// Restriction-size histogram h_0..h_{d+1}; throws NotAShelling.
std::vector<long long> h_from_shelling(const Complex& c, const std::vector<Face>& order);

}  // namespace balflip
