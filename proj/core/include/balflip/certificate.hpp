#pragma once

#include <vector>

#include "balflip/vertex.hpp"

namespace balflip {

// An ordered facet list with the restriction face claimed for each facet.
struct ShellingCertificate {
  std::vector<Face> order;
  std::vector<Face> restrictions;
  friend bool operator==(const ShellingCertificate&, const ShellingCertificate&) = default;
};

}  // namespace balflip
