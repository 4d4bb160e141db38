#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "balflip/complex.hpp"
#include "balflip/vertex.hpp"

inline balflip::Face F(const std::string& s) { return balflip::parse_face(s); }

inline balflip::Complex C(std::initializer_list<const char*> facets) {
  std::vector<balflip::Face> fs;
  for (const char* f : facets) fs.push_back(F(f));
  return balflip::Complex::from_facets(std::move(fs));
}

inline std::vector<long long> L(std::initializer_list<long long> xs) { return xs; }
