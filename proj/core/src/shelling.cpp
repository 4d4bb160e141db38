#include "balflip/shelling.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "balflip/diamond.hpp"
#include "balflip/errors.hpp"

namespace balflip {

namespace {

using Mask = std::uint32_t;

Mask mask_of(const Face& f, const Face& sub) {
  Mask m = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (face_contains(sub, f[i])) m |= Mask{1} << i;
  return m;
}

Face face_of(const Face& f, Mask m) {
  Face out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (m >> i & 1) out.push_back(f[i]);
  return out;
}

// Minimal subsets of F not below any of the given masks (masks are the
// intersections of F with faces already present).
std::vector<Mask> minimal_new(std::size_t size, const std::vector<Mask>& old_tops) {
  if (size > 20) throw Error(ErrorKind::BadParams, "facet too large for the shelling verifier");
  const Mask full = (Mask{1} << size) - 1;
  std::vector<char> old(std::size_t{1} << size, 0);
  for (Mask m : old_tops) old[m] = 1;
  for (Mask m = full + 1; m-- > 0;)
    if (old[m])
      for (std::size_t i = 0; i < size; ++i)
        if (m >> i & 1) old[m & ~(Mask{1} << i)] = 1;
  std::vector<Mask> out;
  for (Mask m = 0; m <= full; ++m) {
    if (old[m]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < size && minimal; ++i)
      if ((m >> i & 1) && !old[m & ~(Mask{1} << i)]) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

void check_permutation(const std::vector<Face>& expected, const std::vector<Face>& order) {
  std::vector<Face> a = expected, b = order;
  for (auto& f : b) f = make_face(f);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorKind::NotAPermutation, "order does not list the required facets exactly once");
}

ShellingVerdict verify(const std::vector<Face>& fixed, const std::vector<Face>& order) {
  ShellingVerdict v;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Face f = make_face(order[idx]);
    std::vector<Mask> tops;
    for (const auto& g : fixed) tops.push_back(mask_of(f, g));
    for (std::size_t j = 0; j < idx; ++j) tops.push_back(mask_of(f, order[j]));
    const auto mins = minimal_new(f.size(), tops);
    if (mins.size() != 1) {
      v.ok = false;
      v.failing_index = idx;
      for (Mask m : mins) v.minimal_new_faces.push_back(face_of(f, m));
      return v;
    }
    v.restrictions.push_back(face_of(f, mins.front()));
  }
  v.ok = true;
  return v;
}

}  // namespace

RelativeComplex RelativeComplex::make(Complex ambient, Complex removed) {
  if (!is_subcomplex(removed, ambient)) throw Error(ErrorKind::NotSubcomplex, "removed part must lie in the ambient");
  return RelativeComplex{std::move(ambient), std::move(removed)};
}

ShellingVerdict is_shelling(const Complex& c, const std::vector<Face>& order) {
  check_permutation(c.facets(), order);
  return verify({}, order);
}

ShellingVerdict is_relative_shelling(const RelativeComplex& rc, const std::vector<Face>& order) {
  std::vector<Face> expected;
  for (const auto& f : rc.ambient.facets())
    if (!rc.removed.contains(f)) expected.push_back(f);
  check_permutation(expected, order);
  return verify(rc.removed.facets(), order);
}

std::optional<std::vector<Face>> find_shelling(const Complex& c, std::size_t budget) {
  const std::size_t n = c.num_facets();
  if (n > budget || n > 31)
    throw Error(ErrorKind::BudgetExceeded, std::to_string(n) + " facets exceed the shelling budget of " +
                                               std::to_string(budget));
  if (n == 0) return std::vector<Face>{};
  const auto& fs = c.facets();
  std::vector<std::vector<Mask>> inter(n, std::vector<Mask>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inter[i][j] = mask_of(fs[i], fs[j]);

  std::unordered_set<std::uint32_t> dead;
  std::vector<std::size_t> order;
  auto step_ok = [&](std::uint32_t placed, std::size_t next) {
    if (placed == 0) return true;
    std::vector<Mask> tops;
    for (std::size_t j = 0; j < n; ++j)
      if (placed >> j & 1) tops.push_back(inter[next][j]);
    return minimal_new(fs[next].size(), tops).size() == 1;
  };
  const std::uint32_t all = n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1);
  auto dfs = [&](auto&& self, std::uint32_t placed) -> bool {
    if (placed == all) return true;
    if (dead.count(placed)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (placed >> j & 1) continue;
      if (!step_ok(placed, j)) continue;
      order.push_back(j);
      if (self(self, placed | (std::uint32_t{1} << j))) return true;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  std::vector<Face> out;
  for (auto j : order) out.push_back(fs[j]);
  return out;
}

bool is_shellable(const Complex& c, std::size_t budget) { return find_shelling(c, budget).has_value(); }

bool is_co_shellable_in_crosspolytope(const Complex& dc, int d, std::size_t budget) {
  const Complex cp = cross_polytope(d);
  if (!is_subcomplex(dc, cp)) throw Error(ErrorKind::NotSubcomplex, "D must lie in the cross-polytope");
  return is_shellable(delete_subcomplex(cp, dc), budget);
}

std::vector<long long> h_from_shelling(const Complex& c, const std::vector<Face>& order) {
  const auto v = is_shelling(c, order);
  if (!v.ok) throw Error(ErrorKind::NotAShelling, "order fails at position " + std::to_string(*v.failing_index));
  std::vector<long long> h(c.dim() + 2, 0);
  for (const auto& r : v.restrictions) ++h.at(r.size());
  return h;
}

}  // namespace balflip
