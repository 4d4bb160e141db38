#include <limits>
#include <sstream>

#include "balflip/catalog.hpp"
#include "balflip/coloring.hpp"
#include "balflip/complex.hpp"
#include "balflip/errors.hpp"
#include "balflip/moves.hpp"
#include "balflip_cli/commands.hpp"

namespace balflip::cli {

std::size_t WalkRng::below(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "empty range");
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return static_cast<std::size_t>(x % bound);
  }
}

namespace {

bool balanced_now(const Complex& c, const Coloring& k) {
  for (const auto& v : c.vertices())
    if (!k.defines(v)) return false;
  return is_proper_coloring(c, k, c.dim() + 1);
}

WalkRow row_for(int step, const IndexSet& I, const Complex& c, const Coloring& k) {
  return {step, I, c.num_facets(), c.vertices().size(), euler_characteristic(c), balanced_now(c, k)};
}

}  // namespace

WalkResult run_walk(const WalkConfig& cfg) {
  if (cfg.steps < 0) throw Error(ErrorKind::BadParams, "--steps must be non-negative");
  ComplexFile cur;
  if (cfg.start) {
    cur = *cfg.start;
  } else {
    cur.complex = cross_polytope(cfg.d);
    cur.coloring = index_coloring(cur.complex);
  }
  const int d = cur.complex.dim();
  if (!cur.coloring) cur.coloring = find_balanced_coloring(cur.complex);
  if (!cur.coloring) throw Error(ErrorKind::BadParams, "start complex is not balanced");

  std::vector<IndexSet> allowed = cfg.allowed_flips;
  if (allowed.empty())
    for (const auto& fc : enumerate_basic_flips(d)) allowed.push_back(fc.canonical_index);

  CrossFlipSiteCache cache(cur.complex, *cur.coloring, allowed);
  WalkRng rng(cfg.seed);
  WalkResult out;
  out.rows.push_back(row_for(0, {}, cur.complex, *cur.coloring));
  if (cfg.on_step) cfg.on_step(0, cur);
  for (int step = 1; step <= cfg.steps; ++step) {
    const auto& sites = cache.sites();
    if (sites.empty())
      throw Error(ErrorKind::StepFailed, "step " + std::to_string(step) + ": no applicable site", step);
    const CrossFlip site = sites[rng.below(sites.size())];
    try {
      auto r = apply_cross_flip(cur.complex, site, cur.coloring);
      cur.complex = std::move(r.complex);
      cur.coloring = std::move(r.coloring);
      cache.update(cur.complex, *cur.coloring);
    } catch (const Error& e) {
      throw Error(ErrorKind::StepFailed, "step " + std::to_string(step) + ": " + e.what(), step);
    }
    out.rows.push_back(row_for(step, site.index, cur.complex, *cur.coloring));
    if (cfg.on_step) cfg.on_step(step, cur);
  }
  out.final_complex = std::move(cur);
  return out;
}

std::string walk_csv(const std::vector<WalkRow>& rows) {
  std::ostringstream os;
  os << "step,flip_index,facets,vertices,euler,balanced\n";
  for (const auto& r : rows) {
    os << r.step << ',';
    for (std::size_t i = 0; i < r.flip_index.size(); ++i) os << (i ? ";" : "") << r.flip_index[i];
    os << ',' << r.facets << ',' << r.vertices << ',' << r.euler << ',' << (r.balanced ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace balflip::cli
