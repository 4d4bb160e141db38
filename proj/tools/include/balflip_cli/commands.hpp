#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "balflip/diamond.hpp"
#include "balflip/io.hpp"
#include "balflip/shelling.hpp"

namespace balflip::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUndecided = 2, kUsage = 3 };

struct GenParams {
  std::string kind;
  int dim = -1;
  IndexSet index;
  int copies = 0;
};

// Throws BadParams on an unknown kind or missing parameter.
ComplexFile generate(const GenParams& p);

struct CheckResult {
  int exit_code = kFail;
  std::string message;
};

// what: manifold, balanced, induced (aux = subcomplex file), shelling-order (aux = certificate file).
CheckResult check(const ComplexFile& file, const std::string& what, const std::optional<std::string>& aux_text,
                  std::size_t budget = kDefaultShellingBudget);

// Applies a move script top to bottom. Throws StepFailed naming the line.
ComplexFile apply_script(const ComplexFile& start, std::string_view script);

// mt19937_64 with a rejection-sampled bounded draw, so walks match across standard libraries.
class WalkRng {
 public:
  explicit WalkRng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

struct WalkConfig {
  int steps = 0;
  std::uint64_t seed = 0;
  int d = 2;
  std::vector<IndexSet> allowed_flips;  // empty: every basic class
  std::optional<ComplexFile> start;     // empty: the cross-polytope
  std::function<void(int step, const ComplexFile&)> on_step;  // called after each step, and for step 0
};

struct WalkRow {
  int step = 0;
  IndexSet flip_index;
  std::size_t facets = 0;
  std::size_t vertices = 0;
  long long euler = 0;
  bool balanced = false;
};

struct WalkResult {
  ComplexFile final_complex;
  std::vector<WalkRow> rows;
};

// Each step picks uniformly among all sites of all allowed classes, in the deterministic site order.
WalkResult run_walk(const WalkConfig& cfg);
std::string walk_csv(const std::vector<WalkRow>& rows);

}  // namespace balflip::cli
