#include <CLI11.hpp>
#include <iostream>

#include "balflip/catalog.hpp"
#include "balflip/errors.hpp"
#include "balflip/verify.hpp"
#include "balflip_cli/commands.hpp"

using namespace balflip;

namespace {

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::BadParams: return cli::kUsage;
    case ErrorKind::DimensionCapExceeded:
    case ErrorKind::BudgetExceeded: return cli::kUndecided;
    default: return cli::kFail;
  }
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) std::cout << text;
  else write_text_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balflip: balanced complexes, diamonds and cross-flips"};
  app.require_subcommand(1);

  std::string out, kind, what, file, aux, script, target, index;
  std::vector<std::string> indices;
  int dim = -1, copies = 0, steps = 100, pos_dim = -1;
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultShellingBudget;

  auto* gen = app.add_subcommand("gen", "write a complex as JSON");
  gen->add_option("kind", kind, "cross-polytope, simplex-boundary, diamond, stacked or barycentric")->required();
  gen->add_option("--dim", dim);
  gen->add_option("--index", index, "comma list");
  gen->add_option("--copies", copies);
  gen->add_option("--out", out);

  auto* chk = app.add_subcommand("check", "check a property of a complex");
  chk->add_option("what", what, "manifold, balanced, induced or shelling-order")->required();
  chk->add_option("file", file)->required();
  chk->add_option("aux", aux, "subcomplex (induced) or certificate (shelling-order)");
  chk->add_option("--budget", budget, "facet cap for shelling checks");

  auto* flp = app.add_subcommand("flip", "apply a move script");
  flp->add_option("file", file)->required();
  flp->add_option("--script", script)->required();
  flp->add_option("--out", out);

  auto* wlk = app.add_subcommand("walk", "seeded random cross-flip walk; CSV on stdout");
  wlk->add_option("file", file, "start complex (default: cross-polytope)");
  wlk->add_option("--dim", dim);
  wlk->add_option("--steps", steps);
  wlk->add_option("--seed", seed);
  wlk->add_option("--index", indices, "allowed flip class, repeatable");
  wlk->add_option("--out", out, "final complex");

  auto* cat = app.add_subcommand("catalog", "basic cross-flip classes");
  cat->add_option("d", pos_dim);
  cat->add_option("--dim", dim);
  cat->add_option("--out", out, "JSON catalog");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("target", target)->required();
  ver->add_option("d", pos_dim);
  ver->add_option("--dim", dim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }

  try {
    if (*gen) {
      cli::GenParams p{kind, dim, index.empty() ? IndexSet{} : parse_index_set(index), copies};
      const auto f = cli::generate(p);
      emit(out, complex_to_json(f.complex, f.coloring));
      return cli::kPass;
    }
    if (*chk) {
      const auto f = parse_complex_json(read_text_file(file));
      std::optional<std::string> aux_text;
      if (!aux.empty()) aux_text = read_text_file(aux);
      const auto r = cli::check(f, what, aux_text, budget);
      std::cout << (r.exit_code == cli::kPass ? "PASS " : r.exit_code == cli::kFail ? "FAIL " : "UNDECIDED ")
                << r.message << "\n";
      return r.exit_code;
    }
    if (*flp) {
      const auto f = cli::apply_script(parse_complex_json(read_text_file(file)), read_text_file(script));
      emit(out, complex_to_json(f.complex, f.coloring));
      return cli::kPass;
    }
    if (*wlk) {
      cli::WalkConfig cfg;
      cfg.steps = steps;
      cfg.seed = seed;
      cfg.d = dim < 0 ? 2 : dim;
      for (const auto& s : indices) cfg.allowed_flips.push_back(parse_index_set(s));
      if (!file.empty()) cfg.start = parse_complex_json(read_text_file(file));
      const auto r = cli::run_walk(cfg);
      std::cout << cli::walk_csv(r.rows);
      if (!out.empty()) write_text_file(out, complex_to_json(r.final_complex.complex, r.final_complex.coloring));
      return cli::kPass;
    }
    const int d = pos_dim >= 0 ? pos_dim : dim;
    if (d < 0) throw Error(ErrorKind::BadParams, "dimension required");
    if (*cat) {
      const auto classes = enumerate_basic_flips(d);
      std::cout << catalog_to_table(d, classes);
      if (!out.empty()) write_text_file(out, catalog_to_json(d, classes));
      return cli::kPass;
    }
    const auto rep = run_verification(target, d);
    std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.summary;
    if (!rep.pass) std::cout << "\ncounterexample: " << rep.counterexample;
    std::cout << "\n";
    return rep.pass ? cli::kPass : cli::kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kFail;
  }
}
