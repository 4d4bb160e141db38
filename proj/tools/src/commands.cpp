#include "balflip_cli/commands.hpp"

#include <map>
#include <sstream>

#include "balflip/catalog.hpp"
#include "balflip/coloring.hpp"
#include "balflip/complex.hpp"
#include "balflip/errors.hpp"
#include "balflip/manifold.hpp"
#include "balflip/moves.hpp"

namespace balflip::cli {

namespace {

void need_dim(const GenParams& p) {
  if (p.dim < 0) throw Error(ErrorKind::BadParams, p.kind + " needs --dim");
}

bool fully_proper(const Complex& c, const Coloring& k) {
  for (const auto& v : c.vertices())
    if (!k.defines(v)) return false;
  return is_proper_coloring(c, k, c.dim() + 1);
}

std::string first_monochromatic_edge(const Complex& c, const Coloring& k) {
  if (c.dim() < 1) return {};
  for (const auto& e : c.faces(1))
    if (k.defines(e[0]) && k.defines(e[1]) && k.at(e[0]) == k.at(e[1])) return face_to_string(e);
  return {};
}

// Keeps the colors that survive a move; recolors from scratch when that is not a proper coloring.
std::optional<Coloring> carry_coloring(const Complex& c, const std::optional<Coloring>& old) {
  if (!old) return std::nullopt;
  Coloring k;
  k.num_colors = old->num_colors;
  for (const auto& v : c.vertices())
    if (old->defines(v)) k.color[v] = old->at(v);
  if (fully_proper(c, k)) return k;
  return find_balanced_coloring(c);
}

std::vector<Vertex> parse_vertex_list(std::string_view s) {
  std::vector<Vertex> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    if (end > start) out.push_back(Vertex::parse(s.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

}  // namespace

ComplexFile generate(const GenParams& p) {
  ComplexFile out;
  if (p.kind == "cross-polytope") {
    need_dim(p);
    out.complex = cross_polytope(p.dim);
    out.coloring = index_coloring(out.complex);
  } else if (p.kind == "simplex-boundary") {
    need_dim(p);
    out.complex = simplex_boundary(p.dim);
  } else if (p.kind == "diamond") {
    need_dim(p);
    if (p.index.empty()) throw Error(ErrorKind::BadParams, "diamond needs --index");
    out.complex = diamond_closed_form(p.dim, p.index);
    out.coloring = index_coloring(out.complex);
  } else if (p.kind == "stacked") {
    need_dim(p);
    if (p.copies < 1) throw Error(ErrorKind::BadParams, "stacked needs --copies >= 1");
    auto s = stacked_cross_sphere_with_shelling(p.copies, p.dim);
    out.complex = std::move(s.complex);
    out.coloring = std::move(s.coloring);
  } else if (p.kind == "barycentric") {
    need_dim(p);
    auto b = barycentric_sphere(p.dim);
    out.complex = std::move(b.complex);
    out.coloring = std::move(b.coloring);
  } else {
    throw Error(ErrorKind::BadParams, "unknown kind '" + p.kind + "'");
  }
  return out;
}

CheckResult check(const ComplexFile& file, const std::string& what, const std::optional<std::string>& aux_text,
                  std::size_t budget) {
  const Complex& c = file.complex;
  if (what == "manifold") {
    switch (is_combinatorial_manifold(c)) {
      case ManifoldVerdict::Closed: return {kPass, "closed combinatorial manifold"};
      case ManifoldVerdict::WithBoundary: return {kPass, "combinatorial manifold with boundary"};
      case ManifoldVerdict::No: return {kFail, "not a combinatorial manifold"};
      case ManifoldVerdict::Undecided:
        return {kUndecided, "undecided: exact recognition stops at dimension 3"};
    }
  }
  if (what == "balanced") {
    if (file.coloring) {
      if (fully_proper(c, *file.coloring)) return {kPass, "given coloring is a proper " + std::to_string(c.dim() + 1) + "-coloring"};
      const auto e = first_monochromatic_edge(c, *file.coloring);
      return {kFail, e.empty() ? "given coloring does not cover every vertex" : "monochromatic edge " + e};
    }
    if (find_balanced_coloring(c)) return {kPass, "balanced"};
    return {kFail, "no proper " + std::to_string(c.dim() + 1) + "-coloring exists"};
  }
  if (what == "induced") {
    if (!aux_text) throw Error(ErrorKind::BadParams, "induced needs a subcomplex file");
    const Complex sub = parse_complex_json(*aux_text).complex;
    if (!is_subcomplex(sub, c)) return {kFail, "not a subcomplex"};
    if (is_induced(c, sub)) return {kPass, "induced"};
    return {kFail, "not induced"};
  }
  if (what == "shelling-order") {
    if (!aux_text) throw Error(ErrorKind::BadParams, "shelling-order needs a certificate file");
    const CertificateFile cert = parse_certificate_json(*aux_text);
    const auto& order = cert.certificate.order;
    if (order.size() > budget)
      return {kUndecided, "certificate has " + std::to_string(order.size()) + " facets, budget is " + std::to_string(budget)};
    ShellingVerdict v;
    try {
      v = cert.removed ? is_relative_shelling(RelativeComplex::make(c, *cert.removed), order) : is_shelling(c, order);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotAPermutation || e.kind() == ErrorKind::NotSubcomplex) return {kFail, e.what()};
      throw;
    }
    auto name = [&](std::size_t i) {
      return cert.labels.empty() ? std::to_string(i + 1) : cert.labels[i];
    };
    if (!v.ok) {
      std::ostringstream os;
      const std::size_t i = *v.failing_index;
      os << "not a shelling: fails at facet " << name(i) << " " << face_to_string(order[i])
         << "; minimal new faces:";
      for (const auto& f : v.minimal_new_faces) os << " " << face_to_string(f);
      return {kFail, os.str()};
    }
    const auto& claimed = cert.certificate.restrictions;
    if (!claimed.empty()) {
      if (claimed.size() != order.size()) return {kFail, "restriction list length differs from order"};
      for (std::size_t i = 0; i < order.size(); ++i)
        if (claimed[i] != v.restrictions[i])
          return {kFail, "shelling, but restriction of facet " + name(i) + " is " + face_to_string(v.restrictions[i]) +
                             " not " + face_to_string(claimed[i])};
    }
    return {kPass, "shelling of " + std::to_string(order.size()) + " facets"};
  }
  throw Error(ErrorKind::BadParams, "unknown check '" + what + "'");
}

ComplexFile apply_script(const ComplexFile& start, std::string_view script) {
  ComplexFile cur = start;
  std::istringstream in{std::string(script)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string cmd;
    if (!(words >> cmd)) continue;
    try {
      std::map<std::string, std::string> kv;
      for (std::string w; words >> w;) {
        const auto eq = w.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected key=value, got '" + w + "'");
        if (!kv.emplace(w.substr(0, eq), w.substr(eq + 1)).second)
          throw Error(ErrorKind::ParseError, "repeated key " + w.substr(0, eq));
      }
      auto get = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw Error(ErrorKind::ParseError, cmd + " needs " + key + "=");
        return it->second;
      };
      if (cmd == "crossflip") {
        const IndexSet I = parse_index_set(get("I"));
        const int d = cur.complex.dim();
        const auto site = embed_by_anchor(cur.complex, d, I, parse_vertex_list(get("anchor")));
        if (!site) throw Error(ErrorKind::NotApplicable, "anchor does not extend to an embedding of the pattern");
        auto r = apply_cross_flip(cur.complex, *site, cur.coloring);
        cur.complex = std::move(r.complex);
        cur.coloring = carry_coloring(cur.complex, r.coloring);
      } else if (cmd == "bistellar") {
        cur.complex = apply_bistellar(cur.complex, {parse_face(get("A")), parse_face(get("B"))});
        cur.coloring = carry_coloring(cur.complex, cur.coloring);
      } else if (cmd == "shell" || cmd == "inverse-shell") {
        const ShellingMove m{parse_face(get("F")), parse_face(get("A")), parse_face(get("R"))};
        cur.complex = cmd == "shell" ? shelling_move(cur.complex, m) : inverse_shelling(cur.complex, m);
        cur.coloring = carry_coloring(cur.complex, cur.coloring);
      } else {
        throw Error(ErrorKind::ParseError, "unknown move '" + cmd + "'");
      }
    } catch (const Error& e) {
      throw Error(ErrorKind::StepFailed, "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return cur;
}

}  // namespace balflip::cli
