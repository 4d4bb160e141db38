#include "balflip/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "balflip/errors.hpp"

namespace balflip {

namespace {

using json = nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Face face_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "face must be an array of strings");
  std::vector<Vertex> vs;
  for (const auto& t : j) {
    if (!t.is_string()) throw Error(ErrorKind::ParseError, "vertex tokens must be strings");
    vs.push_back(Vertex::parse(t.get<std::string>()));
  }
  Face f = make_face(vs);
  if (f.size() != vs.size()) throw Error(ErrorKind::ParseError, "repeated vertex in face");
  return f;
}

std::vector<Face> faces_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  std::vector<Face> out;
  for (const auto& f : j) out.push_back(face_from_json(f));
  return out;
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string face_json(const Face& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += quote(f[i].to_string());
  }
  return s + "]";
}

std::string faces_json(const std::vector<Face>& fs) {
  std::string s = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ", ";
    s += face_json(fs[i]);
  }
  return s + "]";
}

}  // namespace

ComplexFile parse_complex_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("facets"))
    throw Error(ErrorKind::ParseError, "expected an object with \"facets\"");
  ComplexFile out;
  out.complex = Complex::from_facets(faces_from_json(j["facets"], "facets"));
  if (j.contains("coloring")) {
    const auto& c = j["coloring"];
    if (!c.is_object()) throw Error(ErrorKind::ParseError, "coloring must be an object");
    Coloring k;
    for (auto it = c.begin(); it != c.end(); ++it) {
      if (!it.value().is_number_integer()) throw Error(ErrorKind::ParseError, "colors must be integers");
      const int col = it.value().get<int>();
      k.color[Vertex::parse(it.key())] = col;
      k.num_colors = std::max(k.num_colors, col + 1);
    }
    k.num_colors = std::max(k.num_colors, out.complex.dim() + 1);
    out.coloring = std::move(k);
  }
  return out;
}

std::string complex_to_json(const Complex& c, const std::optional<Coloring>& kappa) {
  std::string s = "{\"facets\": " + faces_json(c.facets());
  if (kappa) {
    s += ", \"coloring\": {";
    bool first = true;
    for (const auto& [v, col] : kappa->color) {
      if (!first) s += ", ";
      first = false;
      s += quote(v.to_string()) + ": " + std::to_string(col);
    }
    s += "}";
  }
  return s + "}\n";
}

CertificateFile parse_certificate_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("order"))
    throw Error(ErrorKind::ParseError, "expected an object with \"order\"");
  CertificateFile out;
  out.certificate.order = faces_from_json(j["order"], "order");
  if (j.contains("restrictions"))
    out.certificate.restrictions = faces_from_json(j["restrictions"], "restrictions");
  if (j.contains("removed")) out.removed = Complex::from_facets(faces_from_json(j["removed"], "removed"));
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      if (l.is_string()) out.labels.push_back(l.get<std::string>());
      else if (l.is_number_integer()) out.labels.push_back(std::to_string(l.get<long long>()));
      else throw Error(ErrorKind::ParseError, "labels must be strings or integers");
    }
    if (out.labels.size() != out.certificate.order.size())
      throw Error(ErrorKind::ParseError, "one label per order entry expected");
  }
  return out;
}

std::string certificate_to_json(const ShellingCertificate& cert, const std::optional<Complex>& removed,
                                const std::vector<std::string>& labels) {
  std::string s = "{\"order\": " + faces_json(cert.order) +
                  ", \"restrictions\": " + faces_json(cert.restrictions);
  if (removed) s += ", \"removed\": " + faces_json(removed->facets());
  if (!labels.empty()) {
    s += ", \"labels\": [";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + quote(labels[i]);
    s += "]";
  }
  return s + "}\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadParams, "cannot write " + path);
  out << text;
}

}  // namespace balflip
