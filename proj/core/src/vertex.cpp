#include "balflip/vertex.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <set>

#include "balflip/errors.hpp"

namespace balflip {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FaceNotPresent: return "FaceNotPresent";
    case ErrorKind::VertexCollision: return "VertexCollision";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotSubcomplex: return "NotSubcomplex";
    case ErrorKind::NotAntichain: return "NotAntichain";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::NotSubcomplexOfSimplexBoundary: return "NotSubcomplexOfSimplexBoundary";
    case ErrorKind::MismatchedGamma: return "MismatchedGamma";
    case ErrorKind::HintNotAFacet: return "HintNotAFacet";
    case ErrorKind::HintMissing: return "HintMissing";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::IndexSetViolatesPrecondition: return "IndexSetViolatesPrecondition";
    case ErrorKind::NotWeldable: return "NotWeldable";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::NotInduced: return "NotInduced";
    case ErrorKind::NotShellable: return "NotShellable";
    case ErrorKind::NotCoShellable: return "NotCoShellable";
    case ErrorKind::EmbeddingNotInjective: return "EmbeddingNotInjective";
    case ErrorKind::NotApplicableOnBoundary: return "NotApplicableOnBoundary";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotAShelling: return "NotAShelling";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::StepFailed: return "StepFailed";
  }
  return "Unknown";
}

namespace {

const std::string* intern(std::string_view s) {
  static std::mutex mu;
  static std::set<std::string, std::less<>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(s);
  if (it == table.end()) it = table.emplace(s).first;
  return &*it;
}

bool parse_uint(std::string_view s, std::int64_t& out) {
  if (s.empty() || s.size() > 9) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Vertex Vertex::base(int i) {
  Vertex v;
  v.code_ = 2 * static_cast<std::int64_t>(i);
  return v;
}

Vertex Vertex::sub(int i) {
  Vertex v;
  v.code_ = 2 * static_cast<std::int64_t>(i) + 1;
  return v;
}

Vertex Vertex::fresh(int k) {
  Vertex v;
  v.kind_ = Kind::Fresh;
  v.code_ = k;
  return v;
}

Vertex Vertex::named(std::string_view name) {
  Vertex v;
  v.kind_ = Kind::Named;
  v.name_ = intern(name);
  return v;
}

Vertex Vertex::parse(std::string_view token) {
  std::int64_t n = 0;
  if (parse_uint(token, n)) return base(static_cast<int>(n));
  if (token.size() > 1 && parse_uint(token.substr(1), n)) {
    if (token[0] == 'v') return sub(static_cast<int>(n));
    if (token[0] == 'w') return fresh(static_cast<int>(n));
  }
  return named(token);
}

int Vertex::index() const {
  switch (kind_) {
    case Kind::Indexed: return static_cast<int>(code_ >> 1);
    case Kind::Fresh: return static_cast<int>(code_);
    case Kind::Named: return -1;
  }
  return -1;
}

Vertex Vertex::partner() const {
  if (kind_ != Kind::Indexed) return *this;
  Vertex v = *this;
  v.code_ ^= 1;
  return v;
}

std::string Vertex::to_string() const {
  switch (kind_) {
    case Kind::Indexed:
      return (is_sub() ? "v" : "") + std::to_string(code_ >> 1);
    case Kind::Fresh: return "w" + std::to_string(code_);
    case Kind::Named: return *name_;
  }
  return {};
}

bool Vertex::named_less(const Vertex& a, const Vertex& b) { return *a.name_ < *b.name_; }

std::size_t Vertex::hash() const {
  std::size_t h = std::hash<std::int64_t>{}(code_) * 31 + static_cast<std::size_t>(kind_);
  return h ^ std::hash<const void*>{}(name_);
}

Face make_face(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Face make_face(std::initializer_list<Vertex> vs) { return make_face(std::vector<Vertex>(vs)); }

Face parse_face(std::string_view s) {
  std::vector<Vertex> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view tok = s.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(Vertex::parse(tok));
    start = end + 1;
  }
  return make_face(std::move(out));
}

std::string face_to_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += f[i].to_string();
  }
  return s + "}";
}

bool is_subset(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool face_contains(const Face& f, const Vertex& v) {
  return std::binary_search(f.begin(), f.end(), v);
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace balflip
