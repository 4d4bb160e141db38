#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace balflip {

// A vertex label. Indexed labels cover the paired vertex sets of diamond
// complexes: Base(i) is written "i" and Sub(i) is written "v<i>". Fresh(k)
// ("w<k>") labels vertices created by moves. Anything else is Named.
//
// Order: Base(0) < Sub(0) < Base(1) < ... < Fresh(0) < Fresh(1) < ... < Named
// (by string).
class Vertex {
 public:
  enum class Kind : std::uint8_t { Indexed = 0, Fresh = 1, Named = 2 };

  Vertex() = default;

  static Vertex base(int i);
  static Vertex sub(int i);
  static Vertex fresh(int k);
  static Vertex named(std::string_view name);
  // Inverse of to_string(). Never fails; unknown shapes become Named.
  static Vertex parse(std::string_view token);

  Kind kind() const { return kind_; }
  bool is_base() const { return kind_ == Kind::Indexed && (code_ & 1) == 0; }
  bool is_sub() const { return kind_ == Kind::Indexed && (code_ & 1) == 1; }
  bool is_fresh() const { return kind_ == Kind::Fresh; }
  bool is_named() const { return kind_ == Kind::Named; }
  // Pair index i of Base(i)/Sub(i), or k of Fresh(k). -1 for Named.
  int index() const;
  // Base(i) <-> Sub(i). Other kinds are returned unchanged.
  Vertex partner() const;

  std::string to_string() const;

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.kind_ == b.kind_ && a.code_ == b.code_ && a.name_ == b.name_;
  }
  friend bool operator<(const Vertex& a, const Vertex& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.kind_ != Kind::Named) return a.code_ < b.code_;
    return named_less(a, b);
  }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
  friend bool operator>(const Vertex& a, const Vertex& b) { return b < a; }
  friend bool operator<=(const Vertex& a, const Vertex& b) { return !(b < a); }
  friend bool operator>=(const Vertex& a, const Vertex& b) { return !(a < b); }

  std::size_t hash() const;

 private:
  static bool named_less(const Vertex& a, const Vertex& b);
  Kind kind_ = Kind::Indexed;
  std::int64_t code_ = 0;
  const std::string* name_ = nullptr;  // interned, stable for program lifetime
};

// A face is a sorted, duplicate-free vertex list.
using Face = std::vector<Vertex>;

Face make_face(std::vector<Vertex> vs);
Face make_face(std::initializer_list<Vertex> vs);
// Parses "0,1,v2" or a list of tokens.
Face parse_face(std::string_view comma_list);
std::string face_to_string(const Face& f);

bool is_subset(const Face& small, const Face& big);
bool face_contains(const Face& f, const Vertex& v);
Face face_union(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);

}  // namespace balflip

template <>
struct std::hash<balflip::Vertex> {
  std::size_t operator()(const balflip::Vertex& v) const noexcept { return v.hash(); }
};
