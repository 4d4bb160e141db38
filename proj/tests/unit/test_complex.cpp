#include <doctest.h>
#include <algorithm>

#include "../oracle.hpp"
#include "balflip/coloring.hpp"
#include "balflip/diamond.hpp"
#include "balflip/errors.hpp"
#include "balflip/io.hpp"
#include "balflip/isomorphism.hpp"
#include "balflip/manifold.hpp"
#include "helpers.hpp"

using namespace balflip;

TEST_CASE("vertex labels order and round-trip") {
  CHECK(Vertex::base(1) < Vertex::sub(1));
  CHECK(Vertex::sub(1) < Vertex::base(2));
  CHECK(Vertex::base(5) < Vertex::fresh(0));
  CHECK(Vertex::fresh(3) < Vertex::named("a"));
  for (const char* tok : {"0", "17", "v3", "w12", "abc"}) CHECK(Vertex::parse(tok).to_string() == tok);
  CHECK(Vertex::parse("v2").partner() == Vertex::base(2));
  CHECK(face_to_string(F("v2,0,1")) == "{0,1,v2}");
}

TEST_CASE("faces by dimension") {
  const auto tri = simplex_boundary(1);
  CHECK(tri.faces(1).size() == 3);
  const auto oct = cross_polytope(2);
  CHECK(oct.faces(2).size() == 8);
  CHECK(oct.faces(0).size() == 6);
  CHECK(oct.faces(3).empty());
}

TEST_CASE("empty complex and void complex differ") {
  const Complex e;
  const Complex v = Complex::void_complex();
  CHECK(e.is_empty());
  CHECK_FALSE(v.is_empty());
  CHECK(e.dim() == -1);
  CHECK(v.dim() == -1);
  CHECK(e != v);
}

TEST_CASE("antichain is enforced") {
  CHECK_THROWS_AS(Complex::from_facets({F("0,1"), F("0")}), Error);
  CHECK_THROWS_AS(Complex::from_facets({F("0,1"), F("0,1")}), Error);
  CHECK(Complex::generated_by({F("0,1"), F("0")}).num_facets() == 1);
}

TEST_CASE("link star deletion join") {
  const auto oct = cross_polytope(2);
  const auto lk = link(oct, F("0"));
  CHECK(lk == C({"1,2", "1,v2", "v1,2", "v1,v2"}));
  CHECK(oracle::isomorphic(lk, cross_polytope(1)));
  CHECK_THROWS_AS(link(oct, F("0,v0")), Error);

  const auto two = C({"a,b,c", "b,c,d"});
  CHECK(star(two, F("b,c")) == two);
  CHECK(delete_face(two, F("a")) == C({"b,c,d"}));
  CHECK(delete_subcomplex(two, C({"b,c,d"})) == C({"a,b,c"}));

  CHECK_THROWS_AS(join(C({"a,b"}), C({"b,c"})), Error);
  CHECK(join(C({"a"}), C({"b", "c"})) == C({"a,b", "a,c"}));
}

TEST_CASE("join with a cross-polytope gives the closed form") {
  // ⋄(Γ_i) = ⟨{0,…,i−1,v_i}⟩ ∗ 𝒞_{d−i−1}, with 𝒞_{d−i−1} on the labels i+1..d.
  for (int d = 1; d <= 4; ++d)
    for (int i = 0; i <= d; ++i) {
      std::vector<Vertex> head;
      for (int j = 0; j < i; ++j) head.push_back(Vertex::base(j));
      head.push_back(Vertex::sub(i));
      std::vector<Face> rest{Face{}};
      for (int j = i + 1; j <= d; ++j) {
        std::vector<Face> next;
        for (const auto& f : rest)
          for (const auto& v : {Vertex::base(j), Vertex::sub(j)}) next.push_back(face_union(f, Face{v}));
        rest = std::move(next);
      }
      const Complex tail = i == d ? Complex::void_complex() : Complex::from_facets(rest);
      CHECK(join(Complex::simplex(make_face(head)), tail) == diamond_closed_form(d, {i}));
    }
}

TEST_CASE("boundary complex") {
  CHECK(boundary_complex(C({"a,b,c"})) == C({"a,b", "a,c", "b,c"}));
  CHECK(boundary_complex(cross_polytope(2)).is_empty());
  CHECK(boundary_complex(C({"a,b,c", "b,c,d"})) == C({"a,b", "a,c", "b,d", "c,d"}));
  CHECK_THROWS_AS(boundary_complex(C({"a,b,c", "c,d"})), Error);
}

TEST_CASE("f- and h-vectors agree with the oracle") {
  CHECK(h_vector(cross_polytope(2)) == L({1, 3, 3, 1}));
  CHECK(h_vector(C({"0,1,2"})) == L({1, 0, 0, 0}));
  const auto d0 = diamond_closed_form(2, {0});
  CHECK(f_vector(d0) == L({1, 5, 8, 4}));
  CHECK(h_vector(d0) == L({1, 2, 1, 0}));
  for (int d = 1; d <= 4; ++d) {
    CHECK(h_vector(cross_polytope(d)) == oracle::h_vector(cross_polytope(d)));
    CHECK(f_vector(cross_polytope(d)) == oracle::f_vector(cross_polytope(d)));
  }
  CHECK(euler_characteristic(cross_polytope(2)) == 2);
  CHECK(euler_characteristic(cross_polytope(3)) == 0);
}

TEST_CASE("induced subcomplexes") {
  const auto oct = cross_polytope(2);
  CHECK(is_induced(oct, C({"0,1,2"})));
  const auto cyc = C({"a,b", "b,c", "c,d", "a,d"});
  CHECK_FALSE(is_induced(cyc, C({"a,b", "c,d"})));
  CHECK(is_induced(oct, diamond_closed_form(2, {0})));
  CHECK(oracle::induced(oct, diamond_closed_form(2, {0})));
  CHECK_THROWS_AS(is_induced(oct, C({"0,v0"})), Error);
}

TEST_CASE("colorings") {
  for (int d = 1; d <= 4; ++d) {
    const auto cp = cross_polytope(d);
    CHECK(is_proper_coloring(cp, index_coloring(cp), d + 1));
  }
  const auto tri = simplex_boundary(1);
  Coloring mono;
  for (const auto& v : tri.vertices()) mono.color[v] = 0;
  CHECK_FALSE(is_proper_coloring(tri, mono, 3));
  CHECK_FALSE(find_balanced_coloring(simplex_boundary(2)).has_value());
  const auto found = find_balanced_coloring(cross_polytope(3));
  REQUIRE(found.has_value());
  CHECK(oracle::proper_coloring(cross_polytope(3), *found));
}

TEST_CASE("isomorphism search") {
  for (int d = 1; d <= 4; ++d) {
    const auto a = diamond_closed_form(d, {d}), b = diamond_closed_form(d, {d + 1});
    const auto m = are_isomorphic(a, b);
    REQUIRE(m.has_value());
    CHECK(is_isomorphism(a, b, *m));
  }
  const auto m = are_isomorphic(diamond_closed_form(2, {1}), diamond_closed_form(2, {2, 3}));
  REQUIRE(m.has_value());
  CHECK(is_isomorphism(diamond_closed_form(2, {1}), diamond_closed_form(2, {2, 3}), *m));
  Face shared{m->at(Vertex::base(0)), m->at(Vertex::sub(1))};
  std::sort(shared.begin(), shared.end());
  CHECK(shared == F("0,1"));
  CHECK_FALSE(are_isomorphic(C({"a,b", "b,c"}), C({"a,b", "b,c", "c,d"})).has_value());

  IsoOptions fix;
  fix.fixed[Vertex::base(0)] = Vertex::sub(0);
  const auto oct = cross_polytope(2);
  const auto g = are_isomorphic(oct, oct, fix);
  REQUIRE(g.has_value());
  CHECK(g->at(Vertex::base(0)) == Vertex::sub(0));
}

TEST_CASE("manifold recognition") {
  CHECK(is_combinatorial_manifold(cross_polytope(2)) == ManifoldVerdict::Closed);
  CHECK(is_combinatorial_manifold(cross_polytope(3)) == ManifoldVerdict::Closed);
  CHECK(is_combinatorial_manifold(C({"a,b,c", "a,d,e"})) == ManifoldVerdict::No);
  CHECK(is_combinatorial_manifold(diamond_closed_form(2, {0, 1})) == ManifoldVerdict::WithBoundary);
  CHECK(is_combinatorial_manifold(cross_polytope(4)) == ManifoldVerdict::Undecided);
  CHECK_THROWS_AS(is_combinatorial_manifold(C({"a,b,c", "c,d"})), Error);
}

TEST_CASE("complex JSON round-trip") {
  const auto oct = cross_polytope(2);
  const std::string text = complex_to_json(oct, index_coloring(oct));
  CHECK(text.rfind("{\"facets\": [[\"0\",\"1\",\"2\"], ", 0) == 0);
  const auto back = parse_complex_json(text);
  CHECK(back.complex == oct);
  REQUIRE(back.coloring.has_value());
  CHECK(*back.coloring == index_coloring(oct));
  CHECK(complex_to_json(back.complex, back.coloring) == text);
  CHECK_THROWS_AS(parse_complex_json("{\"facets\": [[\"0\",\"1\"], [\"0\"]]}"), Error);
  CHECK_THROWS_AS(parse_complex_json("not json"), Error);
}
