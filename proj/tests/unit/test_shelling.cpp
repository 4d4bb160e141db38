#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "balflip/diamond.hpp"
#include "balflip/errors.hpp"
#include "balflip/io.hpp"
#include "balflip/shelling.hpp"
#include "helpers.hpp"

using namespace balflip;

TEST_CASE("shelling verdicts") {
  const auto cyc = C({"a,b", "b,c", "c,d", "a,d"});
  const auto v = is_shelling(cyc, {F("a,b"), F("b,c"), F("c,d"), F("a,d")});
  CHECK(v.ok);
  std::vector<std::size_t> sizes;
  for (const auto& r : v.restrictions) sizes.push_back(r.size());
  CHECK(sizes == std::vector<std::size_t>{0, 1, 1, 2});

  const auto bow = C({"a,b,c", "a,d,e"});
  const auto w = is_shelling(bow, {F("a,b,c"), F("a,d,e")});
  CHECK_FALSE(w.ok);
  REQUIRE(w.failing_index.has_value());
  CHECK(*w.failing_index == 1);
  CHECK(w.minimal_new_faces.size() == 2);

  CHECK_THROWS_AS(is_shelling(cyc, {F("a,b"), F("b,c")}), Error);
  CHECK_THROWS_AS(is_shelling(cyc, {F("a,b"), F("b,c"), F("c,d"), F("a,c")}), Error);
}

TEST_CASE("the library verifier agrees with the definition") {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    const int d = 1 + round % 3;
    const auto cp = cross_polytope(d);
    auto order = cp.facets();
    std::shuffle(order.begin(), order.end(), rng);
    const auto lib = is_shelling(cp, order);
    const auto ref = oracle::check_shelling(order);
    CHECK(lib.ok == ref.ok);
    if (lib.ok) CHECK(lib.restrictions == ref.restrictions);
    else CHECK(*lib.failing_index == ref.failing);
  }
}

TEST_CASE("non-shelling fixture fails at facet 6") {
  const auto ball = parse_complex_json(read_text_file(BALFLIP_FIXTURES "/nonshelling_ball.json"));
  const auto cert = parse_certificate_json(read_text_file(BALFLIP_FIXTURES "/nonshelling_order.json"));
  REQUIRE(cert.removed.has_value());
  const auto v = is_relative_shelling(RelativeComplex::make(ball.complex, *cert.removed), cert.certificate.order);
  CHECK_FALSE(v.ok);
  REQUIRE(v.failing_index.has_value());
  CHECK(cert.labels.at(*v.failing_index) == "6");
  CHECK(oracle::check_shelling(cert.certificate.order, cert.removed->facets()).failing == *v.failing_index);
  // The same order is fine for D on its own, read as removals 1..6.
  CHECK(is_shelling(Complex::from_facets(cert.certificate.order), cert.certificate.order).ok);
}

TEST_CASE("shelling search") {
  CHECK_FALSE(find_shelling(C({"a,b,c", "a,d,e"})).has_value());
  const auto cp = cross_polytope(2);
  const auto s = find_shelling(cp);
  REQUIRE(s.has_value());
  CHECK(oracle::check_shelling(*s).ok);
  CHECK(h_from_shelling(cp, *s) == L({1, 3, 3, 1}));
  CHECK(is_shellable(cross_polytope(3)));
  CHECK_THROWS_AS(find_shelling(cross_polytope(4), 8), Error);
  CHECK(is_co_shellable_in_crosspolytope(diamond_closed_form(2, {1}), 2));
}

TEST_CASE("h from shelling") {
  CHECK(h_from_shelling(C({"0,1,2"}), {F("0,1,2")}) == L({1, 0, 0, 0}));
  CHECK_THROWS_AS(h_from_shelling(C({"a,b,c", "a,d,e"}), {F("a,b,c"), F("a,d,e")}), Error);
  for (int d = 1; d <= 3; ++d)
    for (unsigned mask = 1; mask < (1u << (d + 2)); ++mask) {
      IndexSet I;
      for (int i = 0; i <= d + 1; ++i)
        if (mask & (1u << i)) I.push_back(i);
      const auto D = diamond_closed_form(d, I);
      CHECK(h_from_shelling(D, absolute_shelling_order(d, I).order) == h_vector_formula(d, I));
    }
}

TEST_CASE("certificate JSON round-trip") {
  const auto cert = absolute_shelling_order(2, {0, 1});
  const auto text = certificate_to_json(cert, std::nullopt, {});
  const auto back = parse_certificate_json(text);
  CHECK(back.certificate == cert);
  CHECK_FALSE(back.removed.has_value());
  CHECK_THROWS_AS(parse_certificate_json("{\"order\": [[\"0\"]], \"labels\": [\"1\", \"2\"]}"), Error);
}
