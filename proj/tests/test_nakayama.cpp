#include <doctest.h>

#include <numeric>

#include "bqa/endo.hpp"
#include "bqa/errors.hpp"
#include "bqa/homological.hpp"
#include "bqa/nakayama.hpp"
#include "bqa/repr.hpp"
#include "support.hpp"

using namespace bqa;
using test::kupisch;
using U = std::vector<Uniserial>;

namespace {

std::size_t total(const std::vector<std::size_t>& d) { return std::accumulate(d.begin(), d.end(), std::size_t{0}); }

}  // namespace

TEST_CASE("kupisch_to_algebra") {
  const auto c32 = kupisch("cyclic:3,2");
  REQUIRE(c32.relations().size() == 1);
  CHECK(c32.relations()[0].source == 1);
  CHECK(c32.relations()[0].length() == 2);
  CHECK(to_string(c32.quiver(), c32.relations()[0]) == "a2 a1");
  CHECK(c32.dimension() == 5);

  const auto l21 = kupisch("linear:2,1");
  CHECK(l21.relations().empty());
  CHECK(l21.quiver().arrow_count() == 1);
  CHECK(kupisch("cyclic:2,2").relations().size() == 2);
  CHECK_THROWS_AS(kupisch_to_algebra({KupischShape::Linear, {2, 2}}), InvalidKupisch);
  CHECK_THROWS_AS(kupisch_to_algebra({KupischShape::Cyclic, {4, 2}}), InvalidKupisch);
}

TEST_CASE("parse_kupisch") {
  CHECK(parse_kupisch("linear:3,2,1") == KupischSeries{KupischShape::Linear, {3, 2, 1}});
  CHECK(parse_kupisch(" cyclic: 3, 2 ") == KupischSeries{KupischShape::Cyclic, {3, 2}});
  CHECK_THROWS_AS(parse_kupisch("linear:2,2"), InvalidKupisch);
  CHECK_THROWS_AS(parse_kupisch("circle:2"), SyntaxError);
  CHECK_THROWS_AS(parse_kupisch("cyclic:"), SyntaxError);
  CHECK_THROWS_AS(parse_kupisch("cyclic:2,x"), SyntaxError);
  CHECK(to_string(parse_kupisch("cyclic:2,3")) == "cyclic:2,3");
}

TEST_CASE("canonical rotation") {
  CHECK(canonical_rotation({KupischShape::Cyclic, {2, 3}}) == KupischSeries{KupischShape::Cyclic, {3, 2}});
  CHECK(canonical_rotation({KupischShape::Cyclic, {3, 3, 4}}) == KupischSeries{KupischShape::Cyclic, {4, 3, 3}});
  CHECK(same_up_to_rotation({KupischShape::Cyclic, {2, 3}}, {KupischShape::Cyclic, {3, 2}}));
  CHECK_FALSE(same_up_to_rotation({KupischShape::Linear, {2, 1}}, {KupischShape::Cyclic, {2, 1}}));
}

TEST_CASE("algebra_to_kupisch") {
  CHECK_FALSE(algebra_to_kupisch(paper_example_algebra()).has_value());
  CHECK(algebra_to_kupisch(test::linear_path_algebra(2)) == KupischSeries{KupischShape::Linear, {2, 1}});
  const auto c = test::alg("vertices: 2\narrows: a 1 2; b 2 1\nrelations: b a\n");
  CHECK(canonical_rotation(*algebra_to_kupisch(c)) == KupischSeries{KupischShape::Cyclic, {3, 2}});
  // Labels need not follow the orientation.
  const auto l = test::alg("vertices: 3\narrows: b 3 1; a 2 3\n");
  CHECK(algebra_to_kupisch(l) == KupischSeries{KupischShape::Linear, {3, 2, 1}});
}

TEST_CASE("enumerate_kupisch") {
  const std::vector<std::string> expected{"linear:1", "linear:2,1", "cyclic:2", "cyclic:3",
                                          "cyclic:2,2", "cyclic:3,2", "cyclic:3,3"};
  std::vector<std::string> got;
  for (const auto& ks : enumerate_kupisch(2, 3)) got.push_back(to_string(ks));
  CHECK(got == expected);
  CHECK(enumerate_kupisch(1, 1) == std::vector<KupischSeries>{{KupischShape::Linear, {1}}});
  for (const auto& ks : enumerate_kupisch(3, 4)) {
    CHECK(is_valid(ks));
    const auto a = kupisch_to_algebra(ks);
    for (Vertex v = 0; v < ks.size(); ++v)
      CHECK(standard_module(a, ModuleKind::Projective, v).total_dimension() == ks.lengths[v]);
    CHECK(same_up_to_rotation(*algebra_to_kupisch(a), ks));
    CHECK(is_selfinjective_kupisch(ks) == is_selfinjective(a));
  }
}

TEST_CASE("is_selfinjective_kupisch") {
  CHECK(is_selfinjective_kupisch(parse_kupisch("cyclic:2,2")));
  CHECK_FALSE(is_selfinjective_kupisch(parse_kupisch("cyclic:3,2")));
  CHECK(is_selfinjective_kupisch(parse_kupisch("linear:1")));
  CHECK_FALSE(is_selfinjective_kupisch(parse_kupisch("linear:2,1")));
}

TEST_CASE("allowed summands") {
  CHECK(allowed_summands(test::dual_numbers()) == U{{0, 1}, {0, 2}});
  // P1 = (1,3), P2 = (2,2), P3 = (3,1), I1 = S1, I2 = (1,2), I3 = P1.
  CHECK(allowed_summands(test::linear_path_algebra(3)) == U{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 1}});
  CHECK(allowed_summands(test::alg("vertices: 1\n")) == U{{0, 1}});
  CHECK_THROWS_AS(allowed_summands(paper_example_algebra()), NotNakayama);
}

TEST_CASE("generator-cogenerator candidates") {
  const auto a3 = gen_cogen_candidates(test::linear_path_algebra(3));
  REQUIRE(a3.size() == 1);
  CHECK(a3[0] == U{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 1}});
  CHECK(gen_cogen_candidates(test::dual_numbers()) == std::vector<U>{{{0, 2}}, {{0, 1}, {0, 2}}});
  CHECK(gen_cogen_candidates(test::alg("vertices: 1\n")) == std::vector<U>{{{0, 1}}});
  // The full universe adds S2 for the A3 path algebra.
  CHECK(gen_cogen_candidates(test::linear_path_algebra(3), true).size() == 2);
}

TEST_CASE("uniserial modules") {
  for (const auto& ks : enumerate_kupisch(3, 4)) {
    const auto b = kupisch_to_algebra(ks);
    const auto all = all_uniserials(b);
    for (Vertex v = 0; v < b.vertex_count(); ++v) {
      const auto p = uniserial_module(b, projective_uniserial(b, v));
      CHECK(p.dims == standard_module(b, ModuleKind::Projective, v).dims);
      const auto i = uniserial_module(b, injective_uniserial(b, v));
      CHECK(is_isomorphic_indecomposable(b, i, standard_module(b, ModuleKind::Injective, v)));
    }
    for (const auto& u : all) {
      const auto m = uniserial_module(b, u);
      CHECK(m.total_dimension() == u.length);
      CHECK(total(socle_dims(b, m)) == 1);
      CHECK(total(top_dims(b, m)) == 1);
      CHECK(top_dims(b, m)[u.top] == 1);
    }
    // (top, length) is a complete invariant.
    for (std::size_t x = 0; x < all.size(); ++x)
      for (std::size_t y = x + 1; y < all.size(); ++y)
        CHECK_FALSE(is_isomorphic_indecomposable(b, uniserial_module(b, all[x]), uniserial_module(b, all[y])));
  }
  CHECK(to_string(Uniserial{1, 2}) == "top=2,len=2");
}
