#include <doctest.h>

#include <numeric>

#include "bqa/errors.hpp"
#include "bqa/quiver.hpp"
#include "support.hpp"

using namespace bqa;

namespace {

// Arrows 1->2, 3->2, 2->4, 2->5 in 0-based form.
Quiver example_quiver() {
  Quiver q(5);
  q.add_arrow("a1", 0, 1);
  q.add_arrow("a2", 2, 1);
  q.add_arrow("a3", 1, 3);
  q.add_arrow("a4", 1, 4);
  return q;
}

}  // namespace

TEST_CASE("compose") {
  const Quiver q = example_quiver();
  const Path a1 = Path::of_arrow(q, 0), a2 = Path::of_arrow(q, 1), a4 = Path::of_arrow(q, 3);
  CHECK(compose(Path::trivial(0), a1) == a1);
  const auto p = compose(a1, a4);
  REQUIRE(p.has_value());
  CHECK(p->source == 0);
  CHECK(p->target == 4);
  CHECK(p->arrows == std::vector<ArrowIndex>{0, 3});
  CHECK_FALSE(compose(a1, a2).has_value());
  CHECK(compose(a1, Path::trivial(1)) == a1);
}

TEST_CASE("from_arrows rejects broken sequences") {
  const Quiver q = example_quiver();
  CHECK(Path::from_arrows(q, {0, 2}).has_value());
  CHECK_FALSE(Path::from_arrows(q, {0, 1}).has_value());
  CHECK_FALSE(Path::from_arrows(q, {}).has_value());
  CHECK_FALSE(Path::from_arrows(q, {9}).has_value());
}

TEST_CASE("add_arrow validates") {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  CHECK_THROWS_AS(q.add_arrow("a", 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(q.add_arrow("b", 0, 2), std::invalid_argument);
  q.add_arrow("b", 0, 1);  // parallel arrows are allowed
  q.add_arrow("x", 1, 1);  // and loops
  CHECK(q.arrow_count() == 3);
  CHECK(q.arrows_from(0).size() == 2);
  CHECK(q.arrows_to(1).size() == 3);
}

TEST_CASE("shape_classify") {
  CHECK(shape_classify(example_quiver()).kind == ShapeKind::NotNakayamaShape);
  Quiver line(2);
  line.add_arrow("a", 0, 1);
  CHECK(shape_classify(line) == Shape{ShapeKind::Linear, 2});
  Quiver loop(1);
  loop.add_arrow("x", 0, 0);
  CHECK(shape_classify(loop) == Shape{ShapeKind::Cyclic, 1});
  CHECK(shape_classify(Quiver(1)) == Shape{ShapeKind::Linear, 1});
  CHECK_THROWS_AS(shape_classify(Quiver(2)), DisconnectedQuiver);

  Quiver v(3);  // 0 -> 1 <- 2 is a line as a graph but not an oriented one
  v.add_arrow("a", 0, 1);
  v.add_arrow("b", 2, 1);
  CHECK(shape_classify(v).kind == ShapeKind::NotNakayamaShape);
  Quiver two_loops(1);
  two_loops.add_arrow("x", 0, 0);
  two_loops.add_arrow("y", 0, 0);
  CHECK(shape_classify(two_loops).kind == ShapeKind::NotNakayamaShape);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(Quiver(1)));
  CHECK_FALSE(is_connected(Quiver(2)));
  CHECK(is_connected(example_quiver()));
}

TEST_CASE("shape is invariant under every vertex permutation") {
  std::vector<Quiver> quivers{example_quiver()};
  for (const auto& a : test::sample_algebras()) quivers.push_back(a.quiver());
  for (const auto& q : quivers) {
    std::vector<Vertex> perm(q.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    const Shape s = shape_classify(q);
    do {
      CHECK(shape_classify(permute_vertices(q, perm)) == s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("Cyclic and Linear degree characterisation") {
  for (const auto& a : test::sample_algebras()) {
    const Quiver& q = a.quiver();
    const std::size_t n = q.vertex_count();
    bool all_one = true, at_most_one = true;
    for (Vertex v = 0; v < n; ++v) {
      all_one = all_one && q.arrows_from(v).size() == 1 && q.arrows_to(v).size() == 1;
      at_most_one = at_most_one && q.arrows_from(v).size() <= 1 && q.arrows_to(v).size() <= 1;
    }
    const ShapeKind k = shape_classify(q).kind;
    CHECK((k == ShapeKind::Cyclic) == (q.arrow_count() == n && all_one));
    CHECK((k == ShapeKind::Linear) == (q.arrow_count() + 1 == n && at_most_one));
  }
}

TEST_CASE("opposite quiver") {
  const Quiver op = example_quiver().opposite();
  CHECK(op.arrow(0).source == 1);
  CHECK(op.arrow(0).target == 0);
  CHECK(op.opposite() == example_quiver());
}
