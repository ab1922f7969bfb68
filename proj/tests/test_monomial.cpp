#include <doctest.h>

#include <numeric>
#include <set>

#include "bqa/errors.hpp"
#include "bqa/monomial.hpp"
#include "bqa/repr.hpp"
#include "support.hpp"

using namespace bqa;
using test::alg;

namespace {

std::set<std::string> basis_names(const MonomialAlgebra& a) {
  std::set<std::string> out;
  for (PathIndex p = 0; p < a.dimension(); ++p) out.insert(a.path_name(p));
  return out;
}

}  // namespace

TEST_CASE("five-vertex example basis") {
  const auto a = paper_example_algebra();
  CHECK(a.dimension() == 11);
  CHECK(basis_names(a) == std::set<std::string>{"e1", "e2", "e3", "e4", "e5", "a1", "a2", "a3", "a4", "a1 a4",
                                                "a2 a3"});
  // Oracle: independent path enumeration with a forbidden-factor filter.
  CHECK(test::brute_force_basis(a.quiver(), a.relations(), 6).size() + a.vertex_count() == a.dimension());
}

TEST_CASE("build examples and errors") {
  CHECK(test::dual_numbers().dimension() == 2);
  CHECK_THROWS_AS(alg("vertices: 1\narrows: x 1 1\n"), NotAdmissible);
  CHECK_THROWS_AS(alg("vertices: 2\narrows: x 1 1\nrelations: x x\n"), DisconnectedQuiver);
  CHECK_THROWS_AS(alg("vertices: 2\narrows: a 1 2\nrelations: a\n"), BadRelation);
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 0);
  CHECK_THROWS_AS(MonomialAlgebra::build(q, {Path{0, 0, {0, 0}}}), BadRelation);
  // Relations are reduced to a factor-antichain.
  const auto r = alg("vertices: 2\narrows: a 1 2; b 2 1\nrelations: a b; a b a; b a b a\n");
  CHECK(r.relations().size() == 1);
  const auto s = alg("vertices: 2\narrows: a 1 2; b 2 1\nrelations: a b a; b a b; a b a b\n");
  CHECK(s.relations().size() == 2);
}

TEST_CASE("equivalent generating sets give identical algebras") {
  const auto x = alg("vertices: 2\narrows: a 1 2; b 2 1\nrelations: b a; a b a\n");
  const auto y = alg("vertices: 2\narrows: a 1 2; b 2 1\nrelations: b a b; b a\n");
  CHECK(x.relations() == y.relations());
  CHECK(x == y);
}

TEST_CASE("multiply") {
  const auto a = paper_example_algebra();
  const auto idx = [&](std::vector<ArrowIndex> w) { return *a.index_of(*Path::from_arrows(a.quiver(), w)); };
  const PathIndex a1 = idx({0}), a3 = idx({2}), a4 = idx({3});
  CHECK_FALSE(a.multiply(a1, a3).has_value());
  CHECK(a.multiply(*a.index_of(Path::trivial(0)), a1) == a1);
  CHECK(a.multiply(a1, a4) == idx({0, 3}));
  CHECK_FALSE(a.multiply(a4, a1).has_value());
}

TEST_CASE("basis agrees with brute force on samples") {
  for (const auto& a : test::sample_algebras())
    CHECK(test::brute_force_basis(a.quiver(), a.relations(), 12).size() + a.vertex_count() == a.dimension());
}

TEST_CASE("multiplication is associative on the basis") {
  for (const auto& a : test::sample_algebras()) {
    const std::size_t d = a.dimension();
    for (PathIndex x = 0; x < d; ++x)
      for (PathIndex y = 0; y < d; ++y)
        for (PathIndex z = 0; z < d; ++z) {
          const auto xy = a.multiply(x, y);
          const auto yz = a.multiply(y, z);
          const auto l = xy ? a.multiply(*xy, z) : std::nullopt;
          const auto r = yz ? a.multiply(x, *yz) : std::nullopt;
          CHECK(l == r);
        }
  }
}

TEST_CASE("opposite") {
  const auto a = paper_example_algebra();
  const auto op = a.opposite();
  const Quiver& q = op.quiver();
  CHECK(q.arrow(0).source == 1);
  CHECK(q.arrow(0).target == 0);
  CHECK(q.arrow(1).source == 1);
  CHECK(q.arrow(1).target == 2);
  CHECK(q.arrow(2).source == 3);
  CHECK(q.arrow(3).source == 4);
  std::set<std::string> rels;
  for (const auto& r : op.relations()) rels.insert(to_string(q, r));
  CHECK(rels == std::set<std::string>{"a3 a1", "a4 a2"});
  CHECK(test::dual_numbers().opposite() == test::dual_numbers());
  const auto line = test::linear_path_algebra(2).opposite();
  CHECK(line.quiver().arrow(0).source == 1);
  for (const auto& s : test::sample_algebras()) CHECK(s.opposite().opposite() == s);
}

TEST_CASE("socle criterion examples") {
  const auto a = paper_example_algebra();
  CHECK_FALSE(socle_criterion(a, 1, Side::Right));
  CHECK(socle_criterion(a, 0, Side::Right));
  CHECK(socle_criterion(alg("vertices: 1\n"), 0, Side::Right));
  CHECK(maximal_path_count(a, 1, Side::Right) == 2);
}

TEST_CASE("is_qf2 examples") {
  CHECK_FALSE(is_qf2(paper_example_algebra(), Sides::Both));
  CHECK(is_qf2(alg("vertices: 1\n"), Sides::Both));
  for (const auto& ks : enumerate_kupisch(3, 4)) CHECK(is_qf2(kupisch_to_algebra(ks), Sides::Both));
}

TEST_CASE("socle criterion agrees with the module socle") {
  for (const auto& a : test::sample_algebras()) {
    const auto op = a.opposite();
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
      const auto sr = socle_dims(a, standard_module(a, ModuleKind::Projective, v));
      const auto sl = socle_dims(op, standard_module(op, ModuleKind::Projective, v));
      CHECK(socle_criterion(a, v, Side::Right) == (std::accumulate(sr.begin(), sr.end(), std::size_t{0}) == 1));
      CHECK(socle_criterion(a, v, Side::Left) == (std::accumulate(sl.begin(), sl.end(), std::size_t{0}) == 1));
    }
    CHECK(is_qf2(a, Sides::Left) == is_qf2(op, Sides::Right));
    // QF-2 on both sides forces a line or cycle.
    if (is_qf2(a, Sides::Both)) CHECK(shape_classify(a.quiver()).kind != ShapeKind::NotNakayamaShape);
  }
}

TEST_CASE("is_admissible") {
  Quiver q(1);
  q.add_arrow("x", 0, 0);
  q.add_arrow("y", 0, 0);
  CHECK_FALSE(is_admissible(q, {}));
  CHECK_FALSE(is_admissible(q, {Path{0, 0, {0, 0}}, Path{0, 0, {1, 1}}}));  // (xy)^n survives
  CHECK(is_admissible(q, {Path{0, 0, {0, 0}}, Path{0, 0, {1, 1}}, Path{0, 0, {0, 1}}}));
  CHECK(is_admissible(q, {Path{0, 0, {0, 0}}, Path{0, 0, {1, 1}}, Path{0, 0, {0, 1, 0}}, Path{0, 0, {1, 0, 1}}}));
}
