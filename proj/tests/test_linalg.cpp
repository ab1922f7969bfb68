#include <doctest.h>

#include <limits>
#include <random>

#include "bqa/matrix.hpp"
#include "bqa/prime_field.hpp"
#include "bqa/rational.hpp"

using namespace bqa;

TEST_CASE("rational arithmetic normalizes") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK(a * Rational(-2, 3) == Rational(1));
  CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
  CHECK(Rational(5).inverse() == Rational(1, 5));
  CHECK(Rational(-7, 21).str() == "-1/3");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(static_cast<void>(Rational(0).inverse()), std::domain_error);
}

TEST_CASE("rational overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
  CHECK_THROWS_AS(big + big + big, std::overflow_error);
}

TEST_CASE("prime field") {
  using F = PrimeField<7>;
  CHECK(F(3) * F(5) == F(1));
  CHECK(F(3).inverse() == F(5));
  CHECK((F(2) - F(5)) == F(4));
  CHECK(F(14).is_zero());
}

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rank-nullity and null space property on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = rng() % 6, c = 1 + rng() % 6;
    // Low-rank products exercise dependent rows.
    const std::size_t k = rng() % 4;
    QMatrix a = random_matrix(rng, r, k, -3, 3) * random_matrix(rng, k, c, -3, 3);
    if (k == 0) a = QMatrix(r, c);
    const QMatrix n = null_space(a);
    CHECK(rank(a) + n.rows() == c);
    CHECK(rank(a) <= k);
    if (n.rows() > 0 && r > 0) CHECK((a * n.transpose()).is_zero());
    CHECK(rank(n) == n.rows());
    const QMatrix l = left_null_space(a);
    if (l.rows() > 0 && c > 0) CHECK((l * a).is_zero());
  }
}

TEST_CASE("rref is reduced and spans the row space") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const QMatrix a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, -2, 2);
    const auto e = rref(a);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      CHECK(e.reduced(i, e.pivots[i]).is_one());
      for (std::size_t j = 0; j < e.rank(); ++j)
        if (j != i) CHECK(e.reduced(j, e.pivots[i]).is_zero());
    }
    // Every row of a has coordinates in the echelon basis.
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto coords = echelon_coordinates(e, a.row(i));
      REQUIRE(coords.has_value());
      std::vector<Rational> back(a.cols());
      for (std::size_t k = 0; k < coords->size(); ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) back[j] += (*coords)[k] * e.reduced(k, j);
      CHECK(std::equal(back.begin(), back.end(), a.row(i).begin()));
    }
  }
}

TEST_CASE("inverse") {
  QMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  CHECK(a * inverse(a) == QMatrix::identity(2));
  QMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_THROWS_AS(inverse(s), std::domain_error);
}

TEST_CASE("0/1 matrices have the same rank over Q and a large prime field") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    QMatrix q(r, c);
    Matrix<PrimeField<1000003>> p(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const int bit = static_cast<int>(rng() % 2);
        q(i, j) = Rational(bit);
        p(i, j) = PrimeField<1000003>(bit);
      }
    CHECK(rank(q) == rank(p));
  }
}

TEST_CASE("stacking with empty operands") {
  QMatrix a(0, 3);
  QMatrix b = QMatrix::identity(3);
  CHECK(QMatrix::vstack(a, b) == b);
  CHECK(QMatrix::vstack(b, a) == b);
  CHECK(QMatrix::direct_sum(QMatrix(0, 0), b) == b);
}
