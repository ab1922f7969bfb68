#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bqa/rational.hpp"

namespace bqa {

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Basis element x with e_left * x * e_right = x.
struct BasisElement {
  std::size_t left = 0;
  std::size_t right = 0;
  std::string label;
};

/// Finite-dimensional basic algebra given by structure constants.
///
/// The basis contains one primitive idempotent per summand; every other
/// basis element lies in the radical, so rad(C) is spanned by the
/// non-idempotent elements and C / rad(C) = K^idempotent_count.
class BasicAlgebra {
 public:
  BasicAlgebra() = default;
  BasicAlgebra(std::size_t idempotent_count, std::vector<BasisElement> basis, std::vector<std::size_t> idempotents,
               std::vector<std::vector<SparseVector>> products);

  [[nodiscard]] std::size_t idempotent_count() const { return idempotents_.size(); }
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] const BasisElement& element(std::size_t x) const { return basis_[x]; }
  [[nodiscard]] const std::vector<BasisElement>& basis() const { return basis_; }
  [[nodiscard]] std::size_t idempotent(std::size_t i) const { return idempotents_[i]; }
  [[nodiscard]] bool is_idempotent_element(std::size_t x) const { return is_idempotent_[x]; }
  [[nodiscard]] const std::vector<std::size_t>& radical_basis() const { return radical_; }

  /// x * y in basis coordinates (empty = zero).
  [[nodiscard]] const SparseVector& product(std::size_t x, std::size_t y) const { return products_[x][y]; }

  /// Basis elements x with e_i x = x, i.e. a basis of e_i C.
  [[nodiscard]] std::vector<std::size_t> row(std::size_t i) const;
  /// Basis elements x with x e_i = x, i.e. a basis of C e_i.
  [[nodiscard]] std::vector<std::size_t> column(std::size_t i) const;
  [[nodiscard]] std::vector<std::size_t> block(std::size_t left, std::size_t right) const;

  /// e C e for e the sum of the listed idempotents, renumbered in list order.
  [[nodiscard]] BasicAlgebra corner(const std::vector<std::size_t>& summands) const;

  /// Exhaustive associativity check of the structure constants.
  [[nodiscard]] bool is_associative() const;
  /// rad^k = 0 for some k <= dimension.
  [[nodiscard]] bool radical_is_nilpotent() const;
  /// rad * rad lies in rad, and idempotents act as the tags say.
  [[nodiscard]] bool radical_is_ideal() const;

 private:
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> idempotents_;
  std::vector<bool> is_idempotent_;
  std::vector<std::size_t> radical_;
  std::vector<std::vector<SparseVector>> products_;
};

}  // namespace bqa
