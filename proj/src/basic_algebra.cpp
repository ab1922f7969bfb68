#include "bqa/basic_algebra.hpp"

#include <map>
#include <stdexcept>

#include "bqa/matrix.hpp"

namespace bqa {

namespace {

void axpy(std::vector<Rational>& acc, const Rational& s, const SparseVector& v) {
  for (const auto& [i, c] : v) acc[i] += s * c;
}

}  // namespace

BasicAlgebra::BasicAlgebra(std::size_t idempotent_count, std::vector<BasisElement> basis,
                           std::vector<std::size_t> idempotents, std::vector<std::vector<SparseVector>> products)
    : basis_(std::move(basis)), idempotents_(std::move(idempotents)), products_(std::move(products)) {
  if (idempotents_.size() != idempotent_count) throw std::invalid_argument("idempotent count mismatch");
  if (products_.size() != basis_.size()) throw std::invalid_argument("product table has wrong size");
  is_idempotent_.assign(basis_.size(), false);
  for (auto e : idempotents_) is_idempotent_[e] = true;
  for (std::size_t x = 0; x < basis_.size(); ++x)
    if (!is_idempotent_[x]) radical_.push_back(x);
}

std::vector<std::size_t> BasicAlgebra::row(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < basis_.size(); ++x)
    if (basis_[x].left == i) out.push_back(x);
  return out;
}

std::vector<std::size_t> BasicAlgebra::column(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < basis_.size(); ++x)
    if (basis_[x].right == i) out.push_back(x);
  return out;
}

std::vector<std::size_t> BasicAlgebra::block(std::size_t left, std::size_t right) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < basis_.size(); ++x)
    if (basis_[x].left == left && basis_[x].right == right) out.push_back(x);
  return out;
}

BasicAlgebra BasicAlgebra::corner(const std::vector<std::size_t>& summands) const {
  std::map<std::size_t, std::size_t> new_summand;
  for (std::size_t k = 0; k < summands.size(); ++k) new_summand[summands[k]] = k;
  std::vector<std::size_t> keep;
  std::vector<long> new_index(basis_.size(), -1);
  // Keep the blocks in the order of the new summand numbering.
  for (std::size_t l = 0; l < summands.size(); ++l)
    for (std::size_t r = 0; r < summands.size(); ++r)
      for (std::size_t x : block(summands[l], summands[r])) {
        new_index[x] = static_cast<long>(keep.size());
        keep.push_back(x);
      }
  std::vector<BasisElement> basis;
  for (std::size_t x : keep) {
    BasisElement b = basis_[x];
    b.left = new_summand[b.left];
    b.right = new_summand[b.right];
    basis.push_back(std::move(b));
  }
  std::vector<std::size_t> idem;
  for (std::size_t s : summands) idem.push_back(static_cast<std::size_t>(new_index[idempotents_[s]]));
  std::vector<std::vector<SparseVector>> prod(keep.size(), std::vector<SparseVector>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      for (const auto& [i, c] : products_[keep[a]][keep[b]]) {
        if (new_index[i] < 0) throw std::logic_error("corner algebra is not closed");
        prod[a][b].emplace_back(static_cast<std::size_t>(new_index[i]), c);
      }
  return {summands.size(), std::move(basis), std::move(idem), std::move(prod)};
}

bool BasicAlgebra::is_associative() const {
  const std::size_t n = basis_.size();
  std::vector<Rational> lhs(n), rhs(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::fill(lhs.begin(), lhs.end(), Rational{});
        std::fill(rhs.begin(), rhs.end(), Rational{});
        for (const auto& [i, c] : products_[x][y]) axpy(lhs, c, products_[i][z]);
        for (const auto& [i, c] : products_[y][z]) axpy(rhs, c, products_[x][i]);
        if (lhs != rhs) return false;
      }
  return true;
}

bool BasicAlgebra::radical_is_ideal() const {
  for (std::size_t x = 0; x < basis_.size(); ++x)
    for (std::size_t y = 0; y < basis_.size(); ++y) {
      if (basis_[x].right != basis_[y].left && !products_[x][y].empty()) return false;
      const bool in_rad = !is_idempotent_[x] || !is_idempotent_[y];
      for (const auto& [i, c] : products_[x][y]) {
        if (basis_[i].left != basis_[x].left || basis_[i].right != basis_[y].right) return false;
        if (in_rad && is_idempotent_[i] && !c.is_zero()) return false;
      }
    }
  return true;
}

bool BasicAlgebra::radical_is_nilpotent() const {
  const std::size_t n = basis_.size();
  // Current power rad^k as row-echelon span in basis coordinates.
  QMatrix power(0, n);
  for (std::size_t x : radical_) {
    std::vector<Rational> v(n);
    v[x] = 1;
    power.append_row(v);
  }
  if (power.rows() == 0) return true;
  for (std::size_t k = 0; k <= n; ++k) {
    QMatrix next(0, n);
    for (std::size_t r = 0; r < power.rows(); ++r)
      for (std::size_t y : radical_) {
        std::vector<Rational> v(n);
        bool nonzero = false;
        for (std::size_t x = 0; x < n; ++x) {
          if (power(r, x).is_zero()) continue;
          for (const auto& [i, c] : products_[x][y]) {
            v[i] += power(r, x) * c;
            nonzero = true;
          }
        }
        if (nonzero) next.append_row(v);
      }
    if (next.rows() == 0) return true;
    auto e = rref(std::move(next));
    if (e.rank() == 0) return true;
    power = std::move(e.reduced);
  }
  return false;
}

}  // namespace bqa
