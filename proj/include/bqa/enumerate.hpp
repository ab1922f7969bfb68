#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bqa/monomial.hpp"
#include "bqa/quiver.hpp"

namespace bqa {

struct CorpusBounds {
  std::size_t max_vertices = 4;
  std::size_t max_arrows = 5;
  std::size_t max_relation_length = 3;

  /// Throws std::invalid_argument unless max_relation_length >= 2 and
  /// max_vertices >= 1.
  void validate() const;
  [[nodiscard]] std::string str() const;
};

/// Connected quivers with at most the given numbers of vertices and arrows,
/// one per isomorphism class. Each is in canonical form: arrows sorted by
/// (source, target) and the sorted arrow list is minimal over all vertex
/// relabelings. Ordered by vertex count, then arrow list.
std::vector<Quiver> enumerate_quivers(std::size_t max_vertices, std::size_t max_arrows);

/// Automorphisms of a canonical quiver as arrow permutations: vertex
/// permutations fixing the arrow multiset, composed with permutations of
/// parallel arrows.
std::vector<std::vector<ArrowIndex>> arrow_automorphisms(const Quiver& q);

/// Every admissible factor-antichain of paths of length 2..max_len on q, one
/// per orbit of arrow_automorphisms(q), in deterministic order.
void enumerate_relation_sets(const Quiver& q, std::size_t max_len,
                             const std::function<void(std::vector<Path>)>& sink);

/// Streams the whole corpus in canonical order.
void enumerate_monomial_algebras(const CorpusBounds& bounds, const std::function<void(const MonomialAlgebra&)>& sink);
std::vector<MonomialAlgebra> enumerate_monomial_algebras(const CorpusBounds& bounds);

/// Minimal encoding over all vertex and parallel-arrow relabelings of
/// (vertex count, sorted arrow list, sorted relation list). Equal strings iff
/// the presentations are isomorphic under such relabelings.
std::string canonical_form(const MonomialAlgebra& a);

}  // namespace bqa
