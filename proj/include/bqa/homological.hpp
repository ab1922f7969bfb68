#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bqa/basic_algebra.hpp"
#include "bqa/monomial.hpp"
#include "bqa/repr.hpp"

namespace bqa {

/// Minimal injective coresolution 0 -> A -> I_0 -> I_1 -> ... of the regular
/// right module.
struct Coresolution {
  std::vector<Representation> terms;                  // I_k
  std::vector<std::vector<std::size_t>> multiplicity;  // I_k = sum_v I(v)^{multiplicity[k][v]}
  std::vector<Morphism> embeddings;                   // C_k -> I_k with C_0 = A
  std::vector<Representation> cokernels;              // C_{k+1} = I_k / C_k
  std::size_t truncated_at = 0;                       // cutoff used
  bool terminated = false;                            // last cokernel is zero
};

/// Stops after `cutoff` terms or at the first zero cokernel. Throws
/// std::invalid_argument when cutoff is 0.
Coresolution injective_coresolution(const MonomialAlgebra& a, std::size_t cutoff);

struct DomDim {
  enum class Kind { Finite, AtLeast, Infinity };
  Kind kind = Kind::Finite;
  std::size_t value = 0;

  static DomDim finite(std::size_t v) { return {Kind::Finite, v}; }
  static DomDim at_least(std::size_t v) { return {Kind::AtLeast, v}; }
  static DomDim infinity() { return {Kind::Infinity, 0}; }

  /// domdim >= k; an AtLeast(c) result answers only for k <= c.
  [[nodiscard]] bool reaches(std::size_t k) const {
    return kind == Kind::Infinity || value >= k;
  }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const DomDim&, const DomDim&) = default;
};

inline constexpr std::size_t kDefaultDomDimCutoff = 12;

DomDim dominant_dimension(const MonomialAlgebra& a, std::size_t cutoff = kDefaultDomDimCutoff);

/// Regular right module is injective, i.e. every P(v) is injective.
bool is_selfinjective(const MonomialAlgebra& a);

/// Vertices v whose projective (right: e_v A, left: A e_v) is injective.
std::vector<Vertex> projective_injective_vertices(const MonomialAlgebra& a, Side side);

/// The vertex set of the minimal faithful projective-injective module on the
/// given side, or nullopt when the sum of all projective-injectives is not
/// faithful.
std::optional<std::vector<Vertex>> minimal_faithful_proj_inj(const MonomialAlgebra& a, Side side);

/// fAf for the minimal faithful projective-injective left module Af.
/// Throws DomDimZero.
BasicAlgebra base_algebra(const MonomialAlgebra& a);

struct DoubleCentralizer {
  bool holds = false;
  std::optional<std::size_t> dim_algebra;
  std::optional<std::size_t> dim_endomorphisms;  // dim End_{fAf}(Af)
};

DoubleCentralizer double_centralizer_check(const MonomialAlgebra& a);

}  // namespace bqa
