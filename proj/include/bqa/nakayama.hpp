#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bqa/monomial.hpp"
#include "bqa/repr.hpp"

namespace bqa {

enum class KupischShape { Linear, Cyclic };

/// Kupisch series c_0..c_{n-1}: c_i = dim e_i B along the line / cycle
/// 0 -> 1 -> ... -> n-1 (-> 0).
struct KupischSeries {
  KupischShape shape = KupischShape::Linear;
  std::vector<std::size_t> lengths;

  [[nodiscard]] std::size_t size() const { return lengths.size(); }

  friend bool operator==(const KupischSeries&, const KupischSeries&) = default;
  friend auto operator<=>(const KupischSeries&, const KupischSeries&) = default;
};

/// Linear: c_{n-1} = 1 and 2 <= c_i <= c_{i+1} + 1. Cyclic: c_i >= 2 and
/// c_{i+1 mod n} >= c_i - 1.
bool is_valid(const KupischSeries& ks);

/// Canonical representative: identity for linear series, the
/// lexicographically largest rotation for cyclic ones.
KupischSeries canonical_rotation(const KupischSeries& ks);

/// Equality up to rotation, the isomorphism criterion for Nakayama algebras.
bool same_up_to_rotation(const KupischSeries& a, const KupischSeries& b);

/// `linear:3,2,1` / `cyclic:3,2`. Throws SyntaxError (grammar) or
/// InvalidKupisch (admissibility).
KupischSeries parse_kupisch(const std::string& text);
std::string to_string(const KupischSeries& ks);

/// Throws InvalidKupisch.
MonomialAlgebra kupisch_to_algebra(const KupischSeries& ks);

/// nullopt unless the quiver is an oriented line or cycle. Linear series are
/// read from the source; cyclic ones are returned in canonical rotation.
std::optional<KupischSeries> algebra_to_kupisch(const MonomialAlgebra& a);

bool is_selfinjective_kupisch(const KupischSeries& ks);

/// All valid series with n <= max_n and every c_i <= max_c, cyclic ones up to
/// rotation. Ordered by shape (linear first), then n, then lengths.
std::vector<KupischSeries> enumerate_kupisch(std::size_t max_n, std::size_t max_c);

/// Indecomposable module over a Nakayama algebra, determined by its top vertex
/// and its length.
struct Uniserial {
  Vertex top = 0;
  std::size_t length = 0;

  friend bool operator==(const Uniserial&, const Uniserial&) = default;
  friend auto operator<=>(const Uniserial&, const Uniserial&) = default;
};

std::string to_string(const Uniserial& u);

/// Throws NotNakayama when the quiver is not a line or a cycle.
void require_nakayama(const MonomialAlgebra& b);

/// e_top B / (paths of length >= length). Throws std::invalid_argument when
/// length is 0 or exceeds dim P(top).
Representation uniserial_module(const MonomialAlgebra& b, const Uniserial& u);

Uniserial projective_uniserial(const MonomialAlgebra& b, Vertex v);
Uniserial injective_uniserial(const MonomialAlgebra& b, Vertex v);

/// Every indecomposable B-module, sorted by (top, length).
std::vector<Uniserial> all_uniserials(const MonomialAlgebra& b);

/// Distinct indecomposables among P(i), I(i) and nonzero I(i)/soc, sorted.
/// Throws NotNakayama.
std::vector<Uniserial> allowed_summands(const MonomialAlgebra& b);

/// Projectives and injectives, deduplicated and sorted.
std::vector<Uniserial> mandatory_summands(const MonomialAlgebra& b);

/// Every basic generator-cogenerator drawn from allowed_summands(b), or from
/// all uniserials when `full_universe` is set. Each candidate is sorted.
/// Throws NotNakayama.
std::vector<std::vector<Uniserial>> gen_cogen_candidates(const MonomialAlgebra& b, bool full_universe = false);

}  // namespace bqa
