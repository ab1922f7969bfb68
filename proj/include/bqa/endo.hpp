#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bqa/basic_algebra.hpp"
#include "bqa/monomial.hpp"
#include "bqa/nakayama.hpp"
#include "bqa/quiver.hpp"
#include "bqa/repr.hpp"

namespace bqa {

/// End_B(M) for M the direct sum of the given indecomposables.
///
/// The basis element tagged (left = i, right = j) is a morphism M_j -> M_i and
/// the product is composition, x * y = "first y, then x". Hence e_i C is
/// Hom_B(M, M_i). Each End(M_i) is based as {id} plus a basis of its
/// trace-zero part, which is its radical when End(M_i) is local.
///
/// Throws NotBasic when two summands are isomorphic and NotLocal when some
/// End(M_i) is not local.
BasicAlgebra endomorphism_algebra(const MonomialAlgebra& b, const std::vector<Representation>& summands);

/// End_B(M) with summands given as uniserials over a Nakayama algebra.
BasicAlgebra endomorphism_algebra(const MonomialAlgebra& b, const std::vector<Uniserial>& summands);

/// Monomial algebra re-housed as structure constants; basis = path basis.
BasicAlgebra from_monomial(const MonomialAlgebra& a);

/// f A f for f = sum of e_v over `vertices`, with basis the nonzero paths
/// between those vertices.
BasicAlgebra idempotent_subalgebra(const MonomialAlgebra& a, const std::vector<Vertex>& vertices);

/// Indecomposables with local endomorphism rings are isomorphic iff some
/// composite g o f of basis morphisms has nonzero trace.
bool is_isomorphic_indecomposable(const MonomialAlgebra& b, const Representation& m, const Representation& n);

/// One vertex per idempotent; dim e_i (rad/rad^2) e_j arrows i -> j.
Quiver gabriel_quiver(const BasicAlgebra& c);

/// Every connected component of the Gabriel quiver is a line or a cycle.
bool is_nakayama_algebra(const BasicAlgebra& c);

/// socle_dims[i][j] = dim (soc(e_i C) cap e_i C e_j) for the right side, and
/// dim (soc(C e_i) cap e_j C e_i) for the left side.
std::vector<std::vector<std::size_t>> socle_block_dims(const BasicAlgebra& c, Side side);

bool is_qf2_algebra(const BasicAlgebra& c, Sides sides = Sides::Both);

/// Every e_i C has simple socle and the socles are pairwise non-isomorphic.
bool is_selfinjective(const BasicAlgebra& c);

/// Kupisch series of a connected Nakayama BasicAlgebra (canonical rotation).
std::optional<KupischSeries> kupisch_of_endo(const BasicAlgebra& c);

/// Connected components of the Gabriel quiver, each listed in vertex order.
std::vector<std::vector<std::size_t>> components(const BasicAlgebra& c);

/// Components written as a product, e.g. "K x Nakayama linear:2,1".
std::string describe_components(const BasicAlgebra& c);

}  // namespace bqa
