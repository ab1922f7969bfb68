#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bqa/matrix.hpp"
#include "bqa/monomial.hpp"

namespace bqa {

/// Right module over a MonomialAlgebra as a quiver representation.
///
/// dims[v] = dim M e_v. maps[a] for an arrow a: s -> t is a dims[s] x dims[t]
/// matrix acting on row vectors, m |-> m * maps[a]. A representation does not
/// hold a reference to its algebra; every operation takes the algebra
/// explicitly and validate() checks compatibility.
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<QMatrix> maps;

  [[nodiscard]] std::size_t total_dimension() const;
  [[nodiscard]] bool is_zero() const { return total_dimension() == 0; }
};

/// Per-vertex matrices f_v : M e_v -> N e_v (dims_M[v] x dims_N[v]).
struct Morphism {
  std::vector<QMatrix> maps;
};

/// Throws InvalidModule if M has wrong shapes or violates a relation.
void validate(const MonomialAlgebra& a, const Representation& m);

bool is_morphism(const MonomialAlgebra& a, const Representation& m, const Representation& n,
                 const Morphism& f);

enum class ModuleKind { Projective, Injective, Simple };

/// Indices of basis paths spanning each vertex space of P(v) (paths from v,
/// grouped by target) or I(v) (duals of paths to v, grouped by source).
std::vector<std::vector<PathIndex>> projective_basis(const MonomialAlgebra& a, Vertex v);
std::vector<std::vector<PathIndex>> injective_basis(const MonomialAlgebra& a, Vertex v);

Representation standard_module(const MonomialAlgebra& a, ModuleKind kind, Vertex v);
Representation zero_module(const MonomialAlgebra& a);
/// A_A = direct sum of all P(v), in vertex order.
Representation regular_module(const MonomialAlgebra& a);
Representation direct_sum(const Representation& m, const Representation& n);

/// Action of basis path p on M: a dims[source] x dims[target] matrix.
std::vector<QMatrix> path_actions(const MonomialAlgebra& a, const Representation& m);

/// Per-vertex subspace given by the rows of an echelon form.
using Subspaces = std::vector<Echelon<Rational>>;

struct Submodule {
  Representation module;
  Morphism inclusion;
};

struct Quotient {
  Representation module;
  Morphism projection;
};

/// Restriction of M to a family of subspaces closed under the arrow maps.
Submodule submodule(const MonomialAlgebra& a, const Representation& m, const Subspaces& u);
Quotient quotient(const MonomialAlgebra& a, const Representation& m, const Subspaces& u);

/// soc(M)_v = intersection of the kernels of all arrow maps leaving v.
Subspaces socle_subspaces(const MonomialAlgebra& a, const Representation& m);
/// rad(M)_v = sum of the images of all arrow maps entering v.
Subspaces radical_subspaces(const MonomialAlgebra& a, const Representation& m);

std::vector<std::size_t> socle_dims(const MonomialAlgebra& a, const Representation& m);
std::vector<std::size_t> top_dims(const MonomialAlgebra& a, const Representation& m);

Submodule socle(const MonomialAlgebra& a, const Representation& m);
Quotient top(const MonomialAlgebra& a, const Representation& m);
/// M / soc(M); the zero module is a valid result.
Representation mod_socle(const MonomialAlgebra& a, const Representation& m);

/// Image of f as a family of subspaces of the codomain.
Subspaces image(const Representation& codomain, const Morphism& f);
Quotient cokernel(const MonomialAlgebra& a, const Representation& codomain, const Morphism& f);

struct Envelope {
  Representation module;  // direct sum of I(v)^{multiplicity[v]}, in vertex order
  Morphism embedding;
  std::vector<std::size_t> multiplicity;
};

struct Cover {
  Representation module;  // direct sum of P(v)^{multiplicity[v]}, in vertex order
  Morphism projection;
  std::vector<std::size_t> multiplicity;
};

/// Throws ZeroModule on the zero module.
Envelope injective_envelope(const MonomialAlgebra& a, const Representation& m);
Cover projective_cover(const MonomialAlgebra& a, const Representation& m);

struct HomologicalStatus {
  bool is_projective = false;
  bool is_injective = false;
};

/// Throws ZeroModule.
HomologicalStatus homological_status(const MonomialAlgebra& a, const Representation& m);

/// Basis of Hom_A(M, N).
std::vector<Morphism> hom_space(const MonomialAlgebra& a, const Representation& m, const Representation& n);

/// Zero right annihilator, checked by linear independence of path actions.
bool is_faithful(const MonomialAlgebra& a, const Representation& m);

/// D(M) = Hom_K(M, K) as a right module over the opposite algebra.
Representation dual(const Representation& m);

/// Solutions of left[k] * F[target] == F[source] * right[k] for every action k,
/// with F[v] a dims_left[v] x dims_right[v] matrix. Shared by hom spaces and
/// the double-centraliser commutant.
struct IntertwinerAction {
  Vertex source = 0;
  Vertex target = 0;
  const QMatrix* left = nullptr;   // dims_left[source] x dims_left[target]
  const QMatrix* right = nullptr;  // dims_right[source] x dims_right[target]
};
std::vector<std::vector<QMatrix>> solve_intertwiners(const std::vector<std::size_t>& dims_left,
                                                     const std::vector<std::size_t>& dims_right,
                                                     const std::vector<IntertwinerAction>& actions);

Morphism compose(const Morphism& first, const Morphism& second);
Morphism identity_morphism(const Representation& m);

std::string dims_string(const std::vector<std::size_t>& dims);

}  // namespace bqa
