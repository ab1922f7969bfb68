#include "bqa/homological.hpp"

#include <map>
#include <stdexcept>

#include "bqa/endo.hpp"
#include "bqa/errors.hpp"

namespace bqa {

std::string DomDim::str() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::AtLeast: return ">=" + std::to_string(value);
    case Kind::Infinity: break;
  }
  return "inf";
}

Coresolution injective_coresolution(const MonomialAlgebra& a, std::size_t cutoff) {
  if (cutoff == 0) throw std::invalid_argument("coresolution cutoff must be at least 1");
  Coresolution c;
  c.truncated_at = cutoff;
  Representation current = regular_module(a);
  while (c.terms.size() < cutoff) {
    Envelope env = injective_envelope(a, current);
    Quotient coker = cokernel(a, env.module, env.embedding);
    c.terms.push_back(std::move(env.module));
    c.multiplicity.push_back(std::move(env.multiplicity));
    c.embeddings.push_back(std::move(env.embedding));
    current = coker.module;
    c.cokernels.push_back(std::move(coker.module));
    if (current.is_zero()) {
      c.terminated = true;
      break;
    }
  }
  return c;
}

namespace {

std::vector<bool> injective_is_projective(const MonomialAlgebra& a) {
  std::vector<bool> out;
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    out.push_back(homological_status(a, standard_module(a, ModuleKind::Injective, v)).is_projective);
  return out;
}

}  // namespace

bool is_selfinjective(const MonomialAlgebra& a) {
  return projective_injective_vertices(a, Side::Right).size() == a.vertex_count();
}

DomDim dominant_dimension(const MonomialAlgebra& a, std::size_t cutoff) {
  if (is_selfinjective(a)) return DomDim::infinity();
  const auto proj = injective_is_projective(a);
  Representation current = regular_module(a);
  for (std::size_t k = 0; k < cutoff; ++k) {
    // Only the socle of C_k decides whether I_k is projective; the envelope
    // itself is needed to move on to C_{k+1}.
    const auto soc = socle_dims(a, current);
    for (Vertex v = 0; v < a.vertex_count(); ++v)
      if (soc[v] > 0 && !proj[v]) return DomDim::finite(k);
    if (k + 1 == cutoff) break;
    Envelope env = injective_envelope(a, current);
    current = cokernel(a, env.module, env.embedding).module;
    // A finite coresolution by projective-injectives splits, which would make
    // A selfinjective; that case was handled above.
    if (current.is_zero()) return DomDim::infinity();
  }
  return DomDim::at_least(cutoff);
}

std::vector<Vertex> projective_injective_vertices(const MonomialAlgebra& a, Side side) {
  if (side == Side::Left) return projective_injective_vertices(a.opposite(), Side::Right);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    if (homological_status(a, standard_module(a, ModuleKind::Projective, v)).is_injective) out.push_back(v);
  return out;
}

std::optional<std::vector<Vertex>> minimal_faithful_proj_inj(const MonomialAlgebra& a, Side side) {
  if (side == Side::Left) return minimal_faithful_proj_inj(a.opposite(), Side::Right);
  const auto vertices = projective_injective_vertices(a, Side::Right);
  if (vertices.empty()) return std::nullopt;
  Representation sum = zero_module(a);
  for (Vertex v : vertices) sum = direct_sum(sum, standard_module(a, ModuleKind::Projective, v));
  if (!is_faithful(a, sum)) return std::nullopt;
  return vertices;
}

BasicAlgebra base_algebra(const MonomialAlgebra& a) {
  const auto f = minimal_faithful_proj_inj(a, Side::Left);
  if (!f) throw DomDimZero("no faithful projective-injective module");
  return idempotent_subalgebra(a, *f);
}

DoubleCentralizer double_centralizer_check(const MonomialAlgebra& a) {
  const auto f = minimal_faithful_proj_inj(a, Side::Left);
  if (!f) return {};
  const auto& vertices = *f;
  // Af has basis the nonzero paths ending in supp(f); its summand Af e_t
  // (paths ending at t) is the t-th "vertex space" for the right fAf-action.
  std::vector<std::vector<PathIndex>> space;
  std::map<PathIndex, std::size_t> pos;
  for (Vertex t : vertices) {
    space.push_back(a.paths_to(t));
    for (std::size_t k = 0; k < space.back().size(); ++k) pos[space.back()[k]] = k;
  }
  std::vector<std::size_t> dims;
  for (const auto& s : space) dims.push_back(s.size());

  std::vector<QMatrix> matrices;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t s = 0; s < vertices.size(); ++s)
    for (std::size_t t = 0; t < vertices.size(); ++t)
      for (PathIndex q : a.paths_between(vertices[s], vertices[t])) {
        if (a.path(q).is_trivial()) continue;
        QMatrix r(dims[s], dims[t]);
        for (std::size_t i = 0; i < dims[s]; ++i)
          if (auto prod = a.multiply(space[s][i], q)) r(i, pos.at(*prod)) = 1;
        matrices.push_back(std::move(r));
        ends.emplace_back(s, t);
      }
  std::vector<IntertwinerAction> actions;
  for (std::size_t k = 0; k < matrices.size(); ++k)
    actions.push_back({ends[k].first, ends[k].second, &matrices[k], &matrices[k]});
  const auto commutant = solve_intertwiners(dims, dims, actions);

  DoubleCentralizer dc;
  dc.dim_algebra = a.dimension();
  dc.dim_endomorphisms = commutant.size();
  dc.holds = commutant.size() == a.dimension();
  return dc;
}

}  // namespace bqa
