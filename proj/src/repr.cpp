#include "bqa/repr.hpp"

#include <algorithm>
#include <numeric>

#include "bqa/errors.hpp"

namespace bqa {

namespace {

QMatrix zeros(std::size_t r, std::size_t c) { return QMatrix(r, c); }

Echelon<Rational> echelon_of(QMatrix rows, std::size_t dim) {
  if (rows.rows() == 0) return {QMatrix(0, dim), {}};
  return rref(std::move(rows));
}

std::vector<std::size_t> non_pivots(const Echelon<Rational>& e, std::size_t dim) {
  std::vector<bool> piv(dim, false);
  for (auto p : e.pivots) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim; ++j)
    if (!piv[j]) out.push_back(j);
  return out;
}

std::size_t position(const std::vector<PathIndex>& v, PathIndex p) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), p) - v.begin());
}

}  // namespace

std::size_t Representation::total_dimension() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

void validate(const MonomialAlgebra& a, const Representation& m) {
  const Quiver& q = a.quiver();
  if (m.dims.size() != q.vertex_count()) throw InvalidModule("dimension vector has wrong length");
  if (m.maps.size() != q.arrow_count()) throw InvalidModule("wrong number of arrow maps");
  for (ArrowIndex arr = 0; arr < q.arrow_count(); ++arr) {
    const auto& x = q.arrow(arr);
    if (m.maps[arr].rows() != m.dims[x.source] || m.maps[arr].cols() != m.dims[x.target])
      throw InvalidModule("arrow map '" + x.id + "' has wrong shape");
  }
  for (const auto& r : a.relations()) {
    QMatrix prod = m.maps[r.arrows.front()];
    for (std::size_t k = 1; k < r.arrows.size(); ++k) prod = prod * m.maps[r.arrows[k]];
    if (!prod.is_zero()) throw InvalidModule("relation '" + to_string(q, r) + "' does not act as zero");
  }
}

bool is_morphism(const MonomialAlgebra& a, const Representation& m, const Representation& n,
                 const Morphism& f) {
  const Quiver& q = a.quiver();
  if (f.maps.size() != q.vertex_count()) return false;
  for (Vertex v = 0; v < q.vertex_count(); ++v)
    if (f.maps[v].rows() != m.dims[v] || f.maps[v].cols() != n.dims[v]) return false;
  for (ArrowIndex arr = 0; arr < q.arrow_count(); ++arr) {
    const auto& x = q.arrow(arr);
    if (!(m.maps[arr] * f.maps[x.target] == f.maps[x.source] * n.maps[arr])) return false;
  }
  return true;
}

std::vector<std::vector<PathIndex>> projective_basis(const MonomialAlgebra& a, Vertex v) {
  std::vector<std::vector<PathIndex>> b(a.vertex_count());
  for (PathIndex p : a.paths_from(v)) b[a.path(p).target].push_back(p);
  return b;
}

std::vector<std::vector<PathIndex>> injective_basis(const MonomialAlgebra& a, Vertex v) {
  std::vector<std::vector<PathIndex>> b(a.vertex_count());
  for (PathIndex p : a.paths_to(v)) b[a.path(p).source].push_back(p);
  return b;
}

Representation zero_module(const MonomialAlgebra& a) {
  Representation m;
  m.dims.assign(a.vertex_count(), 0);
  m.maps.assign(a.quiver().arrow_count(), QMatrix(0, 0));
  return m;
}

Representation standard_module(const MonomialAlgebra& a, ModuleKind kind, Vertex v) {
  const Quiver& q = a.quiver();
  Representation m;
  m.dims.assign(q.vertex_count(), 0);
  switch (kind) {
    case ModuleKind::Simple: {
      m.dims[v] = 1;
      for (const auto& x : q.arrows()) m.maps.push_back(zeros(m.dims[x.source], m.dims[x.target]));
      return m;
    }
    case ModuleKind::Projective: {
      const auto b = projective_basis(a, v);
      for (Vertex w = 0; w < q.vertex_count(); ++w) m.dims[w] = b[w].size();
      for (ArrowIndex arr = 0; arr < q.arrow_count(); ++arr) {
        const auto& x = q.arrow(arr);
        QMatrix mat = zeros(m.dims[x.source], m.dims[x.target]);
        for (std::size_t i = 0; i < b[x.source].size(); ++i)
          if (auto e = a.extend(b[x.source][i], arr)) mat(i, position(b[x.target], *e)) = 1;
        m.maps.push_back(std::move(mat));
      }
      return m;
    }
    case ModuleKind::Injective: {
      // Dual basis p* of paths p: w -> v; p* . a = q* when p = a q.
      const auto b = injective_basis(a, v);
      for (Vertex w = 0; w < q.vertex_count(); ++w) m.dims[w] = b[w].size();
      for (ArrowIndex arr = 0; arr < q.arrow_count(); ++arr) {
        const auto& x = q.arrow(arr);
        QMatrix mat = zeros(m.dims[x.source], m.dims[x.target]);
        for (std::size_t j = 0; j < b[x.target].size(); ++j)
          if (auto e = a.left_extend(arr, b[x.target][j])) mat(position(b[x.source], *e), j) = 1;
        m.maps.push_back(std::move(mat));
      }
      return m;
    }
  }
  return m;
}

Representation direct_sum(const Representation& m, const Representation& n) {
  Representation s;
  s.dims.resize(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v) s.dims[v] = m.dims[v] + n.dims[v];
  for (std::size_t k = 0; k < m.maps.size(); ++k) s.maps.push_back(QMatrix::direct_sum(m.maps[k], n.maps[k]));
  return s;
}

Representation regular_module(const MonomialAlgebra& a) {
  Representation r = zero_module(a);
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    r = direct_sum(r, standard_module(a, ModuleKind::Projective, v));
  return r;
}

std::vector<QMatrix> path_actions(const MonomialAlgebra& a, const Representation& m) {
  std::vector<QMatrix> act(a.dimension());
  for (PathIndex p = 0; p < a.dimension(); ++p) {
    const Path& path = a.path(p);
    if (path.is_trivial()) {
      act[p] = QMatrix::identity(m.dims[path.source]);
      continue;
    }
    // The basis is length-sorted, so the prefix is already computed.
    Path prefix{path.source, a.quiver().arrow(path.arrows.back()).source, path.arrows};
    prefix.arrows.pop_back();
    act[p] = act[*a.index_of(prefix)] * m.maps[path.arrows.back()];
  }
  return act;
}

Submodule submodule(const MonomialAlgebra& a, const Representation& m, const Subspaces& u) {
  const Quiver& q = a.quiver();
  Submodule s;
  s.module.dims.resize(q.vertex_count());
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    s.module.dims[v] = u[v].rank();
    s.inclusion.maps.push_back(u[v].rank() ? u[v].reduced : QMatrix(0, m.dims[v]));
  }
  for (ArrowIndex arr = 0; arr < q.arrow_count(); ++arr) {
    const auto& x = q.arrow(arr);
    QMatrix mat(u[x.source].rank(), u[x.target].rank());
    for (std::size_t i = 0; i < u[x.source].rank(); ++i) {
      QMatrix row(1, m.dims[x.source]);
      for (std::size_t j = 0; j < m.dims[x.source]; ++j) row(0, j) = u[x.source].reduced(i, j);
      const QMatrix img = row * m.maps[arr];
      const auto coords = echelon_coordinates(u[x.target], img.row(0));
      if (!coords) throw InvalidModule("subspace family is not closed under arrow '" + x.id + "'");
      for (std::size_t j = 0; j < coords->size(); ++j) mat(i, j) = (*coords)[j];
    }
    s.module.maps.push_back(std::move(mat));
  }
  return s;
}

Quotient quotient(const MonomialAlgebra& a, const Representation& m, const Subspaces& u) {
  const Quiver& q = a.quiver();
  Quotient out;
  std::vector<std::vector<std::size_t>> complement(q.vertex_count());
  out.module.dims.resize(q.vertex_count());
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    complement[v] = non_pivots(u[v], m.dims[v]);
    out.module.dims[v] = complement[v].size();
    // Projection: reduce each unit vector modulo U_v and read the complement
    // coordinates.
    QMatrix proj(m.dims[v], complement[v].size());
    for (std::size_t i = 0; i < m.dims[v]; ++i) {
      std::vector<Rational> e(m.dims[v]);
      e[i] = 1;
      const auto r = reduce_mod(u[v], std::span<const Rational>(e));
      for (std::size_t c = 0; c < complement[v].size(); ++c) proj(i, c) = r[complement[v][c]];
    }
    out.projection.maps.push_back(std::move(proj));
  }
  for (ArrowIndex arr = 0; arr < q.arrow_count(); ++arr) {
    const auto& x = q.arrow(arr);
    out.module.maps.push_back(m.maps[arr].select_rows(complement[x.source]) * out.projection.maps[x.target]);
  }
  return out;
}

Subspaces socle_subspaces(const MonomialAlgebra& a, const Representation& m) {
  const Quiver& q = a.quiver();
  Subspaces s;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    QMatrix stacked(m.dims[v], 0);
    for (ArrowIndex arr : q.arrows_from(v)) stacked = QMatrix::hstack(stacked, m.maps[arr]);
    const QMatrix kernel = stacked.cols() == 0 ? QMatrix::identity(m.dims[v]) : left_null_space(stacked);
    s.push_back(echelon_of(kernel, m.dims[v]));
  }
  return s;
}

Subspaces radical_subspaces(const MonomialAlgebra& a, const Representation& m) {
  const Quiver& q = a.quiver();
  Subspaces s;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    QMatrix stacked(0, m.dims[v]);
    for (ArrowIndex arr : q.arrows_to(v)) stacked = QMatrix::vstack(stacked, m.maps[arr]);
    s.push_back(echelon_of(stacked, m.dims[v]));
  }
  return s;
}

std::vector<std::size_t> socle_dims(const MonomialAlgebra& a, const Representation& m) {
  std::vector<std::size_t> d;
  for (const auto& e : socle_subspaces(a, m)) d.push_back(e.rank());
  return d;
}

std::vector<std::size_t> top_dims(const MonomialAlgebra& a, const Representation& m) {
  std::vector<std::size_t> d;
  const auto r = radical_subspaces(a, m);
  for (Vertex v = 0; v < a.vertex_count(); ++v) d.push_back(m.dims[v] - r[v].rank());
  return d;
}

Submodule socle(const MonomialAlgebra& a, const Representation& m) {
  return submodule(a, m, socle_subspaces(a, m));
}

Quotient top(const MonomialAlgebra& a, const Representation& m) {
  return quotient(a, m, radical_subspaces(a, m));
}

Representation mod_socle(const MonomialAlgebra& a, const Representation& m) {
  return quotient(a, m, socle_subspaces(a, m)).module;
}

Subspaces image(const Representation& codomain, const Morphism& f) {
  Subspaces s;
  for (std::size_t v = 0; v < codomain.dims.size(); ++v) s.push_back(echelon_of(f.maps[v], codomain.dims[v]));
  return s;
}

Quotient cokernel(const MonomialAlgebra& a, const Representation& codomain, const Morphism& f) {
  return quotient(a, codomain, image(codomain, f));
}

Envelope injective_envelope(const MonomialAlgebra& a, const Representation& m) {
  if (m.is_zero()) throw ZeroModule("injective envelope of the zero module");
  const std::size_t n = a.vertex_count();
  const auto soc = socle_subspaces(a, m);
  const auto act = path_actions(a, m);

  Envelope env;
  env.module = zero_module(a);
  env.multiplicity.assign(n, 0);
  std::vector<QMatrix> emb(n);
  for (Vertex w = 0; w < n; ++w) emb[w] = QMatrix(m.dims[w], 0);

  for (Vertex v = 0; v < n; ++v) {
    env.multiplicity[v] = soc[v].rank();
    if (soc[v].rank() == 0) continue;
    const Representation inj = standard_module(a, ModuleKind::Injective, v);
    const auto basis = injective_basis(a, v);
    // Coordinate functionals at the socle's pivot columns restrict to a basis
    // of D(soc(M)_v); each one induces M -> I(v), m |-> (p* |-> phi(m p)).
    for (std::size_t pivot : soc[v].pivots) {
      env.module = direct_sum(env.module, inj);
      for (Vertex w = 0; w < n; ++w) {
        QMatrix block(m.dims[w], basis[w].size());
        for (std::size_t c = 0; c < basis[w].size(); ++c) {
          const QMatrix& rho = act[basis[w][c]];
          for (std::size_t i = 0; i < m.dims[w]; ++i) block(i, c) = rho(i, pivot);
        }
        emb[w] = QMatrix::hstack(emb[w], block);
      }
    }
  }
  env.embedding.maps = std::move(emb);
  return env;
}

Cover projective_cover(const MonomialAlgebra& a, const Representation& m) {
  if (m.is_zero()) throw ZeroModule("projective cover of the zero module");
  const std::size_t n = a.vertex_count();
  const auto rad = radical_subspaces(a, m);
  const auto act = path_actions(a, m);

  Cover cov;
  cov.module = zero_module(a);
  cov.multiplicity.assign(n, 0);
  std::vector<QMatrix> proj(n);
  for (Vertex w = 0; w < n; ++w) proj[w] = QMatrix(0, m.dims[w]);

  for (Vertex v = 0; v < n; ++v) {
    // Unit vectors off the radical's pivots lift a basis of top(M)_v.
    const auto generators = non_pivots(rad[v], m.dims[v]);
    cov.multiplicity[v] = generators.size();
    if (generators.empty()) continue;
    const Representation p = standard_module(a, ModuleKind::Projective, v);
    const auto basis = projective_basis(a, v);
    for (std::size_t g : generators) {
      cov.module = direct_sum(cov.module, p);
      for (Vertex w = 0; w < n; ++w) {
        QMatrix block(basis[w].size(), m.dims[w]);
        for (std::size_t r = 0; r < basis[w].size(); ++r) {
          const QMatrix& rho = act[basis[w][r]];
          for (std::size_t j = 0; j < m.dims[w]; ++j) block(r, j) = rho(g, j);
        }
        proj[w] = QMatrix::vstack(proj[w], block);
      }
    }
  }
  cov.projection.maps = std::move(proj);
  return cov;
}

HomologicalStatus homological_status(const MonomialAlgebra& a, const Representation& m) {
  if (m.is_zero()) throw ZeroModule("homological status of the zero module");
  const auto soc = socle_dims(a, m);
  const auto tp = top_dims(a, m);
  std::size_t env = 0, cov = 0;
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    env += soc[v] * a.paths_to(v).size();
    cov += tp[v] * a.paths_from(v).size();
  }
  const auto d = m.total_dimension();
  return {cov == d, env == d};
}

std::vector<std::vector<QMatrix>> solve_intertwiners(const std::vector<std::size_t>& dims_left,
                                                     const std::vector<std::size_t>& dims_right,
                                                     const std::vector<IntertwinerAction>& actions) {
  const std::size_t n = dims_left.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + dims_left[v] * dims_right[v];
  const std::size_t unknowns = offset[n];

  QMatrix eqs(0, unknowns);
  std::vector<Rational> row(unknowns);
  for (const auto& act : actions) {
    const auto s = act.source, t = act.target;
    const QMatrix& l = *act.left;
    const QMatrix& r = *act.right;
    for (std::size_t i = 0; i < dims_left[s]; ++i)
      for (std::size_t j = 0; j < dims_right[t]; ++j) {
        std::fill(row.begin(), row.end(), Rational{});
        bool nonzero = false;
        for (std::size_t k = 0; k < dims_left[t]; ++k)
          if (!l(i, k).is_zero()) {
            row[offset[t] + k * dims_right[t] + j] += l(i, k);
            nonzero = true;
          }
        for (std::size_t k = 0; k < dims_right[s]; ++k)
          if (!r(k, j).is_zero()) {
            row[offset[s] + i * dims_right[s] + k] -= r(k, j);
            nonzero = true;
          }
        if (nonzero) eqs.append_row(row);
      }
  }
  if (eqs.cols() != unknowns) eqs = QMatrix(0, unknowns);

  const QMatrix sol = null_space(eqs);
  std::vector<std::vector<QMatrix>> out;
  for (std::size_t b = 0; b < sol.rows(); ++b) {
    std::vector<QMatrix> f;
    for (std::size_t v = 0; v < n; ++v) {
      QMatrix x(dims_left[v], dims_right[v]);
      for (std::size_t i = 0; i < dims_left[v]; ++i)
        for (std::size_t j = 0; j < dims_right[v]; ++j) x(i, j) = sol(b, offset[v] + i * dims_right[v] + j);
      f.push_back(std::move(x));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Morphism> hom_space(const MonomialAlgebra& a, const Representation& m, const Representation& n) {
  std::vector<IntertwinerAction> actions;
  for (ArrowIndex arr = 0; arr < a.quiver().arrow_count(); ++arr) {
    const auto& x = a.quiver().arrow(arr);
    actions.push_back({x.source, x.target, &m.maps[arr], &n.maps[arr]});
  }
  std::vector<Morphism> out;
  for (auto& f : solve_intertwiners(m.dims, n.dims, actions)) out.push_back({std::move(f)});
  return out;
}

bool is_faithful(const MonomialAlgebra& a, const Representation& m) {
  const auto act = path_actions(a, m);
  const std::size_t n = a.vertex_count();
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = 0; t < n; ++t) {
      const auto paths = a.paths_between(s, t);
      if (paths.empty()) continue;
      const std::size_t width = m.dims[s] * m.dims[t];
      if (width < paths.size()) return false;
      QMatrix flat(paths.size(), width);
      for (std::size_t r = 0; r < paths.size(); ++r) {
        const QMatrix& rho = act[paths[r]];
        for (std::size_t i = 0; i < m.dims[s]; ++i)
          for (std::size_t j = 0; j < m.dims[t]; ++j) flat(r, i * m.dims[t] + j) = rho(i, j);
      }
      if (rank(flat) != paths.size()) return false;
    }
  return true;
}

Representation dual(const Representation& m) {
  Representation d;
  d.dims = m.dims;
  for (const auto& x : m.maps) d.maps.push_back(x.transpose());
  return d;
}

Morphism compose(const Morphism& first, const Morphism& second) {
  Morphism c;
  for (std::size_t v = 0; v < first.maps.size(); ++v) c.maps.push_back(first.maps[v] * second.maps[v]);
  return c;
}

Morphism identity_morphism(const Representation& m) {
  Morphism id;
  for (auto d : m.dims) id.maps.push_back(QMatrix::identity(d));
  return id;
}

}  // namespace bqa
