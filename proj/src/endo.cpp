#include "bqa/endo.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bqa/errors.hpp"

namespace bqa {

namespace {

std::vector<Rational> flatten(const Morphism& f) {
  std::vector<Rational> v;
  for (const auto& m : f.maps)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& x : m.row(i)) v.push_back(x);
  return v;
}

Rational trace(const Morphism& f) {
  Rational t;
  for (const auto& m : f.maps)
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Morphism combine(const std::vector<Morphism>& basis, std::span<const Rational> coeffs) {
  Morphism out = basis.front();
  for (auto& m : out.maps) m = QMatrix(m.rows(), m.cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t v = 0; v < out.maps.size(); ++v) out.maps[v] = out.maps[v] + coeffs[k] * basis[k].maps[v];
  }
  return out;
}

// Coordinates with respect to a fixed linearly independent family of vectors.
class Coordinates {
 public:
  explicit Coordinates(const std::vector<std::vector<Rational>>& family) : size_(family.size()) {
    if (family.empty()) return;
    QMatrix b(0, family.front().size());
    for (const auto& v : family) b.append_row(v);
    pivots_ = rref(b).pivots;
    if (pivots_.size() != size_) throw std::logic_error("hom basis is not independent");
    inverse_ = inverse(b.select_cols(pivots_));
  }

  [[nodiscard]] SparseVector solve(const std::vector<Rational>& x, std::size_t first_index) const {
    SparseVector out;
    if (size_ == 0) {
      for (const auto& y : x)
        if (!y.is_zero()) throw std::logic_error("vector outside an empty hom space");
      return out;
    }
    std::vector<Rational> c(size_);
    for (std::size_t j = 0; j < size_; ++j) {
      const Rational& xj = x[pivots_[j]];
      if (xj.is_zero()) continue;
      for (std::size_t k = 0; k < size_; ++k)
        if (!inverse_(j, k).is_zero()) c[k] += xj * inverse_(j, k);
    }
    for (std::size_t k = 0; k < size_; ++k)
      if (!c[k].is_zero()) out.emplace_back(first_index + k, c[k]);
    return out;
  }

 private:
  std::size_t size_;
  std::vector<std::size_t> pivots_;
  QMatrix inverse_;
};

}  // namespace

bool is_isomorphic_indecomposable(const MonomialAlgebra& b, const Representation& m, const Representation& n) {
  if (m.dims != n.dims) return false;
  const auto there = hom_space(b, m, n);
  const auto back = hom_space(b, n, m);
  for (const auto& f : there)
    for (const auto& g : back)
      if (!trace(compose(f, g)).is_zero()) return true;
  return false;
}

BasicAlgebra endomorphism_algebra(const MonomialAlgebra& b, const std::vector<Representation>& summands) {
  const std::size_t n = summands.size();
  for (const auto& m : summands) {
    validate(b, m);
    if (m.is_zero()) throw InvalidModule("zero summand");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (is_isomorphic_indecomposable(b, summands[i], summands[j]))
        throw NotBasic("summands " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are isomorphic");

  // hom[i][j]: basis of Hom(M_j, M_i), the block tagged (left i, right j).
  std::vector<std::vector<std::vector<Morphism>>> hom(n, std::vector<std::vector<Morphism>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto raw = hom_space(b, summands[j], summands[i]);
      if (i != j) {
        hom[i][j] = std::move(raw);
        continue;
      }
      QMatrix traces(1, raw.size());
      for (std::size_t k = 0; k < raw.size(); ++k) traces(0, k) = trace(raw[k]);
      std::vector<Morphism> based{identity_morphism(summands[i])};
      const QMatrix kernel = null_space(traces);
      for (std::size_t r = 0; r < kernel.rows(); ++r) based.push_back(combine(raw, kernel.row(r)));
      hom[i][j] = std::move(based);
    }

  std::vector<BasisElement> basis;
  std::vector<std::vector<std::size_t>> first(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> idempotents(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      first[i][j] = basis.size();
      if (i == j) idempotents[i] = basis.size();
      for (std::size_t k = 0; k < hom[i][j].size(); ++k)
        basis.push_back({i, j,
                         "Hom(M" + std::to_string(j + 1) + ",M" + std::to_string(i + 1) + ")#" + std::to_string(k)});
    }

  std::vector<std::vector<Coordinates>> coords;
  for (std::size_t i = 0; i < n; ++i) {
    coords.emplace_back();
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Rational>> fam;
      for (const auto& f : hom[i][j]) fam.push_back(flatten(f));
      coords.back().emplace_back(fam);
    }
  }

  const std::size_t dim = basis.size();
  std::vector<std::vector<SparseVector>> products(dim, std::vector<SparseVector>(dim));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < hom[i][j].size(); ++x)
          for (std::size_t y = 0; y < hom[j][k].size(); ++y) {
            // x: M_j -> M_i, y: M_k -> M_j; x * y = first y, then x.
            const Morphism c = compose(hom[j][k][y], hom[i][j][x]);
            products[first[i][j] + x][first[j][k] + y] = coords[i][k].solve(flatten(c), first[i][k]);
          }

  BasicAlgebra c(n, std::move(basis), std::move(idempotents), std::move(products));
  for (std::size_t i = 0; i < n; ++i) {
    const BasicAlgebra local = c.corner({i});
    if (!local.radical_is_ideal() || !local.radical_is_nilpotent())
      throw NotLocal("End(M" + std::to_string(i + 1) + ") is not local");
  }
  return c;
}

BasicAlgebra endomorphism_algebra(const MonomialAlgebra& b, const std::vector<Uniserial>& summands) {
  std::vector<Representation> mods;
  for (const auto& u : summands) mods.push_back(uniserial_module(b, u));
  return endomorphism_algebra(b, mods);
}

BasicAlgebra idempotent_subalgebra(const MonomialAlgebra& a, const std::vector<Vertex>& vertices) {
  std::map<Vertex, std::size_t> pos;
  for (std::size_t k = 0; k < vertices.size(); ++k) pos[vertices[k]] = k;
  std::vector<PathIndex> paths;
  std::map<PathIndex, std::size_t> index;
  std::vector<BasisElement> basis;
  for (PathIndex p = 0; p < a.dimension(); ++p) {
    const Path& path = a.path(p);
    if (!pos.count(path.source) || !pos.count(path.target)) continue;
    index[p] = paths.size();
    paths.push_back(p);
    basis.push_back({pos[path.source], pos[path.target], a.path_name(p)});
  }
  std::vector<std::size_t> idem;
  for (Vertex v : vertices) idem.push_back(index.at(v));
  std::vector<std::vector<SparseVector>> products(paths.size(), std::vector<SparseVector>(paths.size()));
  for (std::size_t x = 0; x < paths.size(); ++x)
    for (std::size_t y = 0; y < paths.size(); ++y)
      if (auto r = a.multiply(paths[x], paths[y])) products[x][y] = {{index.at(*r), Rational{1}}};
  return {vertices.size(), std::move(basis), std::move(idem), std::move(products)};
}

BasicAlgebra from_monomial(const MonomialAlgebra& a) {
  std::vector<Vertex> all(a.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return idempotent_subalgebra(a, all);
}

Quiver gabriel_quiver(const BasicAlgebra& c) {
  const std::size_t n = c.idempotent_count();
  Quiver q(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < n; ++r) {
      const auto blk = c.block(l, r);
      std::size_t rad_dim = 0;
      for (auto x : blk) rad_dim += !c.is_idempotent_element(x);
      if (rad_dim == 0) continue;
      std::map<std::size_t, std::size_t> col;
      for (std::size_t k = 0; k < blk.size(); ++k) col[blk[k]] = k;
      QMatrix sq(0, blk.size());
      for (std::size_t x : c.radical_basis()) {
        if (c.element(x).left != l) continue;
        for (std::size_t y : c.radical_basis()) {
          if (c.element(y).right != r || c.element(y).left != c.element(x).right) continue;
          const auto& pr = c.product(x, y);
          if (pr.empty()) continue;
          std::vector<Rational> v(blk.size());
          for (const auto& [i, coef] : pr) v[col.at(i)] = coef;
          sq.append_row(v);
        }
      }
      const std::size_t arrows = rad_dim - (sq.rows() ? rank(sq) : 0);
      for (std::size_t k = 0; k < arrows; ++k)
        q.add_arrow("x" + std::to_string(l + 1) + "_" + std::to_string(r + 1) + "_" + std::to_string(k), l, r);
    }
  return q;
}

std::vector<std::vector<std::size_t>> components(const BasicAlgebra& c) {
  const Quiver q = gabriel_quiver(c);
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<std::size_t> stack{s}, members;
    comp[s] = out.size();
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      members.push_back(v);
      auto visit = [&](std::size_t w) {
        if (comp[w] == n) {
          comp[w] = out.size();
          stack.push_back(w);
        }
      };
      for (auto arr : q.arrows_from(v)) visit(q.arrow(arr).target);
      for (auto arr : q.arrows_to(v)) visit(q.arrow(arr).source);
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_nakayama_algebra(const BasicAlgebra& c) {
  const Quiver q = gabriel_quiver(c);
  for (const auto& comp : components(c)) {
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < comp.size(); ++k) pos[comp[k]] = k;
    Quiver sub(comp.size());
    for (const auto& a : q.arrows())
      if (pos.count(a.source)) sub.add_arrow(a.id, pos[a.source], pos[a.target]);
    if (shape_classify(sub).kind == ShapeKind::NotNakayamaShape) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> socle_block_dims(const BasicAlgebra& c, Side side) {
  const std::size_t n = c.idempotent_count();
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Right: x in e_i C e_j with x * rad = 0. Left: x in e_j C e_i with rad * x = 0.
      const auto unknowns = side == Side::Right ? c.block(i, j) : c.block(j, i);
      if (unknowns.empty()) continue;
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> column;
      std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(unknowns.size());
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const std::size_t x = unknowns[u];
        for (std::size_t r : c.radical_basis()) {
          const auto& pr = side == Side::Right ? c.product(x, r) : c.product(r, x);
          for (const auto& [k, coef] : pr) {
            auto [it, inserted] = column.try_emplace({r, k}, column.size());
            rows[u].emplace_back(it->second, coef);
          }
        }
      }
      QMatrix m(unknowns.size(), column.size());
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        for (const auto& [col, coef] : rows[u]) m(u, col) += coef;
      dims[i][j] = unknowns.size() - (column.empty() ? 0 : rank(m));
    }
  return dims;
}

bool is_qf2_algebra(const BasicAlgebra& c, Sides sides) {
  auto simple_socles = [&](Side side) {
    for (const auto& row : socle_block_dims(c, side))
      if (std::accumulate(row.begin(), row.end(), std::size_t{0}) != 1) return false;
    return true;
  };
  if (sides != Sides::Left && !simple_socles(Side::Right)) return false;
  if (sides != Sides::Right && !simple_socles(Side::Left)) return false;
  return true;
}

bool is_selfinjective(const BasicAlgebra& c) {
  const auto dims = socle_block_dims(c, Side::Right);
  const std::size_t n = c.idempotent_count();
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::accumulate(dims[i].begin(), dims[i].end(), std::size_t{0}) != 1) return false;
    const auto j = static_cast<std::size_t>(std::find(dims[i].begin(), dims[i].end(), 1) - dims[i].begin());
    if (hit[j]) return false;
    hit[j] = true;
  }
  return true;
}

std::optional<KupischSeries> kupisch_of_endo(const BasicAlgebra& c) {
  if (c.idempotent_count() == 0 || components(c).size() != 1 || !is_nakayama_algebra(c)) return std::nullopt;
  const Quiver q = gabriel_quiver(c);
  const Shape shape = shape_classify(q);
  KupischSeries ks;
  ks.shape = shape.kind == ShapeKind::Linear ? KupischShape::Linear : KupischShape::Cyclic;
  Vertex v = 0;
  if (shape.kind == ShapeKind::Linear)
    while (!q.arrows_to(v).empty()) v = q.arrow(q.arrows_to(v).front()).source;
  for (std::size_t k = 0; k < q.vertex_count(); ++k) {
    ks.lengths.push_back(c.row(v).size());
    if (!q.arrows_from(v).empty()) v = q.arrow(q.arrows_from(v).front()).target;
  }
  return canonical_rotation(ks);
}

std::string describe_components(const BasicAlgebra& f) {
  const auto comps = components(f);
  std::string s;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const BasicAlgebra part = f.corner(comps[k]);
    std::string name;
    if (part.dimension() == 1) {
      name = "K";
    } else if (auto ks = kupisch_of_endo(part)) {
      name = "Nakayama " + to_string(*ks);
    } else {
      name = "dim " + std::to_string(part.dimension());
    }
    s += (k ? " x " : "") + name;
  }
  return s;
}


}  // namespace bqa
