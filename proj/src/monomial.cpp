#include "bqa/monomial.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "bqa/errors.hpp"

namespace bqa {

namespace {

bool has_relation_suffix(const std::vector<ArrowIndex>& word, const std::vector<Path>& relations) {
  for (const auto& r : relations) {
    const auto len = r.arrows.size();
    if (len <= word.size() && std::equal(r.arrows.begin(), r.arrows.end(), word.end() - static_cast<std::ptrdiff_t>(len)))
      return true;
  }
  return false;
}

// The basis is infinite iff some arbitrarily long path avoids every relation.
// Whether an extension hits a relation only depends on the last (L - 1)
// arrows, L the longest relation, so that suffix (plus the end vertex) is a
// finite state; the basis is infinite iff a reachable state lies on a cycle.
bool has_infinite_basis(const Quiver& q, const std::vector<Path>& relations, std::size_t max_len) {
  using State = std::pair<Vertex, std::vector<ArrowIndex>>;
  const std::size_t keep = max_len == 0 ? 0 : max_len - 1;
  std::map<State, int> color;  // 1 = on stack, 2 = done

  struct Frame {
    State state;
    std::size_t next = 0;
  };

  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    State start{v, {}};
    if (color.count(start)) continue;
    std::vector<Frame> stack;
    stack.push_back({start});
    color[start] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& out = q.arrows_from(f.state.first);
      if (f.next == out.size()) {
        color[f.state] = 2;
        stack.pop_back();
        continue;
      }
      const ArrowIndex a = out[f.next++];
      std::vector<ArrowIndex> word = f.state.second;
      word.push_back(a);
      if (has_relation_suffix(word, relations)) continue;
      if (word.size() > keep) word.erase(word.begin(), word.end() - static_cast<std::ptrdiff_t>(keep));
      State next{q.arrow(a).target, std::move(word)};
      auto it = color.find(next);
      if (it == color.end()) {
        color[next] = 1;
        stack.push_back({std::move(next)});
      } else if (it->second == 1) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_admissible(const Quiver& q, const std::vector<Path>& relations) {
  std::size_t max_len = 0;
  for (const auto& r : relations) max_len = std::max(max_len, r.length());
  return !has_infinite_basis(q, relations, max_len);
}

std::vector<Path> reduce_relations(std::vector<Path> relations) {
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  std::vector<Path> reduced;
  for (const auto& r : relations) {
    bool redundant = false;
    for (const auto& s : relations)
      if (s.arrows.size() < r.arrows.size() && is_factor(s.arrows, r.arrows)) {
        redundant = true;
        break;
      }
    if (!redundant) reduced.push_back(r);
  }
  return reduced;
}

MonomialAlgebra MonomialAlgebra::build(Quiver quiver, std::vector<Path> relations) {
  if (!is_connected(quiver)) throw DisconnectedQuiver("quiver is not connected");
  for (const auto& r : relations) {
    if (r.length() < 2) throw BadRelation("relation '" + to_string(quiver, r) + "' has length < 2");
    auto checked = Path::from_arrows(quiver, r.arrows);
    if (!checked || checked->source != r.source || checked->target != r.target)
      throw BadRelation("relation '" + to_string(quiver, r) + "' is not a path");
  }

  MonomialAlgebra a;
  a.quiver_ = std::move(quiver);
  a.relations_ = reduce_relations(std::move(relations));
  for (const auto& r : a.relations_) a.max_relation_length_ = std::max(a.max_relation_length_, r.length());

  const Quiver& q = a.quiver_;
  if (has_infinite_basis(q, a.relations_, a.max_relation_length_))
    throw NotAdmissible("relation-free paths of unbounded length exist");

  std::vector<Path> basis;
  std::vector<Path> frontier;
  for (Vertex v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (ArrowIndex arr : q.arrows_from(p.target)) {
        Path e{p.source, q.arrow(arr).target, p.arrows};
        e.arrows.push_back(arr);
        if (!has_relation_suffix(e.arrows, a.relations_)) next.push_back(std::move(e));
      }
      basis.push_back(p);
    }
    frontier = std::move(next);
  }
  std::stable_sort(basis.begin(), basis.end(), [](const Path& x, const Path& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    if (x.source != y.source) return x.source < y.source;
    return x.arrows < y.arrows;
  });
  a.basis_ = std::move(basis);

  const std::size_t n_arrows = q.arrow_count();
  a.from_.assign(q.vertex_count(), {});
  a.to_.assign(q.vertex_count(), {});
  for (PathIndex i = 0; i < a.basis_.size(); ++i) {
    const auto& p = a.basis_[i];
    if (!p.is_trivial()) a.index_[p.arrows] = i;
    a.from_[p.source].push_back(i);
    a.to_[p.target].push_back(i);
  }
  a.extension_.assign(a.basis_.size() * n_arrows, -1);
  a.left_extension_.assign(a.basis_.size() * n_arrows, -1);
  for (PathIndex i = 0; i < a.basis_.size(); ++i) {
    const auto& p = a.basis_[i];
    for (ArrowIndex arr : q.arrows_from(p.target)) {
      std::vector<ArrowIndex> w = p.arrows;
      w.push_back(arr);
      if (auto it = a.index_.find(w); it != a.index_.end())
        a.extension_[i * n_arrows + arr] = static_cast<int>(it->second);
    }
    for (ArrowIndex arr : q.arrows_to(p.source)) {
      std::vector<ArrowIndex> w{arr};
      w.insert(w.end(), p.arrows.begin(), p.arrows.end());
      if (auto it = a.index_.find(w); it != a.index_.end())
        a.left_extension_[i * n_arrows + arr] = static_cast<int>(it->second);
    }
  }
  return a;
}

std::optional<PathIndex> MonomialAlgebra::index_of(const Path& p) const {
  if (p.is_trivial()) {
    if (p.source < vertex_count() && p.target == p.source) return p.source;
    return std::nullopt;
  }
  auto it = index_.find(p.arrows);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<PathIndex> MonomialAlgebra::multiply(PathIndex p, PathIndex q) const {
  const Path& left = basis_[p];
  const Path& right = basis_[q];
  if (left.target != right.source) return std::nullopt;
  PathIndex cur = p;
  for (ArrowIndex arr : right.arrows) {
    auto next = extend(cur, arr);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::optional<Path> MonomialAlgebra::multiply(const Path& p, const Path& q) const {
  auto i = index_of(p), j = index_of(q);
  if (!i || !j) return std::nullopt;
  auto r = multiply(*i, *j);
  if (!r) return std::nullopt;
  return basis_[*r];
}

std::vector<PathIndex> MonomialAlgebra::paths_between(Vertex s, Vertex t) const {
  std::vector<PathIndex> out;
  for (PathIndex p : from_[s])
    if (basis_[p].target == t) out.push_back(p);
  return out;
}

MonomialAlgebra MonomialAlgebra::opposite() const {
  std::vector<Path> rels;
  rels.reserve(relations_.size());
  for (const auto& r : relations_) {
    Path o{r.target, r.source, r.arrows};
    std::reverse(o.arrows.begin(), o.arrows.end());
    rels.push_back(std::move(o));
  }
  return build(quiver_.opposite(), std::move(rels));
}

std::size_t maximal_path_count(const MonomialAlgebra& a, Vertex v, Side side) {
  const Quiver& q = a.quiver();
  std::size_t count = 0;
  if (side == Side::Right) {
    for (PathIndex p : a.paths_from(v)) {
      bool maximal = true;
      for (ArrowIndex arr : q.arrows_from(a.path(p).target))
        if (a.extend(p, arr)) {
          maximal = false;
          break;
        }
      count += maximal;
    }
  } else {
    for (PathIndex p : a.paths_to(v)) {
      bool maximal = true;
      for (ArrowIndex arr : q.arrows_to(a.path(p).source))
        if (a.left_extend(arr, p)) {
          maximal = false;
          break;
        }
      count += maximal;
    }
  }
  return count;
}

bool socle_criterion(const MonomialAlgebra& a, Vertex v, Side side) {
  return maximal_path_count(a, v, side) == 1;
}

bool is_qf2(const MonomialAlgebra& a, Sides sides) {
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    if (sides != Sides::Left && !socle_criterion(a, v, Side::Right)) return false;
    if (sides != Sides::Right && !socle_criterion(a, v, Side::Left)) return false;
  }
  return true;
}

}  // namespace bqa
