#include "bqa/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bqa {

namespace {

using Pair = std::pair<Vertex, Vertex>;
using Word = std::vector<ArrowIndex>;

std::vector<Pair> sorted_pairs(const Quiver& q, const std::vector<Vertex>& perm) {
  std::vector<Pair> out;
  for (const auto& a : q.arrows()) out.emplace_back(perm[a.source], perm[a.target]);
  std::sort(out.begin(), out.end());
  return out;
}

// All arrow maps old index -> new index realising `perm`, where new indices
// are positions in the sorted arrow list; parallel arrows may go to any slot
// of their class.
void arrow_maps_for(const Quiver& q, const std::vector<Vertex>& perm, const std::vector<Pair>& target_list,
                    const std::function<void(const std::vector<ArrowIndex>&)>& visit) {
  std::map<Pair, std::vector<ArrowIndex>> slots;
  for (ArrowIndex k = 0; k < target_list.size(); ++k) slots[target_list[k]].push_back(k);
  std::map<Pair, std::vector<ArrowIndex>> members;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a)
    members[{perm[q.arrow(a).source], perm[q.arrow(a).target]}].push_back(a);

  std::vector<std::pair<std::vector<ArrowIndex>, std::vector<ArrowIndex>>> classes;
  for (auto& [pair, arrows] : members) classes.emplace_back(arrows, slots.at(pair));

  std::vector<ArrowIndex> map(q.arrow_count());
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      visit(map);
      return;
    }
    auto slot = classes[c].second;
    do {
      for (std::size_t k = 0; k < slot.size(); ++k) map[classes[c].first[k]] = slot[k];
      rec(c + 1);
    } while (std::next_permutation(slot.begin(), slot.end()));
  };
  rec(0);
}

std::vector<Word> map_relations(const std::vector<Word>& rels, const std::vector<ArrowIndex>& map) {
  std::vector<Word> out;
  out.reserve(rels.size());
  for (const auto& r : rels) {
    Word w;
    w.reserve(r.size());
    for (auto a : r) w.push_back(map[a]);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_of(const std::vector<Path>& rels) {
  std::vector<Word> out;
  for (const auto& r : rels) out.push_back(r.arrows);
  std::sort(out.begin(), out.end());
  return out;
}

Quiver quiver_from_pairs(std::size_t n, const std::vector<Pair>& pairs) {
  Quiver q(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) q.add_arrow("a" + std::to_string(k + 1), pairs[k].first, pairs[k].second);
  return q;
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t len) {
  std::vector<Path> frontier;
  for (Vertex v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (ArrowIndex a : q.arrows_from(p.target)) {
        Path e{p.source, q.arrow(a).target, p.arrows};
        e.arrows.push_back(a);
        next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
  return frontier;
}

}  // namespace

void CorpusBounds::validate() const {
  if (max_vertices < 1) throw std::invalid_argument("max_vertices must be at least 1");
  if (max_relation_length < 2) throw std::invalid_argument("max_relation_length must be at least 2");
}

std::string CorpusBounds::str() const {
  return "(" + std::to_string(max_vertices) + "," + std::to_string(max_arrows) + "," +
         std::to_string(max_relation_length) + ")";
}

std::vector<Quiver> enumerate_quivers(std::size_t max_vertices, std::size_t max_arrows) {
  std::vector<Quiver> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    // Arrow multisets as nondecreasing sequences over the n*n cells.
    std::vector<std::vector<Pair>> found;
    std::vector<Pair> cells;
    for (Vertex s = 0; s < n; ++s)
      for (Vertex t = 0; t < n; ++t) cells.emplace_back(s, t);
    std::vector<Pair> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      const Quiver q = quiver_from_pairs(n, cur);
      if (is_connected(q)) {
        bool minimal = true;
        for (const auto& perm : perms)
          if (sorted_pairs(q, perm) < cur) {
            minimal = false;
            break;
          }
        if (minimal) found.push_back(cur);
      }
      if (cur.size() == max_arrows) return;
      for (std::size_t c = from; c < cells.size(); ++c) {
        cur.push_back(cells[c]);
        rec(c);
        cur.pop_back();
      }
    };
    rec(0);
    std::sort(found.begin(), found.end());
    for (const auto& f : found) out.push_back(quiver_from_pairs(n, f));
  }
  return out;
}

std::vector<std::vector<ArrowIndex>> arrow_automorphisms(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), 0);
  const auto base = sorted_pairs(q, id);
  std::vector<std::vector<ArrowIndex>> out;
  std::vector<Vertex> perm = id;
  do {
    if (sorted_pairs(q, perm) != base) continue;
    arrow_maps_for(q, perm, base, [&](const std::vector<ArrowIndex>& m) { out.push_back(m); });
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void enumerate_relation_sets(const Quiver& q, std::size_t max_len,
                             const std::function<void(std::vector<Path>)>& sink) {
  std::vector<Path> candidates;
  for (std::size_t len = 2; len <= max_len; ++len) {
    auto p = paths_of_length(q, len);
    candidates.insert(candidates.end(), p.begin(), p.end());
  }
  const auto autos = arrow_automorphisms(q);

  std::vector<Path> chosen;
  // Candidates are length-sorted, so a candidate is compatible with the
  // antichain iff no chosen (shorter or equal) relation is a factor of it.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == candidates.size()) {
      if (!is_admissible(q, chosen)) return;
      const auto mine = words_of(chosen);
      for (const auto& m : autos)
        if (map_relations(mine, m) < mine) return;
      sink(chosen);
      return;
    }
    // Adding every still-compatible candidate is the strongest possible
    // completion; if even that leaves infinitely many paths, prune.
    {
      std::vector<Path> completion = chosen;
      for (std::size_t j = k; j < candidates.size(); ++j) completion.push_back(candidates[j]);
      if (!is_admissible(q, completion)) return;
    }
    const Path& c = candidates[k];
    bool compatible = true;
    for (const auto& r : chosen)
      if (is_factor(r.arrows, c.arrows)) {
        compatible = false;
        break;
      }
    if (compatible) {
      chosen.push_back(c);
      rec(k + 1);
      chosen.pop_back();
    }
    rec(k + 1);
  };
  rec(0);
}

void enumerate_monomial_algebras(const CorpusBounds& bounds, const std::function<void(const MonomialAlgebra&)>& sink) {
  bounds.validate();
  for (const auto& q : enumerate_quivers(bounds.max_vertices, bounds.max_arrows))
    enumerate_relation_sets(q, bounds.max_relation_length,
                            [&](std::vector<Path> rels) { sink(MonomialAlgebra::build(q, std::move(rels))); });
}

std::vector<MonomialAlgebra> enumerate_monomial_algebras(const CorpusBounds& bounds) {
  std::vector<MonomialAlgebra> out;
  enumerate_monomial_algebras(bounds, [&](const MonomialAlgebra& a) { out.push_back(a); });
  return out;
}

std::string canonical_form(const MonomialAlgebra& a) {
  const Quiver& q = a.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<Word> rels;
  for (const auto& r : a.relations()) rels.push_back(r.arrows);

  std::vector<Pair> best_arrows;
  std::vector<Word> best_rels;
  bool have = false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const auto pairs = sorted_pairs(q, perm);
    if (have && pairs > best_arrows) continue;
    if (!have || pairs < best_arrows) {
      best_arrows = pairs;
      best_rels.clear();
      have = false;
    }
    arrow_maps_for(q, perm, pairs, [&](const std::vector<ArrowIndex>& m) {
      auto mapped = map_relations(rels, m);
      if (!have || mapped < best_rels) {
        best_rels = std::move(mapped);
        have = true;
      }
    });
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::string s = "v" + std::to_string(n) + ";A";
  for (const auto& [x, y] : best_arrows) s += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  s += ";R";
  for (const auto& w : best_rels) {
    s += "[";
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(w[k]);
    }
    s += "]";
  }
  return s;
}

}  // namespace bqa
