#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bqa/io.hpp"
#include "bqa/monomial.hpp"
#include "bqa/nakayama.hpp"
#include "bqa/quiver.hpp"

namespace bqa::test {

inline MonomialAlgebra alg(const std::string& text) { return parse_algebra(text); }

inline MonomialAlgebra kupisch(const std::string& spec) { return kupisch_to_algebra(parse_kupisch(spec)); }

// Path algebra of 1 -> 2 -> ... -> n (0-based internally).
inline MonomialAlgebra linear_path_algebra(std::size_t n) {
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = n - i;
  return kupisch_to_algebra({KupischShape::Linear, c});
}

inline MonomialAlgebra dual_numbers() { return alg("vertices: 1\narrows: x 1 1\nrelations: x x\n"); }

// Independent path enumeration: every arrow word of length <= max_len that is
// a path and has no relation as a contiguous factor.
inline std::vector<std::vector<ArrowIndex>> brute_force_basis(const Quiver& q, const std::vector<Path>& rels,
                                                              std::size_t max_len) {
  auto has_factor = [&](const std::vector<ArrowIndex>& w) {
    for (const auto& r : rels) {
      const auto& f = r.arrows;
      if (f.size() > w.size()) continue;
      for (std::size_t s = 0; s + f.size() <= w.size(); ++s)
        if (std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(s))) return true;
    }
    return false;
  };
  std::vector<std::vector<ArrowIndex>> out;
  std::vector<std::vector<ArrowIndex>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<ArrowIndex>> next;
    for (const auto& w : layer)
      for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
        if (!w.empty() && q.arrow(w.back()).target != q.arrow(a).source) continue;
        auto e = w;
        e.push_back(a);
        if (!has_factor(e)) next.push_back(e);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::vector<Vertex> one_based(std::vector<Vertex> vs) {
  for (auto& v : vs) ++v;
  return vs;
}

// Small hand-picked algebras covering loops, parallel arrows, cycles and
// non-Nakayama shapes.
inline std::vector<MonomialAlgebra> sample_algebras() {
  std::vector<MonomialAlgebra> out;
  out.push_back(alg("vertices: 1\n"));
  out.push_back(dual_numbers());
  out.push_back(alg("vertices: 1\narrows: x 1 1\nrelations: x x x\n"));
  out.push_back(alg("vertices: 1\narrows: x 1 1; y 1 1\nrelations: x x; y y; x y\n"));
  out.push_back(alg("vertices: 2\narrows: a 1 2; b 1 2\n"));
  out.push_back(alg("vertices: 2\narrows: a 1 2; b 2 1\nrelations: a b a; b a b\n"));
  out.push_back(alg("vertices: 3\narrows: a 1 2; b 2 3; c 3 1\nrelations: a b; c a\n"));
  out.push_back(alg("vertices: 3\narrows: a 1 2; b 1 3\n"));
  out.push_back(alg("vertices: 3\narrows: a 2 1; b 3 1\n"));
  out.push_back(alg("vertices: 2\narrows: a 1 2; x 2 2\nrelations: x x; a x\n"));
  out.push_back(alg("vertices: 2\narrows: a 1 2; x 2 2\nrelations: x x\n"));
  out.push_back(paper_example_algebra());
  for (const auto& ks : enumerate_kupisch(3, 4)) out.push_back(kupisch_to_algebra(ks));
  return out;
}

}  // namespace bqa::test
