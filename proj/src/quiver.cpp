#include "bqa/quiver.hpp"

#include <numeric>
#include <stdexcept>

#include "bqa/errors.hpp"

namespace bqa {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows) : vertex_count_(vertex_count) {
  resize_adjacency();
  for (auto& a : arrows) add_arrow(std::move(a.id), a.source, a.target);
}

void Quiver::resize_adjacency() {
  out_.resize(vertex_count_);
  in_.resize(vertex_count_);
}

ArrowIndex Quiver::add_arrow(std::string id, Vertex source, Vertex target) {
  resize_adjacency();
  if (source >= vertex_count_ || target >= vertex_count_)
    throw std::invalid_argument("arrow '" + id + "' has an endpoint out of range");
  if (find_arrow(id)) throw std::invalid_argument("duplicate arrow id '" + id + "'");
  const ArrowIndex idx = arrows_.size();
  arrows_.push_back({std::move(id), source, target});
  out_[source].push_back(idx);
  in_[target].push_back(idx);
  return idx;
}

std::optional<ArrowIndex> Quiver::find_arrow(const std::string& id) const {
  for (ArrowIndex a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].id == id) return a;
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  Quiver q(vertex_count_);
  for (const auto& a : arrows_) q.add_arrow(a.id, a.target, a.source);
  return q;
}

std::optional<Path> Path::from_arrows(const Quiver& q, std::vector<ArrowIndex> arrows) {
  if (arrows.empty()) return std::nullopt;
  for (auto a : arrows)
    if (a >= q.arrow_count()) return std::nullopt;
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (q.arrow(arrows[k]).target != q.arrow(arrows[k + 1]).source) return std::nullopt;
  Path p;
  p.source = q.arrow(arrows.front()).source;
  p.target = q.arrow(arrows.back()).target;
  p.arrows = std::move(arrows);
  return p;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

bool is_factor(const std::vector<ArrowIndex>& needle, const std::vector<ArrowIndex>& hay) {
  if (needle.size() > hay.size()) return false;
  for (std::size_t start = 0; start + needle.size() <= hay.size(); ++start) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size() && match; ++k) match = hay[start + k] == needle[k];
    if (match) return true;
  }
  return false;
}

std::string to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += ' ';
    s += q.arrow(p.arrows[k]).id;
  }
  return s;
}

bool is_connected(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& a : q.arrows()) {
    auto ra = find(a.source), rb = find(a.target);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

Shape shape_classify(const Quiver& q) {
  if (!is_connected(q)) throw DisconnectedQuiver("quiver is not connected");
  const std::size_t n = q.vertex_count();
  bool all_one = true;
  for (Vertex v = 0; v < n; ++v) {
    const auto in = q.arrows_to(v).size(), out = q.arrows_from(v).size();
    if (in > 1 || out > 1) return {ShapeKind::NotNakayamaShape, n};
    all_one = all_one && in == 1 && out == 1;
  }
  // Connected with all degrees <= 1: either one oriented cycle or one chain.
  if (all_one) return {ShapeKind::Cyclic, n};
  if (q.arrow_count() == n - 1) return {ShapeKind::Linear, n};
  return {ShapeKind::NotNakayamaShape, n};
}

std::string to_string(const Shape& s) {
  switch (s.kind) {
    case ShapeKind::Linear: return "Linear(" + std::to_string(s.n) + ")";
    case ShapeKind::Cyclic: return "Cyclic(" + std::to_string(s.n) + ")";
    case ShapeKind::NotNakayamaShape: break;
  }
  return "NotNakayamaShape";
}

Quiver permute_vertices(const Quiver& q, const std::vector<Vertex>& perm) {
  Quiver r(q.vertex_count());
  for (const auto& a : q.arrows()) r.add_arrow(a.id, perm[a.source], perm[a.target]);
  return r;
}

}  // namespace bqa
