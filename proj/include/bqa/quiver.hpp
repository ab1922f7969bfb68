#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bqa {

using Vertex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string id;
  Vertex source = 0;
  Vertex target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver. Vertices are 0..vertex_count-1; arrows keep their declaration
/// order, and everything downstream refers to arrows by that index.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::size_t vertex_count) : vertex_count_(vertex_count) { resize_adjacency(); }
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  /// Appends an arrow and returns its index. Throws std::invalid_argument on a
  /// duplicate id or an out-of-range endpoint.
  ArrowIndex add_arrow(std::string id, Vertex source, Vertex target);

  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
  [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] const Arrow& arrow(ArrowIndex a) const { return arrows_[a]; }
  [[nodiscard]] std::optional<ArrowIndex> find_arrow(const std::string& id) const;

  [[nodiscard]] const std::vector<ArrowIndex>& arrows_from(Vertex v) const { return out_[v]; }
  [[nodiscard]] const std::vector<ArrowIndex>& arrows_to(Vertex v) const { return in_[v]; }

  /// Same vertices, every arrow reversed (ids kept).
  [[nodiscard]] Quiver opposite() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arrows_ == b.arrows_;
  }

 private:
  void resize_adjacency();

  std::size_t vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowIndex>> out_;
  std::vector<std::vector<ArrowIndex>> in_;
};

/// A path in a quiver. An empty arrow list is the trivial path e_v at `source`.
/// Composition is left to right: the path "a b" first traverses a, then b.
struct Path {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<ArrowIndex> arrows;

  static Path trivial(Vertex v) { return {v, v, {}}; }
  static Path of_arrow(const Quiver& q, ArrowIndex a) {
    return {q.arrow(a).source, q.arrow(a).target, {a}};
  }
  /// Builds a path from an arrow sequence; nullopt if it is not composable.
  /// An empty sequence is rejected since its vertex would be ambiguous.
  static std::optional<Path> from_arrows(const Quiver& q, std::vector<ArrowIndex> arrows);

  [[nodiscard]] std::size_t length() const { return arrows.size(); }
  [[nodiscard]] bool is_trivial() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// p followed by q, or nullopt when target(p) != source(q).
std::optional<Path> compose(const Path& p, const Path& q);

/// True iff `needle` occurs as a contiguous block of `hay`'s arrows.
bool is_factor(const std::vector<ArrowIndex>& needle, const std::vector<ArrowIndex>& hay);

/// Arrow ids separated by spaces; a trivial path prints as e<v>, 1-based.
std::string to_string(const Quiver& q, const Path& p);

bool is_connected(const Quiver& q);

enum class ShapeKind { Linear, Cyclic, NotNakayamaShape };

struct Shape {
  ShapeKind kind = ShapeKind::NotNakayamaShape;
  std::size_t n = 0;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Line / cycle recognition. Throws DisconnectedQuiver.
Shape shape_classify(const Quiver& q);

std::string to_string(const Shape& s);

/// Relabels vertices: vertex v becomes perm[v]. Arrow order is preserved.
Quiver permute_vertices(const Quiver& q, const std::vector<Vertex>& perm);

}  // namespace bqa
