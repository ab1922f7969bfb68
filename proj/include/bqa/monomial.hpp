#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bqa/quiver.hpp"

namespace bqa {

enum class Side { Right, Left };
enum class Sides { Right, Left, Both };

using PathIndex = std::size_t;

/// A = KQ/I for an admissible ideal I generated by paths.
///
/// The relation set is stored factor-reduced and sorted, so two builds from
/// equivalent generating sets compare equal. The path basis is ordered by
/// (length, source, arrow sequence); in particular basis()[v] is e_v.
class MonomialAlgebra {
 public:
  /// Validates and builds. Throws DisconnectedQuiver, BadRelation or
  /// NotAdmissible.
  static MonomialAlgebra build(Quiver quiver, std::vector<Path> relations);

  [[nodiscard]] const Quiver& quiver() const { return quiver_; }
  [[nodiscard]] std::size_t vertex_count() const { return quiver_.vertex_count(); }
  [[nodiscard]] const std::vector<Path>& relations() const { return relations_; }
  [[nodiscard]] std::size_t max_relation_length() const { return max_relation_length_; }

  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Path>& basis() const { return basis_; }
  [[nodiscard]] const Path& path(PathIndex p) const { return basis_[p]; }
  [[nodiscard]] std::optional<PathIndex> index_of(const Path& p) const;

  /// p * a for a single arrow a, when nonzero.
  [[nodiscard]] std::optional<PathIndex> extend(PathIndex p, ArrowIndex a) const {
    const int r = extension_[p * quiver_.arrow_count() + a];
    return r < 0 ? std::nullopt : std::optional<PathIndex>(static_cast<PathIndex>(r));
  }
  /// a * p for a single arrow a, when nonzero.
  [[nodiscard]] std::optional<PathIndex> left_extend(ArrowIndex a, PathIndex p) const {
    const int r = left_extension_[p * quiver_.arrow_count() + a];
    return r < 0 ? std::nullopt : std::optional<PathIndex>(static_cast<PathIndex>(r));
  }

  /// Product on the path basis; nullopt means zero.
  [[nodiscard]] std::optional<PathIndex> multiply(PathIndex p, PathIndex q) const;
  [[nodiscard]] std::optional<Path> multiply(const Path& p, const Path& q) const;

  [[nodiscard]] const std::vector<PathIndex>& paths_from(Vertex v) const { return from_[v]; }
  [[nodiscard]] const std::vector<PathIndex>& paths_to(Vertex v) const { return to_[v]; }
  [[nodiscard]] std::vector<PathIndex> paths_between(Vertex s, Vertex t) const;

  [[nodiscard]] MonomialAlgebra opposite() const;

  [[nodiscard]] std::string path_name(PathIndex p) const { return to_string(quiver_, basis_[p]); }

  friend bool operator==(const MonomialAlgebra& a, const MonomialAlgebra& b) {
    return a.quiver_ == b.quiver_ && a.relations_ == b.relations_;
  }

 private:
  MonomialAlgebra() = default;

  Quiver quiver_;
  std::vector<Path> relations_;
  std::size_t max_relation_length_ = 0;
  std::vector<Path> basis_;
  std::map<std::vector<ArrowIndex>, PathIndex> index_;
  std::vector<int> extension_;       // [path * arrow_count + arrow]
  std::vector<int> left_extension_;  // [path * arrow_count + arrow]
  std::vector<std::vector<PathIndex>> from_;
  std::vector<std::vector<PathIndex>> to_;
};

/// Factor-reduces a relation set: drops duplicates and any path containing
/// another relation as a proper factor; the result is sorted.
std::vector<Path> reduce_relations(std::vector<Path> relations);

/// True iff the projective at v (right: e_v A, left: A e_v) has simple socle,
/// decided combinatorially: there is exactly one maximal nonzero path
/// starting (right) or ending (left) at v.
bool socle_criterion(const MonomialAlgebra& a, Vertex v, Side side);

/// Number of maximal nonzero paths starting (right) / ending (left) at v.
std::size_t maximal_path_count(const MonomialAlgebra& a, Vertex v, Side side);

bool is_qf2(const MonomialAlgebra& a, Sides sides);

/// True iff only finitely many paths avoid every relation as a factor.
bool is_admissible(const Quiver& q, const std::vector<Path>& relations);

}  // namespace bqa
