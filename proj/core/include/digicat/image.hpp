#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace digicat {

using Coord = int;
using PointCoords = std::vector<Coord>;
using Index = int;
using Edge = std::pair<Index, Index>;  // always stored with first < second

PointCoords negated(const PointCoords& p);

/// How an image's edge set was produced. Edges are always materialized at
/// construction; the kind is retained so constructions can be re-audited.
class AdjacencyKind {
 public:
  enum class Tag { ck, explicit_edges, product, quotient };

  static AdjacencyKind ck(int k);
  static AdjacencyKind explicit_edges(std::vector<Edge> edges);
  static AdjacencyKind product(AdjacencyKind left, AdjacencyKind right,
                               std::vector<Edge> edges);
  static AdjacencyKind quotient(AdjacencyKind base, std::vector<Edge> edges);

  Tag tag() const { return tag_; }
  int ck_k() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const AdjacencyKind& left() const { return *left_; }
  const AdjacencyKind& right() const { return *right_; }
  std::string describe() const;

 private:
  AdjacencyKind() = default;
  Tag tag_ = Tag::ck;
  int k_ = 0;
  std::vector<Edge> edges_;
  std::shared_ptr<const AdjacencyKind> left_, right_;
};

/// True iff distinct lattice points x, y differ by exactly 1 in at most k
/// coordinates and agree in all others.
bool ck_adjacent(const PointCoords& x, const PointCoords& y, int k);

/// A finite set of lattice points with a symmetric irreflexive adjacency
/// relation. Points are kept sorted lexicographically, so point indices,
/// edge lists and serializations are deterministic. Immutable once built.
class DigitalImage {
 public:
  DigitalImage() = default;

  const std::string& label() const { return label_; }
  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<PointCoords>& points() const { return points_; }
  const PointCoords& point(Index i) const { return points_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const AdjacencyKind& kind() const { return kind_; }

  bool adjacent(Index i, Index j) const {
    return adj_bits_[static_cast<std::size_t>(i) * points_.size() + j];
  }
  /// Equal-or-adjacent; the "closeness" relation used by paths and homotopy.
  bool close(Index i, Index j) const { return i == j || adjacent(i, j); }
  const std::vector<Index>& neighbors(Index i) const { return neighbors_[i]; }

  /// Index of a point, or -1 when absent.
  Index index_of(const PointCoords& p) const;

  /// Index of the negated point; throws if the image is not closed under
  /// negation.
  Index negation_of(Index i) const;
  bool negation_closed() const;

  bool same_point_set(const DigitalImage& other) const {
    return points_ == other.points_;
  }

  friend DigitalImage make_image(std::string label,
                                 std::vector<PointCoords> points,
                                 AdjacencyKind kind);

 private:
  std::string label_;
  int dimension_ = 0;
  std::vector<PointCoords> points_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Index>> neighbors_;
  std::vector<bool> adj_bits_;
  AdjacencyKind kind_ = AdjacencyKind::ck(1);

  void finalize(std::vector<Edge> edges);
};

/// Builds an image from points and an adjacency rule. Points are sorted and
/// validated (distinct, common dimension). For `ck`, the edge set is exactly
/// the pairs satisfying the c_k rule; `explicit_edges` indices refer to the
/// sorted point order.
DigitalImage make_image(std::string label, std::vector<PointCoords> points,
                        AdjacencyKind kind);

/// Cartesian product with the maximal adjacency rule: (x,y) ~ (x',y') iff
/// each coordinate pair is equal or adjacent and the pairs are not both equal.
DigitalImage product(const DigitalImage& x, const DigitalImage& y,
                     std::string label = "");

/// For an image built by `product`, splits a point index into factor indices.
/// Valid because product points are enumerated row-major over sorted factors.
inline std::pair<Index, Index> product_split(Index i, int right_size) {
  return {i / right_size, i % right_size};
}

bool is_connected(const DigitalImage& x);

/// The subimage induced on a subset of points, with the local->base map.
struct SubImage {
  DigitalImage image;
  std::vector<Index> to_base;  // local index -> base index
};
SubImage induced(const DigitalImage& base, const std::vector<Index>& members,
                 std::string label = "");

}  // namespace digicat
