#include "digicat/image.hpp"

#include <algorithm>
#include <cstdlib>

#include "digicat/error.hpp"

namespace digicat {

PointCoords negated(const PointCoords& p) {
  PointCoords q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
  return q;
}

AdjacencyKind AdjacencyKind::ck(int k) {
  AdjacencyKind a;
  a.tag_ = Tag::ck;
  a.k_ = k;
  return a;
}

AdjacencyKind AdjacencyKind::explicit_edges(std::vector<Edge> edges) {
  AdjacencyKind a;
  a.tag_ = Tag::explicit_edges;
  a.edges_ = std::move(edges);
  return a;
}

AdjacencyKind AdjacencyKind::product(AdjacencyKind left, AdjacencyKind right,
                                     std::vector<Edge> edges) {
  AdjacencyKind a;
  a.tag_ = Tag::product;
  a.left_ = std::make_shared<const AdjacencyKind>(std::move(left));
  a.right_ = std::make_shared<const AdjacencyKind>(std::move(right));
  a.edges_ = std::move(edges);
  return a;
}

AdjacencyKind AdjacencyKind::quotient(AdjacencyKind base,
                                      std::vector<Edge> edges) {
  AdjacencyKind a;
  a.tag_ = Tag::quotient;
  a.left_ = std::make_shared<const AdjacencyKind>(std::move(base));
  a.edges_ = std::move(edges);
  return a;
}

std::string AdjacencyKind::describe() const {
  switch (tag_) {
    case Tag::ck:
      return "c" + std::to_string(k_);
    case Tag::explicit_edges:
      return "explicit";
    case Tag::product:
      return "product(" + left_->describe() + "," + right_->describe() + ")";
    case Tag::quotient:
      return "quotient(" + left_->describe() + ")";
  }
  return "?";
}

bool ck_adjacent(const PointCoords& x, const PointCoords& y, int k) {
  if (x == y) return false;
  int changed = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y[i]) continue;
    if (std::abs(x[i] - y[i]) != 1) return false;
    ++changed;
  }
  return changed <= k;
}

Index DigitalImage::index_of(const PointCoords& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return -1;
  return static_cast<Index>(it - points_.begin());
}

Index DigitalImage::negation_of(Index i) const {
  Index j = index_of(negated(points_[i]));
  if (j < 0) throw_invalid("image '" + label_ + "' is not closed under negation");
  return j;
}

bool DigitalImage::negation_closed() const {
  for (int i = 0; i < size(); ++i)
    if (index_of(negated(points_[i])) < 0) return false;
  return true;
}

void DigitalImage::finalize(std::vector<Edge> edges) {
  const std::size_t n = points_.size();
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  adj_bits_.assign(n * n, false);
  neighbors_.assign(n, {});
  for (auto& [i, j] : edges) {
    if (i == j) throw_invalid("self-loop edge in image '" + label_ + "'");
    if (i < 0 || j < 0 || i >= size() || j >= size())
      throw_invalid("edge endpoint out of range in image '" + label_ + "'");
    adj_bits_[static_cast<std::size_t>(i) * n + j] = true;
    adj_bits_[static_cast<std::size_t>(j) * n + i] = true;
    neighbors_[i].push_back(j);
    neighbors_[j].push_back(i);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  edges_ = std::move(edges);
}

DigitalImage make_image(std::string label, std::vector<PointCoords> points,
                        AdjacencyKind kind) {
  if (points.empty()) throw_invalid("image '" + label + "' has no points");
  const std::size_t dim = points.front().size();
  if (dim == 0) throw_invalid("image '" + label + "' has dimension 0");
  for (const auto& p : points)
    if (p.size() != dim)
      throw_invalid("points of image '" + label + "' have mixed dimensions");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw_invalid("duplicate points in image '" + label + "'");

  DigitalImage img;
  img.label_ = std::move(label);
  img.dimension_ = static_cast<int>(dim);
  img.points_ = std::move(points);
  img.kind_ = kind;

  std::vector<Edge> edges;
  switch (kind.tag()) {
    case AdjacencyKind::Tag::ck: {
      const int k = kind.ck_k();
      if (k < 1 || k > static_cast<int>(dim))
        throw_invalid("c_k adjacency needs 1 <= k <= dimension, got k=" +
                      std::to_string(k));
      for (int i = 0; i < img.size(); ++i)
        for (int j = i + 1; j < img.size(); ++j)
          if (ck_adjacent(img.points_[i], img.points_[j], k))
            edges.emplace_back(i, j);
      break;
    }
    case AdjacencyKind::Tag::explicit_edges:
    case AdjacencyKind::Tag::product:
    case AdjacencyKind::Tag::quotient:
      edges = kind.edges();
      break;
  }
  img.finalize(std::move(edges));
  return img;
}

DigitalImage product(const DigitalImage& x, const DigitalImage& y,
                     std::string label) {
  if (label.empty()) label = x.label() + " x " + y.label();
  std::vector<PointCoords> pts;
  pts.reserve(static_cast<std::size_t>(x.size()) * y.size());
  for (const auto& a : x.points())
    for (const auto& b : y.points()) {
      PointCoords p = a;
      p.insert(p.end(), b.begin(), b.end());
      pts.push_back(std::move(p));
    }
  // Row-major enumeration of sorted factors is already lexicographic, so
  // index arithmetic in product_split stays valid after make_image sorts.
  const int ny = y.size();
  const int n = static_cast<int>(pts.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    auto [xi, yi] = product_split(i, ny);
    for (int j = i + 1; j < n; ++j) {
      auto [xj, yj] = product_split(j, ny);
      const bool xc = xi == xj || x.adjacent(xi, xj);
      const bool yc = yi == yj || y.adjacent(yi, yj);
      if (xc && yc) edges.emplace_back(i, j);  // i != j excludes both-equal
    }
  }
  return make_image(std::move(label), std::move(pts),
                    AdjacencyKind::product(x.kind(), y.kind(), std::move(edges)));
}

bool is_connected(const DigitalImage& x) {
  if (x.size() == 0) throw_invalid("connectivity of an empty image");
  std::vector<bool> seen(x.size(), false);
  std::vector<Index> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Index v = stack.back();
    stack.pop_back();
    for (Index w : x.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == x.size();
}

SubImage induced(const DigitalImage& base, const std::vector<Index>& members,
                 std::string label) {
  if (members.empty()) throw_invalid("induced subimage on an empty set");
  std::vector<Index> to_base = members;
  std::sort(to_base.begin(), to_base.end());
  to_base.erase(std::unique(to_base.begin(), to_base.end()), to_base.end());
  for (Index b : to_base)
    if (b < 0 || b >= base.size())
      throw_invalid("induced subimage member out of range");
  if (label.empty()) label = base.label() + "|sub";
  std::vector<PointCoords> pts;
  pts.reserve(to_base.size());
  for (Index b : to_base) pts.push_back(base.point(b));
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(to_base.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(to_base.size()); ++j)
      if (base.adjacent(to_base[i], to_base[j])) edges.emplace_back(i, j);
  SubImage s;
  s.image = make_image(std::move(label), std::move(pts),
                       AdjacencyKind::explicit_edges(std::move(edges)));
  s.to_base = std::move(to_base);
  return s;
}

}  // namespace digicat
