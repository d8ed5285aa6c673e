#include "digicat/quotient.hpp"

#include <algorithm>

#include "digicat/error.hpp"

namespace digicat {

QuotientImage antipodal_quotient(const DigitalImage& x, std::string label) {
  if (label.empty()) label = x.label() + "/~";
  const PointCoords origin(x.dimension(), 0);
  if (x.index_of(origin) >= 0)
    throw_invalid("antipodal quotient of '" + x.label() +
                  "': origin has no antipode partner");
  for (int i = 0; i < x.size(); ++i)
    if (x.index_of(negated(x.point(i))) < 0)
      throw_invalid("antipodal quotient of '" + x.label() +
                    "': point set not closed under negation");

  QuotientImage q;
  q.base_ = x;
  q.class_of_.assign(x.size(), -1);

  // One class per {x, -x}; order classes by the representative point, which
  // is the lexicographically greater member.
  std::vector<std::pair<PointCoords, std::array<Index, 2>>> tmp;
  for (int i = 0; i < x.size(); ++i) {
    Index j = x.index_of(negated(x.point(i)));
    if (j < i) continue;  // handled when we saw j... (i < j case emits below)
    if (j == i)
      throw_invalid("antipodal quotient: fixed point of negation");
    std::array<Index, 2> cls{i, j};
    Index rep = x.point(i) > x.point(j) ? i : j;
    tmp.push_back({x.point(rep), cls});
  }
  std::sort(tmp.begin(), tmp.end());
  for (auto& [rep_coords, cls] : tmp) {
    Index rep = x.index_of(rep_coords);
    q.classes_.push_back(cls);
    q.rep_.push_back(rep);
    q.class_of_[cls[0]] = static_cast<Index>(q.classes_.size()) - 1;
    q.class_of_[cls[1]] = static_cast<Index>(q.classes_.size()) - 1;
  }

  std::vector<PointCoords> pts;
  for (Index r : q.rep_) pts.push_back(x.point(r));
  std::vector<Edge> edges;
  for (const auto& [a, b] : x.edges()) {
    Index ca = q.class_of_[a], cb = q.class_of_[b];
    if (ca != cb) edges.emplace_back(std::min(ca, cb), std::max(ca, cb));
  }
  q.class_image_ = make_image(
      std::move(label), std::move(pts),
      AdjacencyKind::quotient(x.kind(), std::move(edges)));
  // make_image re-sorts points; class order was chosen to match that sort.
  for (int c = 0; c < q.class_count(); ++c)
    if (q.class_image_.point(c) != x.point(q.rep_[c]))
      throw_verification("quotient class ordering drifted from point order");
  return q;
}

}  // namespace digicat
