#include "digicat/path.hpp"

#include <algorithm>

#include "digicat/error.hpp"

namespace digicat {

bool is_valid_path(const DigitalImage& image, const std::vector<Index>& steps) {
  if (steps.empty()) return false;
  for (Index s : steps)
    if (s < 0 || s >= image.size()) return false;
  for (std::size_t t = 0; t + 1 < steps.size(); ++t)
    if (!image.close(steps[t], steps[t + 1])) return false;
  return true;
}

DigitalPath make_path(const DigitalImage& image, std::vector<Index> steps) {
  if (!is_valid_path(image, steps))
    throw_invalid("sequence is not a digital path in '" + image.label() + "'");
  return DigitalPath{&image, std::move(steps)};
}

DigitalPath concat(const DigitalPath& f, const DigitalPath& g) {
  if (f.image != g.image)
    throw_invalid("concat: paths live in different images");
  if (f.end() != g.start())
    throw_invalid("concat: first path ends where the second does not start");
  std::vector<Index> steps = f.steps;
  steps.insert(steps.end(), g.steps.begin() + 1, g.steps.end());
  return DigitalPath{f.image, std::move(steps)};
}

std::vector<Index> stabilize_steps(std::vector<Index> steps, int m) {
  if (m + 1 < static_cast<int>(steps.size()))
    throw_invalid("stabilize: target length shorter than the path");
  steps.resize(m + 1, steps.back());
  return steps;
}

DigitalPath stabilize(const DigitalPath& f, int m) {
  return DigitalPath{f.image, stabilize_steps(f.steps, m)};
}

bool pointwise_close(const DigitalPath& f, const DigitalPath& g) {
  if (f.image != g.image)
    throw_invalid("pointwise_close: paths live in different images");
  const int m = std::max(f.length(), g.length());
  const auto& img = *f.image;
  for (int t = 0; t <= m; ++t) {
    Index a = f.steps[std::min<int>(t, f.length())];
    Index b = g.steps[std::min<int>(t, g.length())];
    if (!img.close(a, b)) return false;
  }
  return true;
}

}  // namespace digicat
