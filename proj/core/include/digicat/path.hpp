#pragma once

#include <vector>

#include "digicat/image.hpp"

namespace digicat {

/// A digital path: point indices p_0..p_m with consecutive entries equal or
/// adjacent in the target image. The image is non-owning; callers keep it
/// alive for the lifetime of the path.
struct DigitalPath {
  const DigitalImage* image = nullptr;
  std::vector<Index> steps;

  int length() const { return static_cast<int>(steps.size()) - 1; }
  Index start() const { return steps.front(); }
  Index end() const { return steps.back(); }
};

bool is_valid_path(const DigitalImage& image, const std::vector<Index>& steps);

DigitalPath make_path(const DigitalImage& image, std::vector<Index> steps);

/// Khalimsky product of paths: equals f on [0,m], then g shifted by m.
DigitalPath concat(const DigitalPath& f, const DigitalPath& g);

/// Extends a path to length m by repeating its final point.
DigitalPath stabilize(const DigitalPath& f, int m);
std::vector<Index> stabilize_steps(std::vector<Index> steps, int m);

/// After stabilizing both paths to the larger length, true iff the paths are
/// equal or adjacent in the target at every time step.
bool pointwise_close(const DigitalPath& f, const DigitalPath& g);

}  // namespace digicat
