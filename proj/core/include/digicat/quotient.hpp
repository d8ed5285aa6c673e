#pragma once

#include <array>
#include <string>
#include <vector>

#include "digicat/image.hpp"

namespace digicat {

/// Quotient of a negation-closed image by x ~ -x. Classes are ordered by
/// their canonical representative (the lexicographically greater member of
/// {x, -x}), and `class_image()` is a plain DigitalImage on the
/// representative points carrying the induced adjacency, so every downstream
/// graph algorithm can treat the quotient uniformly.
class QuotientImage {
 public:
  const DigitalImage& base() const { return base_; }
  const DigitalImage& class_image() const { return class_image_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  /// Base point indices of a class, smaller index first.
  const std::array<Index, 2>& members(Index cls) const { return classes_[cls]; }
  const std::vector<std::array<Index, 2>>& classes() const { return classes_; }
  /// Base index of the canonical (lex-greater) representative.
  Index representative(Index cls) const { return rep_[cls]; }
  Index class_of(Index base_index) const { return class_of_[base_index]; }

  friend QuotientImage antipodal_quotient(const DigitalImage& x,
                                          std::string label);

 private:
  DigitalImage base_;
  DigitalImage class_image_;
  std::vector<std::array<Index, 2>> classes_;
  std::vector<Index> rep_;
  std::vector<Index> class_of_;
};

/// Pairs every point with its negation and induces adjacency on the classes:
/// [x] ~ [y] iff some representatives are adjacent in the base and the
/// classes differ.  Requires the base closed under negation without origin.
QuotientImage antipodal_quotient(const DigitalImage& x, std::string label = "");

}  // namespace digicat
