#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digicat/image.hpp"
#include "digicat/path.hpp"

namespace digicat {

/// Total function between images, stored as target indices in source order.
struct MapBetweenImages {
  const DigitalImage* source = nullptr;
  const DigitalImage* target = nullptr;
  std::vector<Index> values;
};

MapBetweenImages identity_map(const DigitalImage& x);
MapBetweenImages constant_map(const DigitalImage& source,
                              const DigitalImage& target, Index value);

/// Edge criterion: every source edge maps to equal-or-adjacent targets.
bool is_continuous(const MapBetweenImages& f);

/// A homotopy as a frame sequence H_0..H_m of maps source -> target:
/// every frame continuous, every per-point trace a digital path.
struct HomotopyWitness {
  std::vector<std::vector<Index>> frames;
};

HomotopyWitness reversed(const HomotopyWitness& w);
HomotopyWitness concatenated(const HomotopyWitness& a,
                             const HomotopyWitness& b);

/// Validates the witness invariants plus the endpoint frames. Used both by
/// the search (before returning "yes") and by tests; the verify module has
/// its own independent re-implementation.
bool witness_connects(const DigitalImage& source, const DigitalImage& target,
                      const HomotopyWitness& w, const std::vector<Index>& from,
                      const std::vector<Index>& to,
                      std::string* why = nullptr);

enum class Answer { yes, no, inconclusive };

struct Budget {
  std::uint64_t max_states = 5'000'000;  // visited-map cap for the search
};

struct HomotopyResult {
  Answer answer = Answer::inconclusive;
  HomotopyWitness witness;  // filled on yes
  std::uint64_t visited = 0;
};

/// Decides digital homotopy of two continuous maps with the same source and
/// target: reachability in the graph whose vertices are continuous maps and
/// whose edges join maps that are pointwise equal-or-adjacent. A short
/// bounded-depth witness search runs first; exhaustive breadth-first search
/// settles "no" (component exhausted) or hits the budget ("inconclusive").
HomotopyResult homotopic(const MapBetweenImages& f, const MapBetweenImages& g,
                         const Budget& budget = {});

struct NullhomotopyResult {
  Answer answer = Answer::inconclusive;
  HomotopyWitness witness;
  Index basepoint = -1;
  std::uint64_t visited = 0;
};

/// Is f homotopic to some constant map?
NullhomotopyResult nullhomotopic(const MapBetweenImages& f,
                                 const Budget& budget = {});

/// Null-homotopy of the identity.
NullhomotopyResult is_contractible(const DigitalImage& x,
                                   const Budget& budget = {});

struct SectionResult {
  Answer answer = Answer::inconclusive;
  /// On yes: per member (same order as the input), a path in X from the
  /// pair's first coordinate to its second, all of equal length.
  std::vector<std::vector<Index>> sections;
  std::uint64_t visited = 0;
};

/// Does a subset U of X x X admit a motion planner? Decided as "the two
/// coordinate projections restricted to U are homotopic": the witness frames
/// re-read per point are exactly the section paths.
SectionResult admits_section(const DigitalImage& product_xx,
                             const std::vector<Index>& members,
                             const DigitalImage& x, const Budget& budget = {});

}  // namespace digicat
