#pragma once

#include <variant>
#include <vector>

#include <json.hpp>

#include "brickwords/slope.hpp"
#include "brickwords/word.hpp"

namespace brickwords {

// head . period . period . ...   Canonical form keeps the period primitive
// and the head minimal: trailing letters of the head that agree with the
// period tail are absorbed by rotating the period.
struct EvPeriodicRight {
  BinaryWord head;
  BinaryWord period;
  EvPeriodicRight(BinaryWord h, BinaryWord p);
  bool operator==(const EvPeriodicRight&) const = default;
};

// ... period . period . tail    (left-infinite; mirror canonical form)
struct EvPeriodicLeft {
  BinaryWord period;
  BinaryWord tail;
  EvPeriodicLeft(BinaryWord p, BinaryWord t);
  bool operator==(const EvPeriodicLeft&) const = default;
};

// ... period . period . period ...  Canonical: primitive, least rotation.
struct BiPeriodic {
  BinaryWord period;
  explicit BiPeriodic(BinaryWord p);
  bool operator==(const BiPeriodic&) const = default;
};

// The cutting word of y = slope*x + intercept over the domain, lower or
// upper convention at lattice points.
struct CuttingLine {
  SlopeSpec slope;
  Rat intercept;
  IntervalSpec domain;
  bool upper = false;
  bool operator==(const CuttingLine&) const = default;
};

// Continued-fraction description [0; a1, a2, ...] of the slope of a
// characteristic word; the coefficient stream is head followed by period
// repeating. Empty period means a terminating (rational) expansion.
struct CharacteristicCF {
  std::vector<long> head;
  std::vector<long> period;
  CharacteristicCF(std::vector<long> h, std::vector<long> p);
  bool operator==(const CharacteristicCF&) const = default;
};

using InfiniteWordSpec =
    std::variant<EvPeriodicRight, EvPeriodicLeft, BiPeriodic, CuttingLine, CharacteristicCF>;

enum class Sidedness { Right, Left, Double, Finite };
Sidedness sidedness(const InfiniteWordSpec& spec);

enum class Periodicity { Periodic, EventuallyRightPeriodic, EventuallyLeftPeriodic, Aperiodic };
const char* to_string(Periodicity p);

// Classification from the finite description alone. Finite-domain cutting
// lines denote finite words and are rejected.
Periodicity classify_periodicity(const InfiniteWordSpec& spec);

// Letters [offset, offset+length) of the denoted word. Right-infinite specs
// index from 0 upward, left-infinite from -1 downward, double-infinite over
// all of Z (cutting lines anchor index 0 at the first grid event at x >= 0).
// Deterministic; closed-end flags are set exactly when a true end is touched.
WordWindow window(const InfiniteWordSpec& spec, long offset, long length);

nlohmann::json spec_to_json(const InfiniteWordSpec& spec);
InfiniteWordSpec spec_from_json(const nlohmann::json& j);

}  // namespace brickwords
