#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brickwords/quiver.hpp"

namespace brickwords {

// One letter of a string: an arrow walked forwards or backwards.
struct Step {
  int arrow = -1;
  bool inverse = false;
  bool operator==(const Step&) const = default;
};

inline Step inverse_of(Step s) { return Step{s.arrow, !s.inverse}; }

// A string over a gentle algebra: either the lazy string at a vertex or a
// non-empty sequence of steps satisfying P1 (composable, reduced) and P2
// (no relation subpath in the word or its formal inverse).
class StringWord {
 public:
  static StringWord lazy(int vertex);
  static StringWord from_steps(std::vector<Step> steps);  // no validation here

  bool is_lazy() const { return steps_.empty(); }
  int lazy_vertex() const { return vertex_; }
  const std::vector<Step>& steps() const { return steps_; }
  long length() const { return static_cast<long>(steps_.size()); }
  long slot_count() const { return length() + 1; }

  int source(const GentleAlgebra& A) const;
  int target(const GentleAlgebra& A) const;
  // Vertex at walk slot i, 0 <= i <= length().
  int vertex_at(const GentleAlgebra& A, long i) const;

  StringWord inverse() const;
  StringWord subword(long pos, long len) const;  // lazy needs the algebra; see below
  StringWord subword_at(const GentleAlgebra& A, long pos, long len) const;
  StringWord rotate(long k) const;  // cyclic rotation by k steps
  StringWord concat(const StringWord& tail) const;
  StringWord power(long n) const;

  bool operator==(const StringWord&) const = default;

 private:
  int vertex_ = -1;           // only for lazy strings
  std::vector<Step> steps_;
};

struct StringViolation {
  long index = -1;       // offending step position (or pair start)
  std::string clause;    // "unknown-arrow" | "P1-compose" | "P1-backtrack" | "P2" | "P2-inverse"
  std::string detail;
};

// Validates P1/P2 for a step sequence over A.
std::optional<StringViolation> check_string(const GentleAlgebra& A,
                                            const std::vector<Step>& steps);
inline bool is_string(const GentleAlgebra& A, const StringWord& w) {
  return w.is_lazy() || !check_string(A, w.steps()).has_value();
}

// Literal syntax: whitespace-separated tokens, each an arrow name optionally
// suffixed by "-" for the inverse; "e:<vertex>" for lazy strings.
std::optional<StringWord> parse_string(const GentleAlgebra& A, const std::string& text,
                                       std::string* error = nullptr);
std::string format_string(const GentleAlgebra& A, const StringWord& w);

// Total order on steps used everywhere a canonical order is needed:
// arrow name first, direct before inverse.
bool step_less(const GentleAlgebra& A, Step x, Step y);
bool step_seq_less(const GentleAlgebra& A, const std::vector<Step>& x,
                   const std::vector<Step>& y);

// All strings of length <= max_len, lazy strings included, each exactly once,
// in a deterministic order (length, then start vertex / step sequence).
std::vector<StringWord> enumerate_strings(const GentleAlgebra& A, long max_len);

// A band: a primitive cyclic string whose square is a string, stored as the
// canonical representative (least over all rotations of itself and of its
// inverse, in the step order above).
struct Band {
  StringWord word;
  bool operator==(const Band&) const = default;
};

// Canonical representative of the band class of w; w must be a valid band
// representative (cyclic, square a string, primitive).
Band canonical_band(const GentleAlgebra& A, const StringWord& w);

// True when w is cyclic, w^2 is a string, and w is primitive.
bool is_band(const GentleAlgebra& A, const StringWord& w);

// All bands of length <= max_len, one canonical representative per class.
std::vector<Band> enumerate_bands(const GentleAlgebra& A, long max_len);

struct DirectString {
  StringWord word;
  bool maximal = false;
};

// All direct strings (every step a plain arrow), with maximal ones flagged.
// Finite for any gentle algebra. Lazy strings are not listed.
std::vector<DirectString> direct_strings(const GentleAlgebra& A);

// Number of times the walk of w visits the given vertex (a length-d string
// visits d+1 slots, the lazy string visits one).
long x_count(const GentleAlgebra& A, const StringWord& w, int vertex);

}  // namespace brickwords
