#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brickwords/numeric.hpp"
#include "brickwords/string_word.hpp"

namespace brickwords {

// Explicit representation of a string (or quasi-simple band) module: one
// basis vector per walk slot, arrow actions as 0/1 matrices between the
// vertex spaces. Basis vectors at a vertex are ordered by walk position.
struct StringModule {
  std::vector<int> dim;  // per vertex
  // act[arrow][row][col], rows index the basis at the target vertex.
  std::vector<std::vector<std::vector<int>>> act;
  std::vector<int> slot_vertex;       // vertex of each walk slot
  std::vector<int> slot_basis_index;  // slot -> index within its vertex space
};

// M(w) for a finite string w (the lazy string gives a simple module).
StringModule string_module(const GentleAlgebra& A, const StringWord& w);

// The degree-1, lambda = 1 band module: the string-module rule on the cyclic
// walk of the band with the closing step acting as the identity.
StringModule band_module(const GentleAlgebra& A, const Band& band);

// Dimension of the space of module homomorphisms M -> N: vertex-wise linear
// maps commuting with every arrow action, computed by exact fraction-free
// Gaussian elimination on the commutation constraints.
long hom_dim_modules(const GentleAlgebra& A, const StringModule& M, const StringModule& N);
long hom_dim_oracle(const GentleAlgebra& A, const StringWord& u, const StringWord& v);

// End dimension of the degree-1, lambda = 1 band module; 1 means brick band.
long band_module_end_dim(const GentleAlgebra& A, const Band& band);

// ---- combinatorics of substring occurrences ----

// An occurrence of a pattern inside a host string. len = 0 is a lazy pattern
// at walk slot pos; len > 0 matches host steps [pos, pos+len), either as
// written or as the inverse of the pattern.
struct Occurrence {
  long pos = 0;
  long len = 0;
  bool inverted = false;
};

// Envelope of an occurrence: the boundary steps around it and the resulting
// classification per the submodule/quotient rule (an absent boundary letter
// imposes nothing).
struct Envelope {
  Occurrence occ;
  std::optional<Step> mu;  // step immediately to the left
  std::optional<Step> nu;  // step immediately to the right
  bool submodule = false;  // mu direct-or-absent and nu inverse-or-absent
  bool quotient = false;   // mu inverse-or-absent and nu direct-or-absent
};

Envelope classify_envelope(const GentleAlgebra& A, const StringWord& host,
                           const Occurrence& occ);

// All envelopes of as-written occurrences of pattern in host.
std::vector<Envelope> envelopes(const GentleAlgebra& A, const StringWord& host,
                                const StringWord& pattern);

// A graph map M(u) -> M(v): project onto a quotient substring of u, identify
// with an equal (or inverted) submodule substring of v, include into v.
struct GraphMap {
  Occurrence quotient_in_u;
  Occurrence submodule_in_v;  // inverted flag says the match is via inversion
};

// All graph maps between finite strings; their count is dim Hom.
std::vector<GraphMap> graph_maps(const GentleAlgebra& A, const StringWord& u,
                                 const StringWord& v);

// A kiss from u to v: a shared pattern with an interior quotient envelope in
// u and an interior submodule envelope in v, all four boundary letters
// present.
struct Kiss {
  Occurrence quotient_in_u;
  Occurrence submodule_in_v;
};

std::vector<Kiss> kisses(const GentleAlgebra& A, const StringWord& u, const StringWord& v);

// ---- bricks ----

struct BrickResult {
  bool brick = false;
  std::optional<GraphMap> witness;  // a non-identity endo graph map
};

// A finite string module is a brick iff the identity is its only graph map.
BrickResult is_brick_finite(const GentleAlgebra& A, const StringWord& w);

// No self-kiss.
bool is_inner_brick(const GentleAlgebra& A, const StringWord& w);

// A window of a possibly infinite string: an open end means the word goes on
// and occurrences touching it are not classifiable from the window.
struct StringWindow {
  StringWord word;
  bool left_closed = true;
  bool right_closed = true;
};

struct StrongInnerResult {
  bool strong_inner = false;   // no witness found within the window
  std::optional<GraphMap> witness;
};

// Searches for a non-identity finite graph map M(w) -> M(w) using only
// occurrences fully classifiable inside the window. For finite strings
// (both ends closed) this decides strong-inner-brickness exactly; for
// windows of infinite strings it can only falsify.
StrongInnerResult strong_inner_brick(const GentleAlgebra& A, const StringWindow& win);

}  // namespace brickwords
