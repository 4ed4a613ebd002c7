#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brickwords/string_module.hpp"
#include "brickwords/sturmian.hpp"

namespace brickwords {

// ---- the double-Kronecker algebra ----
// Vertices 1, 2, 3; arrows a1, a2: 1 -> 2 and b1, b2: 2 -> 3; relations
// a1 b1 and a2 b2. The distinguished cyclic strings are a = a1- a2 and
// b = b1 b2-, both anchored at vertex 2.
const GentleAlgebra& double_kronecker();
StringWord dk_a();
StringWord dk_b();
int dk_vertex2();

// ---- single-kissing configurations ----
// The general setting: two brick bands a = z a', b = z b' through a common
// vertex x, with ab and ba strings and exactly one kiss (along z) from the
// rotations of b to the rotations of a.
struct SingleKissConfig {
  const GentleAlgebra* algebra = nullptr;
  int x = -1;
  StringWord a, b;
  StringWord z;  // maximal common prefix; lazy when the bands split at x
  Step alpha1, alpha2, beta1, beta2;
};

struct ConfigCheck {
  std::optional<SingleKissConfig> config;
  std::vector<std::string> violations;
};

// Verifies every hypothesis of the configuration; on success returns the
// assembled data.
ConfigCheck verify_single_kissing(const GentleAlgebra& A, const StringWord& a,
                                  const StringWord& b);

// The double-Kronecker instance (z lazy at vertex 2).
const SingleKissConfig& dk_config();

// ---- words in the band letters ----

// Substitutes a for 'a' and b for 'b' (their inverses when inverted); the
// empty word encodes to the lazy string at x.
StringWord encode_ab(const SingleKissConfig& cfg, const BinaryWord& word, bool inverted = false);

struct ABDecoded {
  BinaryWord word;
  bool inverted = false;
};

// Exact inverse of encode_ab where possible.
std::optional<ABDecoded> decode_ab(const SingleKissConfig& cfg, const StringWord& w);

// ---- letter-level envelopes (configuration independent) ----

enum class ABShape { axa, axb, bxa, bxb, ax, bx, xa, xb, bare };
const char* to_string(ABShape s);

// Env^{a,b} of the pattern inside the window, restricted to occurrences whose
// envelope is fully visible: at an open end, occurrences touching that end
// contribute nothing.
std::set<ABShape> ab_envelopes(const WordWindow& host, const BinaryWord& pattern);

// Shortest x (then earliest) whose envelope set meets both {axa, ax, xa} and
// {bxb, bx, xb}; none certifies nothing, a witness refutes strong-inner-
// brickness of the underlying string.
std::optional<BinaryWord> strong_inner_witness_ab(const WordWindow& host);

// Interior-only variant: both axa and bxb must occur.
std::optional<BinaryWord> inner_witness_ab(const WordWindow& host);

// For windows of bodies w with a known start: shortest s with s.a a starting
// subword and s.b occurring somewhere in the window. Requires left_closed.
std::optional<BinaryWord> prefix_condition_witness(const WordWindow& host);

// ---- classification of infinite strings over the double-Kronecker ----

enum class DKSide { Right, Left, Double };
enum class DKPrefix { None, Alpha2, Alpha1, Beta2Inv, Beta1Inv };

// The ab-word part of a spec: a finite lead followed by an infinite tail.
struct DKBody {
  BinaryWord lead;
  InfiniteWordSpec tail;
};

// A finite description of an infinite string over the double-Kronecker.
// Right specs denote prefix-arrow . encode(lead . tail); a left spec denotes
// the formal inverse of the right spec with the flipped direction; double
// specs have no prefix or lead. The prefix fixes the direction and the
// first body letter (alpha2: forward, b...; alpha1: inverted, b...;
// beta2inv: forward, a...; beta1inv: inverted, a...).
struct InfiniteDKSpec {
  DKSide side = DKSide::Right;
  DKPrefix prefix = DKPrefix::None;
  bool inverted = false;  // word in the inverse letters a-, b-
  DKBody body;
};

struct ClassifyResult {
  bool brick = false;
  int case_number = 0;     // classification case used
  std::string reason;      // set when not a brick
};

// Decides brickness from the spec structure alone; windows only falsify.
ClassifyResult classify_infinite(const InfiniteDKSpec& spec);

// Letters of the body (lead + tail) as evidence; for double-infinite specs
// the window is centered on the anchor.
WordWindow dk_body_window(const InfiniteDKSpec& spec, long letters);

nlohmann::json dk_spec_to_json(const InfiniteDKSpec& spec);
InfiniteDKSpec dk_spec_from_json(const nlohmann::json& j);

// Concrete falsification for a spec classified NotBrick with a periodicity
// reason: a non-identity graph map on the closed window string, or, for
// words admitting none on finite windows, the verified period-shift map of
// the infinite word.
struct Falsification {
  bool found = false;
  std::string description;
};
Falsification falsify_not_brick(const InfiniteDKSpec& spec, long max_letters);

// Window-level consistency checks for a spec classified Brick. Runs the
// witness searches that apply to the spec's case: strong-inner for the
// unprefixed cases, inner-witness on the letter-extended body plus the
// prefix condition for the arrow-prefixed cases. A brick verdict can never
// be contradicted by a window, so any witness found is reported.
struct WindowEvidence {
  bool consistent = true;
  std::vector<std::string> findings;  // descriptions of any witnesses found
};
WindowEvidence check_brick_windows(const InfiniteDKSpec& spec, long letters);

// ---- the Christoffel / brick-band sweep ----

struct BandVerdict {
  std::string word;              // least rotation of the band's binary word
  long end_dim = 0;              // End of the lambda = 1 band module
  bool christoffel_class = false;
  std::string christoffel_form;  // the witnessing Christoffel word, if any
  bool consistent = false;
};

struct ChristoffelReport {
  std::vector<BandVerdict> bands;
  long mismatches = 0;
};

// For every band over the double-Kronecker anchored at vertex 2 with at most
// max_total letters: End = 1 must hold exactly when the band class carries a
// Christoffel word (some rotation is a Christoffel word; single band
// letters instead wrap to the Christoffel words baa and bba).
ChristoffelReport verify_brick_band_christoffel(long max_total);

// ---- shared-suffix structure of double-role substrings ----

struct SharedSuffixEntry {
  std::string pattern;       // formatted string pattern
  long quotient_occs = 0;
  long submodule_occs = 0;
  bool interior_quotient = false;  // some quotient occurrence has its right letter
  bool interior_submodule = false;
  bool ends_with_z = false;
  bool residue_decodes = false;
  std::string residue;       // the ab-word s' when s = s'z
};

struct SharedSuffixReport {
  std::vector<SharedSuffixEntry> entries;       // double-role substrings only
  long violations_all = 0;       // entries not of the form s'z at all
  long violations_interior = 0;  // violations among fully interior entries
};

// Enumerates every finite string appearing both as a submodule and a
// quotient substring of encode(host) and checks the s = s'z decomposition.
SharedSuffixReport shared_suffix_check(const SingleKissConfig& cfg, const BinaryWord& host);

// ---- the generalized classification ----

// One-sided: brick iff the body is (for left specs: transposes to) a
// characteristic Sturmian spec; double-infinite: brick iff Sturmian.
ClassifyResult generalized_classify(const SingleKissConfig& cfg, const DKBody& body,
                                    DKSide side, bool inverted);

}  // namespace brickwords
