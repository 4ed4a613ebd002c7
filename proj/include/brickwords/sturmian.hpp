#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brickwords/infinite_word.hpp"

namespace brickwords {

// ---- cutting-word generation (exact integer arithmetic throughout) ----

// Total number of letters of a finite-domain cutting word.
long cutting_total_letters(const CuttingLine& line);

// Letters with indices in [from, to) under the indexing documented at
// window(): right-infinite words start at 0, left-infinite end at -1,
// double-infinite anchor index 0 at the first grid event at x >= 0.
std::string cutting_letters(const CuttingLine& line, long from, long to);

// First max_letters letters (or all, if fewer exist) of the lower/upper
// cutting word of y = slope*x + intercept over the domain.
WordWindow lower_cutting_word(const SlopeSpec& slope, const Rat& intercept,
                              const IntervalSpec& domain, long max_letters);
WordWindow upper_cutting_word(const SlopeSpec& slope, const Rat& intercept,
                              const IntervalSpec& domain, long max_letters);

// ---- characteristic words via continued fractions ----

// Length-n prefix of the characteristic word of the slope [0; a1, a2, ...].
// Irrational slopes (non-empty period) use the standard-word recurrence
// s(-1) = "a", s(0) = "b", s(k) = s(k-1)^{a_k} s(k-2); rational slopes fall
// back to the cutting generator, which is the defining object.
WordWindow characteristic_word(const CharacteristicCF& cf, long n);

// Exact slope value of the continued fraction [0; head, period period ...].
SlopeSpec cf_to_slope(const CharacteristicCF& cf);

// Convergent numerators/denominators p_i/q_i of [0; a1, a2, ...], i = 1..k.
std::vector<std::pair<Int, Int>> cf_convergents(const CharacteristicCF& cf, long k);

// ---- Christoffel words ----

struct ChristoffelWord {
  BinaryWord word;   // starts with b, ends with a
  Int p, q;          // slope p/q, gcd = 1; |word| = p + q, weight = q
};

// b . (lower cutting word of p/q over (0, q)) . a
ChristoffelWord christoffel(const Int& p, const Int& q);

// True when w literally equals some Christoffel word.
bool is_christoffel(const BinaryWord& w);

// k Christoffel words built from the convergents of the slope; each interior
// is a starting subword of the characteristic word, lengths strictly grow.
std::vector<ChristoffelWord> christoffel_prefix_tower(const CharacteristicCF& cf, long k);

// ---- Sturmian decisions ----

struct SturmianVerdict {
  bool sturmian = false;
  std::string reason;  // set when not sturmian
};

// Decided from the spec alone (windows can only falsify, never certify).
SturmianVerdict is_sturmian_spec(const InfiniteWordSpec& spec);

// Characteristic-word recognition used by the brick classification: a
// CharacteristicCF with irrational slope, or a CuttingLine in the canonical
// form intercept 0, domain (0, inf), irrational slope, either convention.
bool is_characteristic_spec(const InfiniteWordSpec& spec);

}  // namespace brickwords
