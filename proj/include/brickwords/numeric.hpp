#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace brickwords {

// Exact integer and rational arithmetic. All letter-generating code in this
// library goes through these types; floating point is never used to decide
// a letter or a comparison.
using Int = mpz_class;
using Rat = mpq_class;

// Floor division with sign convention floor(a/b), b != 0.
Int floor_div(const Int& a, const Int& b);

// Largest s with s*s <= n. Requires n >= 0.
Int isqrt(const Int& n);

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Canonicalized rational from numerator/denominator, den != 0.
Rat make_rat(const Int& num, const Int& den);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
bool rat_is_integer(const Rat& q);

// Parses "p/q" or "n" with optional leading minus. Returns nullopt on junk.
std::optional<Rat> parse_rational(const std::string& text);
std::string rat_to_string(const Rat& q);

}  // namespace brickwords
