#pragma once

#include "brickwords/numeric.hpp"

namespace brickwords {

// Sign of a + b*sqrt(d) for integers a, b and d >= 0 non-square (d = 0 is
// allowed and means plain a). Decided purely by integer squaring, no floats.
int sign_linear_surd(const Int& a, const Int& b, const Int& d);

// Exact value (a + b*sqrt(d)) / c with c > 0 and d a positive non-square.
// Stored with gcd(a, b, c) = 1 and the square part of d pulled into b.
// b may be zero, in which case the value is the rational a/c.
class Surd {
 public:
  Surd(Int a, Int b, Int c, Int d);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Rat rational_value() const;  // only when is_rational()

  int sign() const;
  Int floor() const;

  Surd plus(const Rat& r) const;
  Surd times(const Rat& r) const;  // r != 0 when you care about d staying put
  Surd reciprocal() const;

  // Compare against a rational: sign of (*this - r).
  int compare(const Rat& r) const;

  bool operator==(const Surd& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }

 private:
  Int a_, b_, c_, d_;
  void normalize();
};

// Splits n > 0 as s*s * f with f squarefree (complete for the factor sizes
// this library meets; trial division is capped, see implementation).
void extract_square_part(const Int& n, Int& square_root_part, Int& rest);

}  // namespace brickwords
