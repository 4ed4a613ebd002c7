#include "brickwords/surd.hpp"

#include <stdexcept>

namespace brickwords {

int sign_linear_surd(const Int& a, const Int& b, const Int& d) {
  if (b == 0 || d == 0) return sgn(a);
  if (a == 0) return sgn(b);
  int sa = sgn(a), sb = sgn(b);
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 * d. Equality cannot happen for
  // non-square d with b != 0, but handle it anyway.
  Int a2 = a * a;
  Int b2d = b * b * d;
  if (a2 == b2d) return 0;
  return (a2 > b2d) ? sa : sb;
}

void extract_square_part(const Int& n, Int& square_root_part, Int& rest) {
  if (n <= 0) throw std::invalid_argument("extract_square_part: need n > 0");
  square_root_part = 1;
  rest = n;
  // Perfect square short-circuit.
  Int r = isqrt(rest);
  if (r * r == rest) {
    square_root_part = r;
    rest = 1;
    return;
  }
  Int f = 2;
  const Int cap = 1000000;
  while (f <= cap && f * f <= rest) {
    Int f2 = f * f;
    while (rest % f2 == 0) {
      rest /= f2;
      square_root_part *= f;
    }
    ++f;
    r = isqrt(rest);
    if (r * r == rest) {
      square_root_part *= r;
      rest = 1;
      return;
    }
  }
}

Surd::Surd(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw std::invalid_argument("Surd: zero denominator");
  if (d_ < 0) throw std::invalid_argument("Surd: negative radicand");
  normalize();
}

void Surd::normalize() {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (b_ != 0 && d_ > 0) {
    Int s, rest;
    extract_square_part(d_, s, rest);
    if (rest == 1) {
      // d was a perfect square: value is rational.
      a_ += b_ * s;
      b_ = 0;
      d_ = 0;
    } else {
      b_ *= s;
      d_ = rest;
    }
  }
  if (b_ == 0) d_ = 0;
  Int g = gcd(gcd(abs(a_), abs(b_)), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rat Surd::rational_value() const {
  if (!is_rational()) throw std::logic_error("Surd: irrational value");
  return make_rat(a_, c_);
}

int Surd::sign() const { return sign_linear_surd(a_, b_, d_); }

Int Surd::floor() const {
  // Bracket b*sqrt(d) between consecutive integers, then fix up exactly.
  Int approx;
  if (b_ >= 0) {
    approx = a_ + isqrt(b_ * b_ * d_);
  } else {
    approx = a_ - isqrt(b_ * b_ * d_) - 1;
  }
  Int n = floor_div(approx, c_);
  // value - n >= 0 and value - (n+1) < 0 must hold; adjust by exact signs.
  while (sign_linear_surd(a_ - (n + 1) * c_, b_, d_) >= 0) n += 1;
  while (sign_linear_surd(a_ - n * c_, b_, d_) < 0) n -= 1;
  return n;
}

Surd Surd::plus(const Rat& r) const {
  // (a + b sqrt(d))/c + p/q = (aq + pc + bq sqrt(d)) / (cq)
  const Int& p = r.get_num();
  const Int& q = r.get_den();
  return Surd(a_ * q + p * c_, b_ * q, c_ * q, d_);
}

Surd Surd::times(const Rat& r) const {
  const Int& p = r.get_num();
  const Int& q = r.get_den();
  if (p == 0) return Surd(0, 0, 1, 0);
  return Surd(a_ * p, b_ * p, c_ * q, d_);
}

Surd Surd::reciprocal() const {
  // c / (a + b sqrt(d)) = c (a - b sqrt(d)) / (a^2 - b^2 d)
  if (is_rational()) {
    if (a_ == 0) throw std::invalid_argument("Surd: reciprocal of zero");
    return Surd(c_, 0, a_, 0);
  }
  Int denom = a_ * a_ - b_ * b_ * d_;
  if (denom == 0) throw std::logic_error("Surd: degenerate radicand");
  return Surd(c_ * a_, -c_ * b_, denom, d_);
}

int Surd::compare(const Rat& r) const {
  // sign of (a + b sqrt d)/c - p/q = sign of (aq - pc) + bq sqrt(d), c,q > 0
  const Int& p = r.get_num();
  const Int& q = r.get_den();
  return sign_linear_surd(a_ * q - p * c_, b_ * q, d_);
}

}  // namespace brickwords
