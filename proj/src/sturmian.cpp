#include "brickwords/sturmian.hpp"

#include <algorithm>
#include <stdexcept>

namespace brickwords {

namespace {

// Merges the two crossing streams of the line y = m*x + c: vertical grid
// lines at integer x = k (letter b) and horizontal grid lines at integer
// y = n, i.e. x = (n - c)/m (letter a). m > 0, so both streams increase
// with x and "vertical at k before horizontal at n" is exactly
// m*k + c < n. A lattice point emits "ba" (lower) or "ab" (upper).
struct CrossingMerge {
  const SlopeSpec& slope;
  const Rat& c;
  bool upper;
  Int k;  // next vertical candidate
  Int n;  // next horizontal candidate
  std::optional<Rat> hi;
  bool hi_open = true;

  bool vertical_in_range() const {
    if (!hi) return true;
    int s = cmp(Rat(k), *hi);
    return s < 0 || (s == 0 && !hi_open);
  }
  bool horizontal_in_range() const {
    if (!hi) return true;
    // position (n - c)/m <= hi  <=>  n <= m*hi + c
    int s = slope.compare_line_rat(*hi, c, Rat(n));
    return s > 0 || (s == 0 && !hi_open);
  }

  // Appends the next letter(s); false when the domain is exhausted.
  bool step_forward(std::string& out) {
    bool v = vertical_in_range();
    bool h = horizontal_in_range();
    if (!v && !h) return false;
    if (v && h) {
      int s = slope.compare_line(k, c, n);
      if (s < 0) {
        out += 'b';
        k += 1;
      } else if (s > 0) {
        out += 'a';
        n += 1;
      } else {
        out += upper ? "ab" : "ba";
        k += 1;
        n += 1;
      }
    } else if (v) {
      out += 'b';
      k += 1;
    } else {
      out += 'a';
      n += 1;
    }
    return true;
  }

  // Walks leftward; out receives letters in decreasing x, i.e. the word
  // reversed. Lattice pairs are appended reversed so that reversing the
  // buffer restores the forward order. Only used on unbounded-left domains.
  void step_backward(std::string& out) {
    int s = slope.compare_line(k, c, n);
    if (s > 0) {
      out += 'b';
      k -= 1;
    } else if (s < 0) {
      out += 'a';
      n -= 1;
    } else {
      out += upper ? "ba" : "ab";
      k -= 1;
      n -= 1;
    }
  }
};

bool line_value_is_integer(const SlopeSpec& m, const Rat& c, const Rat& x, Int& floor_out) {
  floor_out = floor_line_rat(m, c, x);
  return m.compare_line_rat(x, c, Rat(floor_out)) == 0;
}

// First candidates to the right of (or at) the finite lower bound.
void init_forward(CrossingMerge& g, const Rat& lo, bool lo_open) {
  if (lo_open) {
    g.k = rat_floor(lo) + 1;
  } else {
    g.k = rat_ceil(lo);
  }
  Int f;
  bool integral = line_value_is_integer(g.slope, g.c, lo, f);
  g.n = (lo_open || !integral) ? f + 1 : f;
}

// Last candidates to the left of (or at) the finite upper bound.
void init_backward(CrossingMerge& g, const Rat& hi, bool hi_open) {
  if (hi_open) {
    g.k = rat_ceil(hi) - 1;
  } else {
    g.k = rat_floor(hi);
  }
  Int f;
  bool integral = line_value_is_integer(g.slope, g.c, hi, f);
  g.n = (hi_open && integral) ? f - 1 : f;
}

// Anchor for double-infinite lines: index 0 = first event at position >= 0.
void init_anchor(CrossingMerge& g) {
  g.k = 0;
  g.n = rat_ceil(g.c);
}

std::string forward_letters(const CuttingLine& line, long count) {
  CrossingMerge g{line.slope, line.intercept, line.upper, 0, 0,
                  line.domain.hi, line.domain.hi_open};
  if (line.domain.lo) {
    init_forward(g, *line.domain.lo, line.domain.lo_open);
  } else {
    init_anchor(g);
  }
  std::string out;
  while (static_cast<long>(out.size()) < count) {
    if (!g.step_forward(out)) break;
  }
  return out;
}

// Letters at indices -1, -2, ..., -count (buffer position j holds index -1-j).
std::string backward_letters(const CuttingLine& line, long count) {
  CrossingMerge g{line.slope, line.intercept, line.upper, 0, 0, std::nullopt, true};
  if (line.domain.hi) {
    init_backward(g, *line.domain.hi, line.domain.hi_open);
  } else {
    init_anchor(g);
    g.k -= 1;
    g.n -= 1;
  }
  std::string out;
  while (static_cast<long>(out.size()) < count) g.step_backward(out);
  return out;
}

std::string full_finite_word(const CuttingLine& line) {
  if (!line.domain.lo || !line.domain.hi)
    throw std::invalid_argument("cutting word: domain is not finite");
  CrossingMerge g{line.slope, line.intercept, line.upper, 0, 0,
                  line.domain.hi, line.domain.hi_open};
  init_forward(g, *line.domain.lo, line.domain.lo_open);
  std::string out;
  while (g.step_forward(out)) {
  }
  return out;
}

long cf_coefficient(const CharacteristicCF& cf, size_t i) {
  if (i < cf.head.size()) return cf.head[i];
  if (cf.period.empty()) throw std::out_of_range("cf coefficient index");
  return cf.period[(i - cf.head.size()) % cf.period.size()];
}

size_t cf_length_cap(const CharacteristicCF& cf) {
  return cf.period.empty() ? cf.head.size() : SIZE_MAX;
}

}  // namespace

long cutting_total_letters(const CuttingLine& line) {
  return static_cast<long>(full_finite_word(line).size());
}

std::string cutting_letters(const CuttingLine& line, long from, long to) {
  if (from >= to) return "";
  bool has_lo = line.domain.lo.has_value();
  bool has_hi = line.domain.hi.has_value();
  if (has_lo && has_hi) {
    std::string all = full_finite_word(line);
    long total = static_cast<long>(all.size());
    if (from < 0 || to > total) throw std::out_of_range("cutting window out of range");
    return all.substr(from, to - from);
  }
  if (has_lo) {  // right-infinite, indices 0, 1, 2, ...
    if (from < 0) throw std::out_of_range("right-infinite words index from 0 upward");
    std::string prefix = forward_letters(line, to);
    return prefix.substr(from, to - from);
  }
  if (has_hi) {  // left-infinite, indices ..., -2, -1
    if (to > 0) throw std::out_of_range("left-infinite words index from -1 downward");
    std::string rev = backward_letters(line, -from);
    std::string out;
    for (long i = from; i < to; ++i) out += rev[-1 - i];
    return out;
  }
  // double-infinite
  std::string out;
  if (from < 0) {
    std::string rev = backward_letters(line, -from);
    for (long i = from; i < std::min(to, 0L); ++i) out += rev[-1 - i];
  }
  if (to > 0) {
    std::string fwd = forward_letters(line, to);
    out += fwd.substr(std::max(from, 0L), to - std::max(from, 0L));
  }
  return out;
}

namespace {
WordWindow cutting_word_impl(CuttingLine line, long max_letters) {
  if (max_letters < 0) throw std::invalid_argument("cutting word: negative length");
  InfiniteWordSpec spec(line);
  switch (sidedness(spec)) {
    case Sidedness::Finite: {
      long total = cutting_total_letters(line);
      return window(spec, 0, std::min(total, max_letters));
    }
    case Sidedness::Left:
      return window(spec, -max_letters, max_letters);
    default:
      return window(spec, 0, max_letters);
  }
}
}  // namespace

WordWindow lower_cutting_word(const SlopeSpec& slope, const Rat& intercept,
                              const IntervalSpec& domain, long max_letters) {
  return cutting_word_impl(CuttingLine{slope, intercept, domain, false}, max_letters);
}

WordWindow upper_cutting_word(const SlopeSpec& slope, const Rat& intercept,
                              const IntervalSpec& domain, long max_letters) {
  return cutting_word_impl(CuttingLine{slope, intercept, domain, true}, max_letters);
}

WordWindow characteristic_word(const CharacteristicCF& cf, long n) {
  if (n < 0) throw std::invalid_argument("characteristic_word: negative length");
  if (cf.period.empty()) {
    SlopeSpec m = cf_to_slope(cf);
    CuttingLine line{m, Rat(0), IntervalSpec{Rat(0), std::nullopt, true, true}, false};
    return WordWindow{BinaryWord(cutting_letters(line, 0, n)), true, false};
  }
  // s(-1) = "a", s(0) = "b", s(k) = s(k-1)^{a_k} s(k-2). Every s(k) is a
  // prefix of the limit, so grow until long enough.
  std::string prev = "a";
  std::string cur = "b";
  size_t want = static_cast<size_t>(n);
  size_t i = 0;
  while (cur.size() < want) {
    long a = cf_coefficient(cf, i++);
    std::string next;
    // s(k) begins with copies of s(k-1), so stop once the prefix is long
    // enough; huge coefficients then cost nothing.
    for (long r = 0; r < a && next.size() < want; ++r) next += cur;
    if (next.size() < want) next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return WordWindow{BinaryWord(cur.substr(0, n)), true, false};
}

SlopeSpec cf_to_slope(const CharacteristicCF& cf) {
  if (cf.period.empty()) {
    // value of [0; a1..ak] from convergents
    auto conv = cf_convergents(cf, static_cast<long>(cf.head.size()));
    if (conv.empty()) throw std::invalid_argument("cf_to_slope: empty expansion");
    return SlopeSpec::rational(make_rat(conv.back().first, conv.back().second));
  }
  // Purely periodic tail T = [p1; p2..pk repeating] satisfies
  // T = (m11*T + m12)/(m21*T + m22) for the coefficient-matrix product.
  Int m11 = 1, m12 = 0, m21 = 0, m22 = 1;
  for (long x : cf.period) {
    Int n11 = m11 * x + m12;
    Int n12 = m11;
    Int n21 = m21 * x + m22;
    Int n22 = m21;
    m11 = n11;
    m12 = n12;
    m21 = n21;
    m22 = n22;
  }
  Int delta = (m11 - m22) * (m11 - m22) + 4 * m21 * m12;
  Surd tail((m11 - m22), 1, 2 * m21, delta);  // positive root
  // v = h_j + 1/v folding the head from the inside out, then slope = 1/v.
  Surd v = tail;
  for (auto it = cf.head.rbegin(); it != cf.head.rend(); ++it) {
    v = v.reciprocal().plus(Rat(*it));
  }
  Surd m = v.reciprocal();
  if (m.is_rational()) throw std::logic_error("periodic cf gave rational slope");
  return SlopeSpec::surd(m.a(), m.b(), m.c(), m.d());
}

std::vector<std::pair<Int, Int>> cf_convergents(const CharacteristicCF& cf, long k) {
  if (k < 0) throw std::invalid_argument("cf_convergents: negative count");
  if (cf.period.empty() && static_cast<size_t>(k) > cf.head.size())
    throw std::invalid_argument("cf_convergents: expansion too short");
  std::vector<std::pair<Int, Int>> out;
  Int p_prev = 1, q_prev = 0;  // h(-1)/k(-1)
  Int p_cur = 0, q_cur = 1;    // h(0)/k(0) for a0 = 0
  for (long i = 0; i < k; ++i) {
    long a = cf_coefficient(cf, i);
    Int p_next = a * p_cur + p_prev;
    Int q_next = a * q_cur + q_prev;
    out.emplace_back(p_next, q_next);
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  return out;
}

ChristoffelWord christoffel(const Int& p, const Int& q) {
  if (p < 1 || q < 1) throw std::invalid_argument("christoffel: p, q must be positive");
  if (gcd(p, q) != 1) throw std::invalid_argument("christoffel: p, q must be coprime");
  CuttingLine line{SlopeSpec::rational(make_rat(p, q)), Rat(0),
                   IntervalSpec{Rat(0), Rat(q), true, true}, false};
  std::string interior = full_finite_word(line);
  ChristoffelWord c;
  c.word = BinaryWord("b" + interior + "a");
  c.p = p;
  c.q = q;
  return c;
}

bool is_christoffel(const BinaryWord& w) {
  if (w.size() < 2) return false;
  if (w.at(0) != 'b' || w.at(w.size() - 1) != 'a') return false;
  Int q = hamming_weight(w);
  Int p = Int(static_cast<long>(w.size())) - q;
  if (p < 1 || q < 1 || gcd(p, q) != 1) return false;
  return christoffel(p, q).word == w;
}

std::vector<ChristoffelWord> christoffel_prefix_tower(const CharacteristicCF& cf, long k) {
  if (cf.period.empty())
    throw std::invalid_argument("christoffel_prefix_tower: slope must be irrational");
  if (k < 1) throw std::invalid_argument("christoffel_prefix_tower: k must be positive");
  std::vector<ChristoffelWord> out;
  for (auto& [p, q] : cf_convergents(cf, k)) out.push_back(christoffel(p, q));
  return out;
}

SturmianVerdict is_sturmian_spec(const InfiniteWordSpec& spec) {
  return std::visit(
      [](const auto& s) -> SturmianVerdict {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EvPeriodicRight> ||
                      std::is_same_v<T, EvPeriodicLeft> || std::is_same_v<T, BiPeriodic>) {
          return {false, "periodic"};
        } else if constexpr (std::is_same_v<T, CuttingLine>) {
          if (!s.domain.lo && !s.domain.hi) {
            // fine
          } else if (s.domain.lo && s.domain.hi) {
            return {false, "finite word"};
          }
          if (s.slope.is_rational()) return {false, "rational slope"};
          return {true, ""};
        } else {
          static_assert(std::is_same_v<T, CharacteristicCF>);
          if (s.period.empty()) return {false, "rational slope"};
          return {true, ""};
        }
      },
      spec);
}

bool is_characteristic_spec(const InfiniteWordSpec& spec) {
  if (const auto* cf = std::get_if<CharacteristicCF>(&spec)) return !cf->period.empty();
  if (const auto* line = std::get_if<CuttingLine>(&spec)) {
    if (line->slope.is_rational()) return false;
    if (line->intercept != 0) return false;
    return line->domain.lo && *line->domain.lo == 0 && line->domain.lo_open &&
           !line->domain.hi;
  }
  return false;
}

}  // namespace brickwords
