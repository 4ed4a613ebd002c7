#include "brickwords/infinite_word.hpp"

#include <algorithm>
#include <stdexcept>

#include "brickwords/sturmian.hpp"

namespace brickwords {

using nlohmann::json;

namespace {

std::string rotate_right(std::string s) {
  if (s.size() > 1) std::rotate(s.begin(), s.end() - 1, s.end());
  return s;
}

std::string rotate_left(std::string s) {
  if (s.size() > 1) std::rotate(s.begin(), s.begin() + 1, s.end());
  return s;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

void check_cf_coefficients(const CharacteristicCF& cf) {
  if (cf.head.empty() && cf.period.empty())
    throw std::invalid_argument("CharacteristicCF: empty expansion");
  for (long a : cf.head)
    if (a < 1) throw std::invalid_argument("CharacteristicCF: coefficients must be >= 1");
  for (long a : cf.period)
    if (a < 1) throw std::invalid_argument("CharacteristicCF: coefficients must be >= 1");
}

// Crossing letters exactly at x = t, empty when the line misses the grid there.
std::string crossing_at(const SlopeSpec& m, const Rat& c, const Rat& t, bool upper) {
  bool vertical = rat_is_integer(t);
  bool horizontal = m.compare_line_rat(t, c, Rat(floor_line_rat(m, c, t))) == 0;
  if (vertical && horizontal) return upper ? "ab" : "ba";
  if (vertical) return "b";
  if (horizontal) return "a";
  return "";
}

}  // namespace

EvPeriodicRight::EvPeriodicRight(BinaryWord h, BinaryWord p) {
  if (p.empty()) throw std::invalid_argument("EvPeriodicRight: empty period");
  std::string per = primitive_root(p).str();
  std::string hd = h.str();
  // Absorb whole trailing periods, then rotate the period under the head's
  // trailing letters; the result has minimal head and a pinned rotation.
  while (ends_with(hd, per)) hd.resize(hd.size() - per.size());
  while (!hd.empty() && hd.back() == per.back()) {
    hd.pop_back();
    per = rotate_right(per);
  }
  head = BinaryWord(hd);
  period = BinaryWord(per);
}

EvPeriodicLeft::EvPeriodicLeft(BinaryWord p, BinaryWord t) {
  if (p.empty()) throw std::invalid_argument("EvPeriodicLeft: empty period");
  std::string per = primitive_root(p).str();
  std::string tl = t.str();
  while (starts_with(tl, per)) tl.erase(0, per.size());
  while (!tl.empty() && tl.front() == per.front()) {
    tl.erase(tl.begin());
    per = rotate_left(per);
  }
  period = BinaryWord(per);
  tail = BinaryWord(tl);
}

BiPeriodic::BiPeriodic(BinaryWord p) {
  if (p.empty()) throw std::invalid_argument("BiPeriodic: empty period");
  period = least_rotation(primitive_root(p));
}

CharacteristicCF::CharacteristicCF(std::vector<long> h, std::vector<long> p)
    : head(std::move(h)), period(std::move(p)) {
  check_cf_coefficients(*this);
}

Sidedness sidedness(const InfiniteWordSpec& spec) {
  return std::visit(
      [](const auto& s) -> Sidedness {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EvPeriodicRight>) return Sidedness::Right;
        else if constexpr (std::is_same_v<T, EvPeriodicLeft>) return Sidedness::Left;
        else if constexpr (std::is_same_v<T, BiPeriodic>) return Sidedness::Double;
        else if constexpr (std::is_same_v<T, CharacteristicCF>) return Sidedness::Right;
        else {
          static_assert(std::is_same_v<T, CuttingLine>);
          if (s.domain.lo && s.domain.hi) return Sidedness::Finite;
          if (s.domain.lo) return Sidedness::Right;
          if (s.domain.hi) return Sidedness::Left;
          return Sidedness::Double;
        }
      },
      spec);
}

const char* to_string(Periodicity p) {
  switch (p) {
    case Periodicity::Periodic: return "periodic";
    case Periodicity::EventuallyRightPeriodic: return "eventually-right-periodic";
    case Periodicity::EventuallyLeftPeriodic: return "eventually-left-periodic";
    case Periodicity::Aperiodic: return "aperiodic";
  }
  return "?";
}

Periodicity classify_periodicity(const InfiniteWordSpec& spec) {
  return std::visit(
      [](const auto& s) -> Periodicity {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EvPeriodicRight>) {
          return s.head.empty() ? Periodicity::Periodic
                                : Periodicity::EventuallyRightPeriodic;
        } else if constexpr (std::is_same_v<T, EvPeriodicLeft>) {
          return s.tail.empty() ? Periodicity::Periodic
                                : Periodicity::EventuallyLeftPeriodic;
        } else if constexpr (std::is_same_v<T, BiPeriodic>) {
          return Periodicity::Periodic;
        } else if constexpr (std::is_same_v<T, CharacteristicCF>) {
          return s.period.empty() ? Periodicity::Periodic : Periodicity::Aperiodic;
        } else {
          static_assert(std::is_same_v<T, CuttingLine>);
          bool has_lo = s.domain.lo.has_value();
          bool has_hi = s.domain.hi.has_value();
          if (has_lo && has_hi)
            throw std::invalid_argument("classify_periodicity: finite word");
          if (!s.slope.is_rational()) return Periodicity::Aperiodic;
          // Rational slope p/q: the crossing pattern repeats with x-period q,
          // so the word is periodic except possibly for extra letters emitted
          // exactly at a closed finite endpoint.
          const Rat& m = s.slope.rational_value();
          Int q = m.get_den();
          if (!has_lo && !has_hi) return Periodicity::Periodic;
          if (has_lo) {
            const Rat& lo = *s.domain.lo;
            std::string head =
                s.domain.lo_open ? "" : crossing_at(s.slope, s.intercept, lo, s.upper);
            CuttingLine block{s.slope, s.intercept,
                              IntervalSpec{lo, lo + Rat(q), true, false}, s.upper};
            std::string period = cutting_letters(block, 0, cutting_total_letters(block));
            EvPeriodicRight canon{BinaryWord(head), BinaryWord(period)};
            return canon.head.empty() ? Periodicity::Periodic
                                      : Periodicity::EventuallyRightPeriodic;
          }
          const Rat& hi = *s.domain.hi;
          std::string tail =
              s.domain.hi_open ? "" : crossing_at(s.slope, s.intercept, hi, s.upper);
          CuttingLine block{s.slope, s.intercept,
                            IntervalSpec{hi - Rat(q), hi, false, true}, s.upper};
          std::string period = cutting_letters(block, 0, cutting_total_letters(block));
          EvPeriodicLeft canon{BinaryWord(period), BinaryWord(tail)};
          return canon.tail.empty() ? Periodicity::Periodic
                                    : Periodicity::EventuallyLeftPeriodic;
        }
      },
      spec);
}

WordWindow window(const InfiniteWordSpec& spec, long offset, long length) {
  if (length < 0) throw std::invalid_argument("window: negative length");
  Sidedness side = sidedness(spec);
  switch (side) {
    case Sidedness::Right:
      if (offset < 0)
        throw std::out_of_range("window: right-infinite specs index from 0 upward");
      break;
    case Sidedness::Left:
      if (offset + length > 0)
        throw std::out_of_range("window: left-infinite specs index from -1 downward");
      break;
    default:
      break;
  }
  return std::visit(
      [&](const auto& s) -> WordWindow {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EvPeriodicRight>) {
          std::string out;
          size_t hl = s.head.size(), pl = s.period.size();
          for (long i = offset; i < offset + length; ++i) {
            size_t u = static_cast<size_t>(i);
            out += (u < hl) ? s.head.at(u) : s.period.at((u - hl) % pl);
          }
          return {BinaryWord(out), offset == 0, false};
        } else if constexpr (std::is_same_v<T, EvPeriodicLeft>) {
          std::string out;
          long tl = static_cast<long>(s.tail.size());
          long pl = static_cast<long>(s.period.size());
          for (long i = offset; i < offset + length; ++i) {
            long j = -i;  // 1-based distance from the right end
            if (j <= tl) {
              out += s.tail.at(tl - j);
            } else {
              long k = (j - tl - 1) % pl;  // 0-based from the period's right
              out += s.period.at(pl - 1 - k);
            }
          }
          return {BinaryWord(out), false, offset + length == 0};
        } else if constexpr (std::is_same_v<T, BiPeriodic>) {
          std::string out;
          long pl = static_cast<long>(s.period.size());
          for (long i = offset; i < offset + length; ++i) {
            long r = ((i % pl) + pl) % pl;
            out += s.period.at(r);
          }
          return {BinaryWord(out), false, false};
        } else if constexpr (std::is_same_v<T, CharacteristicCF>) {
          WordWindow prefix = characteristic_word(s, offset + length);
          return {prefix.word.substr(offset, length), offset == 0, false};
        } else {
          static_assert(std::is_same_v<T, CuttingLine>);
          if (side == Sidedness::Finite) {
            long total = cutting_total_letters(s);
            if (offset < 0 || offset + length > total)
              throw std::out_of_range("window: beyond the finite word");
            return {BinaryWord(cutting_letters(s, offset, offset + length)),
                    offset == 0, offset + length == total};
          }
          WordWindow w{BinaryWord(cutting_letters(s, offset, offset + length)), false,
                       false};
          if (side == Sidedness::Right) w.left_closed = offset == 0;
          if (side == Sidedness::Left) w.right_closed = offset + length == 0;
          return w;
        }
      },
      spec);
}

json spec_to_json(const InfiniteWordSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EvPeriodicRight>) {
          return json{{"kind", "eventually-periodic-right"},
                      {"head", s.head.str()},
                      {"period", s.period.str()}};
        } else if constexpr (std::is_same_v<T, EvPeriodicLeft>) {
          return json{{"kind", "eventually-periodic-left"},
                      {"period", s.period.str()},
                      {"tail", s.tail.str()}};
        } else if constexpr (std::is_same_v<T, BiPeriodic>) {
          return json{{"kind", "bi-periodic"}, {"period", s.period.str()}};
        } else if constexpr (std::is_same_v<T, CharacteristicCF>) {
          return json{{"kind", "characteristic-cf"},
                      {"cf_head", s.head},
                      {"cf_period", s.period}};
        } else {
          static_assert(std::is_same_v<T, CuttingLine>);
          return json{{"kind", "cutting-line"},
                      {"slope", slope_to_json(s.slope)},
                      {"intercept", rat_to_string(s.intercept)},
                      {"domain", interval_to_json(s.domain)},
                      {"convention", s.upper ? "upper" : "lower"}};
        }
      },
      spec);
}

InfiniteWordSpec spec_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "eventually-periodic-right") {
    return EvPeriodicRight(BinaryWord(j.at("head").get<std::string>()),
                           BinaryWord(j.at("period").get<std::string>()));
  }
  if (kind == "eventually-periodic-left") {
    return EvPeriodicLeft(BinaryWord(j.at("period").get<std::string>()),
                          BinaryWord(j.at("tail").get<std::string>()));
  }
  if (kind == "bi-periodic") {
    return BiPeriodic(BinaryWord(j.at("period").get<std::string>()));
  }
  if (kind == "characteristic-cf") {
    return CharacteristicCF(j.at("cf_head").get<std::vector<long>>(),
                            j.at("cf_period").get<std::vector<long>>());
  }
  if (kind == "cutting-line") {
    auto intercept = parse_rational(j.at("intercept").get<std::string>());
    if (!intercept) throw std::invalid_argument("bad intercept");
    std::string conv = j.value("convention", "lower");
    if (conv != "lower" && conv != "upper")
      throw std::invalid_argument("bad convention: " + conv);
    return CuttingLine{slope_from_json(j.at("slope")), *intercept,
                       interval_from_json(j.at("domain")), conv == "upper"};
  }
  throw std::invalid_argument("unknown spec kind: " + kind);
}

}  // namespace brickwords
