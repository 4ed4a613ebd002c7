#include "brickwords/slope.hpp"

#include <stdexcept>

namespace brickwords {

using nlohmann::json;

SlopeSpec SlopeSpec::rational(const Rat& value) {
  if (value <= 0) throw std::invalid_argument("slope must be positive");
  return SlopeSpec(std::variant<Rat, Surd>(value));
}

SlopeSpec SlopeSpec::surd(Int a, Int b, Int c, Int d) {
  Surd s(std::move(a), std::move(b), std::move(c), std::move(d));
  if (s.is_rational()) {
    // Degenerate input (square radicand or b = 0) collapses to a rational.
    Rat v = s.rational_value();
    if (v <= 0) throw std::invalid_argument("slope must be positive");
    return SlopeSpec(std::variant<Rat, Surd>(v));
  }
  if (s.sign() <= 0) throw std::invalid_argument("slope must be positive");
  return SlopeSpec(std::variant<Rat, Surd>(std::move(s)));
}

bool SlopeSpec::is_rational() const { return std::holds_alternative<Rat>(v_); }

const Rat& SlopeSpec::rational_value() const { return std::get<Rat>(v_); }

const Surd& SlopeSpec::surd_value() const { return std::get<Surd>(v_); }

int SlopeSpec::compare_line(const Int& x, const Rat& intercept, const Int& n) const {
  return compare_line_rat(Rat(x), intercept, Rat(n));
}

int SlopeSpec::compare_line_rat(const Rat& x, const Rat& intercept, const Rat& r) const {
  if (is_rational()) {
    Rat lhs = rational_value() * x + intercept;
    return cmp(lhs, r);
  }
  const Surd& m = surd_value();
  // m*x + c - r
  Surd value = m.times(x).plus(intercept - r);
  return value.sign();
}

std::string SlopeSpec::to_string() const {
  if (is_rational()) return rat_to_string(rational_value());
  const Surd& s = surd_value();
  return "surd:" + s.a().get_str() + ":" + s.b().get_str() + ":" +
         s.c().get_str() + ":" + s.d().get_str();
}

std::optional<SlopeSpec> SlopeSpec::parse(const std::string& text) {
  if (text.rfind("surd:", 0) == 0) {
    std::string rest = text.substr(5);
    Int parts[4];
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      size_t colon = rest.find(':', pos);
      std::string tok = (colon == std::string::npos)
                            ? rest.substr(pos)
                            : rest.substr(pos, colon - pos);
      if (tok.empty()) return std::nullopt;
      if (i < 3 && colon == std::string::npos) return std::nullopt;
      try {
        parts[i] = Int(tok);
      } catch (const std::exception&) {
        return std::nullopt;
      }
      pos = colon + 1;
    }
    try {
      return SlopeSpec::surd(parts[0], parts[1], parts[2], parts[3]);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  auto r = parse_rational(text);
  if (!r || *r <= 0) return std::nullopt;
  return SlopeSpec::rational(*r);
}

Int floor_line(const SlopeSpec& slope, const Rat& intercept, const Int& x) {
  return floor_line_rat(slope, intercept, Rat(x));
}

Int floor_line_rat(const SlopeSpec& slope, const Rat& intercept, const Rat& x) {
  if (slope.is_rational()) {
    return rat_floor(slope.rational_value() * x + intercept);
  }
  return slope.surd_value().times(x).plus(intercept).floor();
}

std::string IntervalSpec::to_string() const {
  std::string s;
  s += lo ? (lo_open ? "(" : "[") : "(";
  s += lo ? rat_to_string(*lo) : "-inf";
  s += ",";
  s += hi ? rat_to_string(*hi) : "inf";
  s += hi ? (hi_open ? ")" : "]") : ")";
  return s;
}

std::optional<IntervalSpec> IntervalSpec::parse(const std::string& text) {
  if (text.size() < 3) return std::nullopt;
  char open = text.front();
  char close = text.back();
  if (open != '(' && open != '[') return std::nullopt;
  if (close != ')' && close != ']') return std::nullopt;
  std::string body = text.substr(1, text.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos) return std::nullopt;
  std::string lo_s = body.substr(0, comma);
  std::string hi_s = body.substr(comma + 1);
  IntervalSpec d;
  d.lo_open = open == '(';
  d.hi_open = close == ')';
  if (lo_s == "-inf") {
    if (!d.lo_open) return std::nullopt;
    d.lo = std::nullopt;
  } else {
    auto v = parse_rational(lo_s);
    if (!v) return std::nullopt;
    d.lo = *v;
  }
  if (hi_s == "inf" || hi_s == "+inf") {
    if (!d.hi_open) return std::nullopt;
    d.hi = std::nullopt;
  } else {
    auto v = parse_rational(hi_s);
    if (!v) return std::nullopt;
    d.hi = *v;
  }
  if (d.lo && d.hi && !(*d.lo < *d.hi)) return std::nullopt;
  return d;
}

json slope_to_json(const SlopeSpec& s) {
  if (s.is_rational()) {
    return json{{"type", "rational"}, {"value", rat_to_string(s.rational_value())}};
  }
  const Surd& q = s.surd_value();
  return json{{"type", "surd"},
              {"a", q.a().get_str()},
              {"b", q.b().get_str()},
              {"c", q.c().get_str()},
              {"d", q.d().get_str()}};
}

SlopeSpec slope_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "rational") {
    auto r = parse_rational(j.at("value").get<std::string>());
    if (!r) throw std::invalid_argument("bad rational slope");
    return SlopeSpec::rational(*r);
  }
  if (type == "surd") {
    return SlopeSpec::surd(Int(j.at("a").get<std::string>()),
                           Int(j.at("b").get<std::string>()),
                           Int(j.at("c").get<std::string>()),
                           Int(j.at("d").get<std::string>()));
  }
  throw std::invalid_argument("unknown slope type: " + type);
}

json interval_to_json(const IntervalSpec& d) {
  json j;
  j["lo"] = d.lo ? json(rat_to_string(*d.lo)) : json("-inf");
  j["hi"] = d.hi ? json(rat_to_string(*d.hi)) : json("inf");
  j["lo_open"] = d.lo_open;
  j["hi_open"] = d.hi_open;
  return j;
}

IntervalSpec interval_from_json(const json& j) {
  IntervalSpec d;
  std::string lo = j.at("lo").get<std::string>();
  std::string hi = j.at("hi").get<std::string>();
  d.lo_open = j.value("lo_open", true);
  d.hi_open = j.value("hi_open", true);
  if (lo == "-inf") {
    d.lo = std::nullopt;
    d.lo_open = true;
  } else {
    auto v = parse_rational(lo);
    if (!v) throw std::invalid_argument("bad interval bound");
    d.lo = *v;
  }
  if (hi == "inf" || hi == "+inf") {
    d.hi = std::nullopt;
    d.hi_open = true;
  } else {
    auto v = parse_rational(hi);
    if (!v) throw std::invalid_argument("bad interval bound");
    d.hi = *v;
  }
  if (d.lo && d.hi && !(*d.lo < *d.hi)) throw std::invalid_argument("empty interval");
  return d;
}

}  // namespace brickwords
