#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "brickwords/numeric.hpp"
#include "brickwords/surd.hpp"

namespace brickwords {

// The slope of a cutting line: a positive rational p/q or a positive
// quadratic surd (A + B*sqrt(d))/C. Only these admit exactly computable
// cutting sequences with a finite description.
class SlopeSpec {
 public:
  static SlopeSpec rational(const Rat& value);
  static SlopeSpec surd(Int a, Int b, Int c, Int d);

  bool is_rational() const;
  const Rat& rational_value() const;
  const Surd& surd_value() const;

  // sign of (m*x + c) - n, exact.
  int compare_line(const Int& x, const Rat& intercept, const Int& n) const;
  // sign of (m*x + c) - r for rational r.
  int compare_line_rat(const Rat& x, const Rat& intercept, const Rat& r) const;

  bool operator==(const SlopeSpec& o) const { return v_ == o.v_; }

  std::string to_string() const;
  // "p/q" or "surd:A:B:C:d"
  static std::optional<SlopeSpec> parse(const std::string& text);

 private:
  std::variant<Rat, Surd> v_;
  explicit SlopeSpec(std::variant<Rat, Surd> v) : v_(std::move(v)) {}
};

// floor(m*x + c) computed exactly: integer division for rational slopes,
// integer square-root sign tests for surds.
Int floor_line(const SlopeSpec& slope, const Rat& intercept, const Int& x);
// Same with a rational argument.
Int floor_line_rat(const SlopeSpec& slope, const Rat& intercept, const Rat& x);

// An interval of the real line. An absent bound means the interval is
// unbounded on that side, and the bound is then open by convention.
struct IntervalSpec {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
  bool lo_open = true;
  bool hi_open = true;

  bool operator==(const IntervalSpec& o) const = default;
  std::string to_string() const;
  // "(0,8)", "[0,inf)", "(-inf,inf)" ...
  static std::optional<IntervalSpec> parse(const std::string& text);
};

nlohmann::json slope_to_json(const SlopeSpec& s);
SlopeSpec slope_from_json(const nlohmann::json& j);
nlohmann::json interval_to_json(const IntervalSpec& d);
IntervalSpec interval_from_json(const nlohmann::json& j);

}  // namespace brickwords
