#include "brickwords/string_word.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brickwords {

namespace {

int step_source(const GentleAlgebra& A, Step s) {
  const Arrow& a = A.quiver().arrow(s.arrow);
  return s.inverse ? a.target : a.source;
}

int step_target(const GentleAlgebra& A, Step s) {
  const Arrow& a = A.quiver().arrow(s.arrow);
  return s.inverse ? a.source : a.target;
}

// P1/P2 for one junction.
bool pair_ok(const GentleAlgebra& A, Step x, Step y) {
  if (step_target(A, x) != step_source(A, y)) return false;
  if (y.arrow == x.arrow && y.inverse != x.inverse) return false;  // backtrack
  if (!x.inverse && !y.inverse && A.in_ideal(x.arrow, y.arrow)) return false;
  if (x.inverse && y.inverse && A.in_ideal(y.arrow, x.arrow)) return false;
  return true;
}

bool steps_primitive(const std::vector<Step>& s) {
  size_t n = s.size();
  for (size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) ok = s[i] == s[i - p];
    if (ok) return false;
  }
  return n > 0;
}

}  // namespace

StringWord StringWord::lazy(int vertex) {
  StringWord w;
  w.vertex_ = vertex;
  return w;
}

StringWord StringWord::from_steps(std::vector<Step> steps) {
  if (steps.empty()) throw std::invalid_argument("from_steps: use lazy() for empty");
  StringWord w;
  w.steps_ = std::move(steps);
  return w;
}

int StringWord::source(const GentleAlgebra& A) const {
  return is_lazy() ? vertex_ : step_source(A, steps_.front());
}

int StringWord::target(const GentleAlgebra& A) const {
  return is_lazy() ? vertex_ : step_target(A, steps_.back());
}

int StringWord::vertex_at(const GentleAlgebra& A, long i) const {
  if (i < 0 || i > length()) throw std::out_of_range("vertex_at");
  if (is_lazy()) return vertex_;
  if (i == length()) return step_target(A, steps_.back());
  return step_source(A, steps_[i]);
}

StringWord StringWord::inverse() const {
  if (is_lazy()) return *this;
  std::vector<Step> rev(steps_.rbegin(), steps_.rend());
  for (Step& s : rev) s.inverse = !s.inverse;
  return from_steps(std::move(rev));
}

StringWord StringWord::subword(long pos, long len) const {
  if (len <= 0) throw std::invalid_argument("subword: use subword_at for lazy pieces");
  if (pos < 0 || pos + len > length()) throw std::out_of_range("subword");
  return from_steps(std::vector<Step>(steps_.begin() + pos, steps_.begin() + pos + len));
}

StringWord StringWord::subword_at(const GentleAlgebra& A, long pos, long len) const {
  if (len == 0) return lazy(vertex_at(A, pos));
  return subword(pos, len);
}

StringWord StringWord::rotate(long k) const {
  if (is_lazy()) return *this;
  long n = length();
  k = ((k % n) + n) % n;
  std::vector<Step> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(steps_[(i + k) % n]);
  return from_steps(std::move(out));
}

StringWord StringWord::concat(const StringWord& tail) const {
  if (is_lazy()) return tail;
  if (tail.is_lazy()) return *this;
  std::vector<Step> out = steps_;
  out.insert(out.end(), tail.steps_.begin(), tail.steps_.end());
  return from_steps(std::move(out));
}

StringWord StringWord::power(long n) const {
  if (is_lazy()) return *this;
  if (n < 1) throw std::invalid_argument("power: need n >= 1");
  std::vector<Step> out;
  out.reserve(steps_.size() * n);
  for (long i = 0; i < n; ++i) out.insert(out.end(), steps_.begin(), steps_.end());
  return from_steps(std::move(out));
}

std::optional<StringViolation> check_string(const GentleAlgebra& A,
                                            const std::vector<Step>& steps) {
  for (long i = 0; i < static_cast<long>(steps.size()); ++i) {
    if (steps[i].arrow < 0 || steps[i].arrow >= A.quiver().arrow_count())
      return StringViolation{i, "unknown-arrow", "arrow id out of range"};
  }
  for (long i = 0; i + 1 < static_cast<long>(steps.size()); ++i) {
    Step x = steps[i], y = steps[i + 1];
    if (step_target(A, x) != step_source(A, y))
      return StringViolation{i, "P1-compose", "consecutive steps do not compose"};
    if (y.arrow == x.arrow && y.inverse != x.inverse)
      return StringViolation{i, "P1-backtrack", "step followed by its own inverse"};
    if (!x.inverse && !y.inverse && A.in_ideal(x.arrow, y.arrow))
      return StringViolation{i, "P2",
                             A.quiver().arrow(x.arrow).name + " " +
                                 A.quiver().arrow(y.arrow).name + " lies in the ideal"};
    if (x.inverse && y.inverse && A.in_ideal(y.arrow, x.arrow))
      return StringViolation{i, "P2-inverse",
                             "the formal inverse contains " +
                                 A.quiver().arrow(y.arrow).name + " " +
                                 A.quiver().arrow(x.arrow).name};
  }
  return std::nullopt;
}

std::optional<StringWord> parse_string(const GentleAlgebra& A, const std::string& text,
                                       std::string* error) {
  std::istringstream in(text);
  std::vector<Step> steps;
  std::string tok;
  int lazy_vertex = -1;
  while (in >> tok) {
    if (tok.rfind("e:", 0) == 0) {
      auto v = A.quiver().vertex_id(tok.substr(2));
      if (!v) {
        if (error) *error = "unknown vertex in " + tok;
        return std::nullopt;
      }
      if (lazy_vertex >= 0 || !steps.empty()) {
        if (error) *error = "lazy token must stand alone";
        return std::nullopt;
      }
      lazy_vertex = *v;
      continue;
    }
    bool inv = !tok.empty() && tok.back() == '-';
    std::string name = inv ? tok.substr(0, tok.size() - 1) : tok;
    auto a = A.quiver().arrow_id(name);
    if (!a) {
      if (error) *error = "unknown arrow " + name;
      return std::nullopt;
    }
    steps.push_back(Step{*a, inv});
  }
  if (lazy_vertex >= 0) {
    if (!steps.empty()) {
      if (error) *error = "lazy token must stand alone";
      return std::nullopt;
    }
    return StringWord::lazy(lazy_vertex);
  }
  if (steps.empty()) {
    if (error) *error = "empty string literal";
    return std::nullopt;
  }
  if (auto v = check_string(A, steps)) {
    if (error) *error = v->clause + " at step " + std::to_string(v->index) + ": " + v->detail;
    return std::nullopt;
  }
  return StringWord::from_steps(std::move(steps));
}

std::string format_string(const GentleAlgebra& A, const StringWord& w) {
  if (w.is_lazy()) return "e:" + A.quiver().vertex_name(w.lazy_vertex());
  std::string out;
  for (const Step& s : w.steps()) {
    if (!out.empty()) out += ' ';
    out += A.quiver().arrow(s.arrow).name;
    if (s.inverse) out += '-';
  }
  return out;
}

bool step_less(const GentleAlgebra& A, Step x, Step y) {
  int rx = A.name_rank(x.arrow), ry = A.name_rank(y.arrow);
  if (rx != ry) return rx < ry;
  return x.inverse < y.inverse;  // direct before inverse
}

bool step_seq_less(const GentleAlgebra& A, const std::vector<Step>& x,
                   const std::vector<Step>& y) {
  for (size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] == y[i]) continue;
    return step_less(A, x[i], y[i]);
  }
  return x.size() < y.size();
}

std::vector<StringWord> enumerate_strings(const GentleAlgebra& A, long max_len) {
  if (max_len < 0) throw std::invalid_argument("enumerate_strings: negative cap");
  std::vector<StringWord> out;
  for (int v = 0; v < A.quiver().vertex_count(); ++v) out.push_back(StringWord::lazy(v));

  // Candidate continuations per vertex, in canonical step order.
  std::vector<std::vector<Step>> from(A.quiver().vertex_count());
  for (int a = 0; a < A.quiver().arrow_count(); ++a) {
    from[A.quiver().arrow(a).source].push_back(Step{a, false});
    from[A.quiver().arrow(a).target].push_back(Step{a, true});
  }
  for (auto& v : from)
    std::sort(v.begin(), v.end(), [&](Step x, Step y) { return step_less(A, x, y); });

  std::vector<Step> cur;
  auto dfs = [&](auto&& self, int at) -> void {
    if (static_cast<long>(cur.size()) >= max_len) return;
    for (Step s : from[at]) {
      if (!cur.empty() && !pair_ok(A, cur.back(), s)) continue;
      cur.push_back(s);
      out.push_back(StringWord::from_steps(cur));
      self(self, step_target(A, s));
      cur.pop_back();
    }
  };
  for (int v = 0; v < A.quiver().vertex_count(); ++v) dfs(dfs, v);

  std::sort(out.begin(), out.end(), [&](const StringWord& x, const StringWord& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    if (x.is_lazy()) return x.lazy_vertex() < y.lazy_vertex();
    return step_seq_less(A, x.steps(), y.steps());
  });
  return out;
}

bool is_band(const GentleAlgebra& A, const StringWord& w) {
  if (w.is_lazy() || w.length() < 1) return false;
  if (w.source(A) != w.target(A)) return false;
  if (check_string(A, w.steps())) return false;
  if (!pair_ok(A, w.steps().back(), w.steps().front())) return false;  // w^2 a string
  if (!steps_primitive(w.steps())) return false;
  bool has_direct = false, has_inverse = false;
  for (const Step& s : w.steps()) (s.inverse ? has_inverse : has_direct) = true;
  return has_direct && has_inverse;
}

Band canonical_band(const GentleAlgebra& A, const StringWord& w) {
  if (!is_band(A, w)) throw std::invalid_argument("canonical_band: not a band");
  StringWord best = w;
  auto consider = [&](const StringWord& cand) {
    if (step_seq_less(A, cand.steps(), best.steps())) best = cand;
  };
  StringWord inv = w.inverse();
  for (long k = 0; k < w.length(); ++k) {
    consider(w.rotate(k));
    consider(inv.rotate(k));
  }
  return Band{best};
}

std::vector<Band> enumerate_bands(const GentleAlgebra& A, long max_len) {
  if (max_len < 1) throw std::invalid_argument("enumerate_bands: cap must be >= 1");
  std::vector<Band> out;
  std::set<std::vector<std::pair<int, int>>> seen;  // canonical step keys
  for (const StringWord& w : enumerate_strings(A, max_len)) {
    if (w.is_lazy() || !is_band(A, w)) continue;
    Band b = canonical_band(A, w);
    std::vector<std::pair<int, int>> key;
    for (const Step& s : b.word.steps()) key.emplace_back(s.arrow, s.inverse ? 1 : 0);
    if (seen.insert(key).second) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [&](const Band& x, const Band& y) {
    if (x.word.length() != y.word.length()) return x.word.length() < y.word.length();
    return step_seq_less(A, x.word.steps(), y.word.steps());
  });
  return out;
}

std::vector<DirectString> direct_strings(const GentleAlgebra& A) {
  std::vector<DirectString> out;
  std::vector<Step> cur;
  auto dfs = [&](auto&& self, int at) -> void {
    for (int a : A.quiver().arrows_from(at)) {
      Step s{a, false};
      if (!cur.empty() && !pair_ok(A, cur.back(), s)) continue;
      cur.push_back(s);
      out.push_back({StringWord::from_steps(cur), false});
      self(self, A.quiver().arrow(a).target);
      cur.pop_back();
    }
  };
  for (int v = 0; v < A.quiver().vertex_count(); ++v) dfs(dfs, v);

  for (DirectString& d : out) {
    bool extend_right = false, extend_left = false;
    int t = d.word.target(A), s = d.word.source(A);
    for (int b : A.quiver().arrows_from(t))
      if (pair_ok(A, d.word.steps().back(), Step{b, false})) extend_right = true;
    for (int b : A.quiver().arrows_into(s))
      if (pair_ok(A, Step{b, false}, d.word.steps().front())) extend_left = true;
    d.maximal = !extend_right && !extend_left;
  }
  std::sort(out.begin(), out.end(), [&](const DirectString& x, const DirectString& y) {
    if (x.word.length() != y.word.length()) return x.word.length() < y.word.length();
    return step_seq_less(A, x.word.steps(), y.word.steps());
  });
  return out;
}

long x_count(const GentleAlgebra& A, const StringWord& w, int vertex) {
  long count = 0;
  for (long i = 0; i <= w.length(); ++i)
    if (w.vertex_at(A, i) == vertex) ++count;
  return count;
}

}  // namespace brickwords
