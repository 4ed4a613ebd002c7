#include "brickwords/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace brickwords {

using nlohmann::json;

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!vertex_ids_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("Quiver: duplicate vertex " + vertices_[i]);
  }
  for (const auto& [name, src, tgt] : arrows) {
    auto s = vertex_id(src), t = vertex_id(tgt);
    if (!s || !t)
      throw std::invalid_argument("Quiver: arrow " + name + " uses unknown vertex");
    int id = static_cast<int>(arrows_.size());
    if (!arrow_ids_.emplace(name, id).second)
      throw std::invalid_argument("Quiver: duplicate arrow " + name);
    arrows_.push_back(Arrow{name, *s, *t});
  }
}

std::optional<int> Quiver::vertex_id(const std::string& name) const {
  auto it = vertex_ids_.find(name);
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::arrow_id(const std::string& name) const {
  auto it = arrow_ids_.find(name);
  if (it == arrow_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

bool Quiver::connected() const {
  if (vertices_.empty()) return false;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Arrow& a : arrows_) {
      int other = -1;
      if (a.source == v) other = a.target;
      if (a.target == v) other = a.source;
      if (other >= 0 && !seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

GentleAlgebra::GentleAlgebra(Quiver quiver, std::vector<std::pair<int, int>> relations)
    : quiver_(std::move(quiver)) {
  for (auto& [f, s] : relations) {
    if (f < 0 || f >= quiver_.arrow_count() || s < 0 || s >= quiver_.arrow_count())
      throw std::invalid_argument("GentleAlgebra: relation uses unknown arrow");
    relations_.insert({f, s});
  }
  arrows_by_name_.resize(quiver_.arrow_count());
  for (int a = 0; a < quiver_.arrow_count(); ++a) arrows_by_name_[a] = a;
  std::sort(arrows_by_name_.begin(), arrows_by_name_.end(), [this](int x, int y) {
    return quiver_.arrow(x).name < quiver_.arrow(y).name;
  });
  name_rank_.resize(quiver_.arrow_count());
  for (int r = 0; r < static_cast<int>(arrows_by_name_.size()); ++r)
    name_rank_[arrows_by_name_[r]] = r;
}

std::vector<GentleViolation> GentleAlgebra::validate() const {
  std::vector<GentleViolation> out;
  const Quiver& q = quiver_;

  if (!q.connected())
    out.push_back({"connected", "-", "underlying graph is not connected"});

  // Relations must be length-two composable paths.
  for (const auto& [f, s] : relations_) {
    if (q.arrow(f).target != q.arrow(s).source) {
      out.push_back({"relation-composable", q.arrow(f).name + "," + q.arrow(s).name,
                     "relation pair does not compose"});
    }
  }

  // (1) at most two incoming and two outgoing arrows per vertex; a loop
  // counts on both sides.
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.arrows_from(v).size() > 2)
      out.push_back({"out-degree", q.vertex_name(v), "more than two outgoing arrows"});
    if (q.arrows_into(v).size() > 2)
      out.push_back({"in-degree", q.vertex_name(v), "more than two incoming arrows"});
  }

  // (2) per arrow alpha: at most one continuation in the ideal, at most one
  // not in the ideal.
  for (int a = 0; a < q.arrow_count(); ++a) {
    int in_ct = 0, out_ct = 0;
    for (int b : q.arrows_from(q.arrow(a).target)) {
      if (in_ideal(a, b)) ++in_ct;
      else ++out_ct;
    }
    if (in_ct > 1)
      out.push_back({"forward-ideal", q.arrow(a).name,
                     "more than one continuation composing to zero"});
    if (out_ct > 1)
      out.push_back({"forward-nonideal", q.arrow(a).name,
                     "more than one continuation not in the ideal"});
  }

  // (3) dually on the left.
  for (int a = 0; a < q.arrow_count(); ++a) {
    int in_ct = 0, out_ct = 0;
    for (int b : q.arrows_into(q.arrow(a).source)) {
      if (in_ideal(b, a)) ++in_ct;
      else ++out_ct;
    }
    if (in_ct > 1)
      out.push_back({"backward-ideal", q.arrow(a).name,
                     "more than one predecessor composing to zero"});
    if (out_ct > 1)
      out.push_back({"backward-nonideal", q.arrow(a).name,
                     "more than one predecessor not in the ideal"});
  }

  // Loops must square to zero.
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (q.arrow(a).source == q.arrow(a).target && !in_ideal(a, a))
      out.push_back({"loop-square", q.arrow(a).name, "loop whose square is not zero"});
  }
  return out;
}

GentleAlgebra algebra_from_json(const json& j) {
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : j.at("arrows")) {
    arrows.emplace_back(a.at("name").get<std::string>(),
                        a.at("source").get<std::string>(),
                        a.at("target").get<std::string>());
  }
  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<std::pair<int, int>> rels;
  for (const auto& r : j.at("relations")) {
    if (!r.is_array() || r.size() != 2)
      throw std::invalid_argument("relation must be a pair of arrow names");
    auto f = q.arrow_id(r[0].get<std::string>());
    auto s = q.arrow_id(r[1].get<std::string>());
    if (!f || !s) throw std::invalid_argument("relation uses unknown arrow");
    rels.emplace_back(*f, *s);
  }
  return GentleAlgebra(std::move(q), std::move(rels));
}

json algebra_to_json(const GentleAlgebra& a) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < a.quiver().vertex_count(); ++v)
    j["vertices"].push_back(a.quiver().vertex_name(v));
  j["arrows"] = json::array();
  for (const Arrow& ar : a.quiver().arrows()) {
    j["arrows"].push_back({{"name", ar.name},
                           {"source", a.quiver().vertex_name(ar.source)},
                           {"target", a.quiver().vertex_name(ar.target)}});
  }
  j["relations"] = json::array();
  for (const auto& [f, s] : a.relations()) {
    j["relations"].push_back(
        {a.quiver().arrow(f).name, a.quiver().arrow(s).name});
  }
  return j;
}

GentleAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file: " + path);
  json j;
  in >> j;
  return algebra_from_json(j);
}

}  // namespace brickwords
