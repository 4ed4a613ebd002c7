#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace brickwords {

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
};

// A finite connected quiver. Vertices and arrows are addressed by name;
// integer ids are the declaration positions.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  std::optional<int> vertex_id(const std::string& name) const;
  std::optional<int> arrow_id(const std::string& name) const;
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;
  bool connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_ids_;
  std::map<std::string, int> arrow_ids_;
};

struct GentleViolation {
  std::string clause;  // which gentleness condition failed
  std::string where;   // vertex or arrow name
  std::string detail;
};

// A gentle algebra: quiver plus quadratic monomial relations (ordered pairs
// of composable arrows). Construction does not validate; call validate() or
// use checked().
class GentleAlgebra {
 public:
  GentleAlgebra(Quiver quiver, std::vector<std::pair<int, int>> relations);

  const Quiver& quiver() const { return quiver_; }
  bool in_ideal(int first, int second) const {
    return relations_.count({first, second}) > 0;
  }
  const std::set<std::pair<int, int>>& relations() const { return relations_; }

  std::vector<GentleViolation> validate() const;
  bool is_gentle() const { return validate().empty(); }

  // Arrow ids sorted by name; the order used for canonical forms.
  const std::vector<int>& arrows_by_name() const { return arrows_by_name_; }
  // Rank of an arrow in the name order.
  int name_rank(int arrow) const { return name_rank_[arrow]; }

 private:
  Quiver quiver_;
  std::set<std::pair<int, int>> relations_;
  std::vector<int> arrows_by_name_;
  std::vector<int> name_rank_;
};

// File format: {"vertices": [names], "arrows": [{"name","source","target"}],
// "relations": [[first, second], ...]}. Bit-exact round trip.
GentleAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const GentleAlgebra& a);
GentleAlgebra load_algebra_file(const std::string& path);

}  // namespace brickwords
