// gentle — gentle-algebra queries: validation, strings, bands, Hom, bricks.

#include <CLI11.hpp>
#include <iostream>

#include "brickwords/string_module.hpp"

using namespace brickwords;

namespace {

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

std::optional<StringWord> parse_or_report(const GentleAlgebra& A, const std::string& text) {
  std::string err;
  auto w = parse_string(A, text, &err);
  if (!w) std::cerr << "error: bad string \"" << text << "\": " << err << "\n";
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gentle algebras: strings, bands, homomorphisms, bricks"};
  app.require_subcommand(1);

  std::string file, w1, w2;
  long max_len = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the gentleness conditions");
  validate_cmd->add_option("FILE", file)->required();

  auto* strings_cmd = app.add_subcommand("strings", "all strings up to a length cap");
  strings_cmd->add_option("FILE", file)->required();
  strings_cmd->add_option("--max", max_len)->required();

  auto* bands_cmd = app.add_subcommand("bands", "band classes up to a length cap");
  bands_cmd->add_option("FILE", file)->required();
  bands_cmd->add_option("--max", max_len)->required();

  auto* hom_cmd = app.add_subcommand("hom", "dim Hom(M(w1), M(w2)) with the graph-map count");
  hom_cmd->add_option("FILE", file)->required();
  hom_cmd->add_option("W1", w1)->required();
  hom_cmd->add_option("W2", w2)->required();

  auto* brick_cmd = app.add_subcommand("brick", "is M(w) a brick");
  brick_cmd->add_option("FILE", file)->required();
  brick_cmd->add_option("W", w1)->required();

  auto* kisses_cmd = app.add_subcommand("kisses", "kisses from w1 to w2");
  kisses_cmd->add_option("FILE", file)->required();
  kisses_cmd->add_option("W1", w1)->required();
  kisses_cmd->add_option("W2", w2)->required();

  auto* band_end_cmd = app.add_subcommand("band-end", "End dimension of the band module");
  band_end_cmd->add_option("FILE", file)->required();
  band_end_cmd->add_option("BAND", w1)->required();

  auto* module_cmd = app.add_subcommand("module", "print M(w) as dense 0/1 matrices");
  module_cmd->add_option("FILE", file)->required();
  module_cmd->add_option("W", w1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    GentleAlgebra A = load_algebra_file(file);
    if (validate_cmd->parsed()) {
      auto violations = A.validate();
      if (violations.empty()) {
        std::cout << "ok\n";
        return 0;
      }
      for (const auto& v : violations)
        std::cout << "violation " << v.clause << " at " << v.where << ": " << v.detail << "\n";
      return 1;
    }
    if (strings_cmd->parsed()) {
      for (const auto& w : enumerate_strings(A, max_len))
        std::cout << format_string(A, w) << "\n";
      return 0;
    }
    if (bands_cmd->parsed()) {
      for (const auto& b : enumerate_bands(A, max_len))
        std::cout << format_string(A, b.word) << "\n";
      return 0;
    }
    if (hom_cmd->parsed()) {
      auto u = parse_or_report(A, w1);
      auto v = parse_or_report(A, w2);
      if (!u || !v) return 2;
      long maps = static_cast<long>(graph_maps(A, *u, *v).size());
      long dim = hom_dim_oracle(A, *u, *v);
      std::cout << "graph-maps " << maps << "\n";
      std::cout << "hom-dim " << dim << "\n";
      return maps == dim ? 0 : 1;
    }
    if (brick_cmd->parsed()) {
      auto u = parse_or_report(A, w1);
      if (!u) return 2;
      BrickResult r = is_brick_finite(A, *u);
      if (r.brick) {
        std::cout << "brick\n";
      } else {
        std::cout << "not-brick witness-pattern-length " << r.witness->quotient_in_u.len
                  << " quotient-at " << r.witness->quotient_in_u.pos << " submodule-at "
                  << r.witness->submodule_in_v.pos << "\n";
      }
      return 0;
    }
    if (kisses_cmd->parsed()) {
      auto u = parse_or_report(A, w1);
      auto v = parse_or_report(A, w2);
      if (!u || !v) return 2;
      auto ks = kisses(A, *u, *v);
      for (const auto& k : ks) {
        std::cout << "kiss pattern-length " << k.quotient_in_u.len << " quotient-at "
                  << k.quotient_in_u.pos << " submodule-at " << k.submodule_in_v.pos << "\n";
      }
      if (ks.empty()) std::cout << "none\n";
      return 0;
    }
    if (band_end_cmd->parsed()) {
      auto u = parse_or_report(A, w1);
      if (!u) return 2;
      if (!is_band(A, *u)) return usage_error("not a band: " + w1);
      std::cout << band_module_end_dim(A, canonical_band(A, *u)) << "\n";
      return 0;
    }
    if (module_cmd->parsed()) {
      auto u = parse_or_report(A, w1);
      if (!u) return 2;
      StringModule M = string_module(A, *u);
      std::cout << "dims";
      for (int v = 0; v < A.quiver().vertex_count(); ++v)
        std::cout << " " << A.quiver().vertex_name(v) << ":" << M.dim[v];
      std::cout << "\n";
      for (int a = 0; a < A.quiver().arrow_count(); ++a) {
        const Arrow& ar = A.quiver().arrow(a);
        std::cout << ar.name << " : " << A.quiver().vertex_name(ar.source) << " -> "
                  << A.quiver().vertex_name(ar.target) << "\n";
        if (M.act[a].empty()) {
          std::cout << "  (empty)\n";
          continue;
        }
        for (const auto& row : M.act[a]) {
          std::cout << " ";
          for (int entry : row) std::cout << " " << entry;
          std::cout << "\n";
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return 2;
}
