// bridge — the double-Kronecker classification and its verification sweeps.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "brickwords/dk.hpp"

using namespace brickwords;

namespace {

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infinite string bricks over the double-Kronecker algebra"};
  app.require_subcommand(1);

  std::string spec_file;
  long window_letters = 120;
  auto* classify_cmd = app.add_subcommand("classify", "classify an infinite-string spec");
  classify_cmd->add_option("--spec", spec_file, "spec json file")->required();
  classify_cmd->add_option("--window", window_letters, "letters of window evidence");

  long max_total = 10;
  auto* sweep_cmd =
      app.add_subcommand("verify-christoffel", "brick bands versus Christoffel classes");
  sweep_cmd->add_option("--max", max_total, "maximum band letter length")->required();

  std::string algebra_file, a_str, b_str;
  auto* config_cmd = app.add_subcommand("verify-config", "check a single-kissing configuration");
  config_cmd->add_option("--algebra", algebra_file)->required();
  config_cmd->add_option("--a", a_str)->required();
  config_cmd->add_option("--b", b_str)->required();

  std::string witness_word;
  bool left_open = false, right_open = false;
  auto* witness_cmd = app.add_subcommand("witness", "letter-level witnesses on a window");
  witness_cmd->add_option("--word", witness_word)->required();
  witness_cmd->add_flag("--left-open", left_open);
  witness_cmd->add_flag("--right-open", right_open);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) {
      std::ifstream in(spec_file);
      if (!in) return usage_error("cannot open " + spec_file);
      nlohmann::json j;
      in >> j;
      InfiniteDKSpec spec = dk_spec_from_json(j);
      ClassifyResult r = classify_infinite(spec);
      if (r.brick) {
        std::cout << "brick case=" << r.case_number << "\n";
        WindowEvidence e = check_brick_windows(spec, window_letters);
        for (const auto& f : e.findings) std::cout << "inconsistent " << f << "\n";
        std::cout << (e.consistent ? "windows-consistent" : "windows-inconsistent") << "\n";
        return e.consistent ? 0 : 1;
      }
      std::cout << "not-brick case=" << r.case_number << " reason=\"" << r.reason << "\"\n";
      Falsification f = falsify_not_brick(spec, window_letters);
      if (f.found) std::cout << "falsified " << f.description << "\n";
      return 0;
    }
    if (sweep_cmd->parsed()) {
      ChristoffelReport report = verify_brick_band_christoffel(max_total);
      for (const auto& v : report.bands) {
        std::cout << "band " << v.word << " end=" << v.end_dim << " christoffel="
                  << (v.christoffel_class ? v.christoffel_form : std::string("none"))
                  << (v.consistent ? " ok" : " MISMATCH") << "\n";
      }
      std::cout << "bands " << report.bands.size() << " mismatches " << report.mismatches
                << "\n";
      return report.mismatches == 0 ? 0 : 1;
    }
    if (config_cmd->parsed()) {
      GentleAlgebra A = load_algebra_file(algebra_file);
      std::string err;
      auto a = parse_string(A, a_str, &err);
      if (!a) return usage_error("bad string for --a: " + err);
      auto b = parse_string(A, b_str, &err);
      if (!b) return usage_error("bad string for --b: " + err);
      ConfigCheck check = verify_single_kissing(A, *a, *b);
      if (check.config) {
        std::cout << "ok z=" << format_string(A, check.config->z) << "\n";
        return 0;
      }
      for (const auto& v : check.violations) std::cout << "violation " << v << "\n";
      return 1;
    }
    if (witness_cmd->parsed()) {
      WordWindow win{BinaryWord(witness_word), !left_open, !right_open};
      auto strong = strong_inner_witness_ab(win);
      auto inner = inner_witness_ab(win);
      std::cout << "strong-inner-witness "
                << (strong ? "\"" + strong->str() + "\"" : std::string("none")) << "\n";
      std::cout << "inner-witness "
                << (inner ? "\"" + inner->str() + "\"" : std::string("none")) << "\n";
      if (!left_open) {
        auto pc = prefix_condition_witness(win);
        std::cout << "prefix-condition-witness "
                  << (pc ? "\"" + pc->str() + "\"" : std::string("none")) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return 2;
}
