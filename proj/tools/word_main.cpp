// word — binary-word generators and statistics on the command line.

#include <CLI11.hpp>
#include <iostream>

#include "brickwords/sturmian.hpp"

using namespace brickwords;

namespace {

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// "1,2,(3,4)": head 1,2 and period 3,4; the parenthesised part may be the
// whole expansion ("(1)") and may be absent for rational slopes ("2").
std::optional<CharacteristicCF> parse_cf(const std::string& text) {
  std::vector<long> head, period;
  std::string rest = text;
  auto open = rest.find('(');
  std::string head_part = open == std::string::npos ? rest : rest.substr(0, open);
  std::string period_part;
  if (open != std::string::npos) {
    auto close = rest.find(')', open);
    if (close == std::string::npos || close + 1 != rest.size()) return std::nullopt;
    period_part = rest.substr(open + 1, close - open - 1);
  }
  auto parse_list = [](const std::string& s, std::vector<long>& out) {
    std::string cur;
    for (char ch : s + ",") {
      if (ch == ',') {
        if (cur.empty()) continue;
        try {
          out.push_back(std::stol(cur));
        } catch (const std::exception&) {
          return false;
        }
        cur.clear();
      } else if (isdigit(static_cast<unsigned char>(ch))) {
        cur += ch;
      } else {
        return false;
      }
    }
    return true;
  };
  if (!parse_list(head_part, head) || !parse_list(period_part, period)) return std::nullopt;
  try {
    return CharacteristicCF(head, period);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary words: Christoffel words, cutting words, characteristic words"};
  app.require_subcommand(1);

  std::string p_str, q_str;
  auto* christoffel_cmd = app.add_subcommand("christoffel", "Christoffel word of slope P/Q");
  christoffel_cmd->add_option("P", p_str)->required();
  christoffel_cmd->add_option("Q", q_str)->required();

  std::string slope_str, intercept_str = "0", domain_str;
  long cut_len = -1;
  bool upper = false, lower = false;
  auto* cutting_cmd = app.add_subcommand("cutting", "cutting word of a line over a domain");
  cutting_cmd->add_option("--slope", slope_str, "p/q or surd:A:B:C:d")->required();
  cutting_cmd->add_option("--intercept", intercept_str, "exact rational");
  cutting_cmd->add_option("--domain", domain_str, "e.g. (0,8) or [0,inf)")->required();
  cutting_cmd->add_flag("--upper", upper);
  cutting_cmd->add_flag("--lower", lower);
  cutting_cmd->add_option("--len", cut_len, "letters to emit (required on infinite domains)");

  std::string cf_str;
  long char_len = 0;
  auto* char_cmd = app.add_subcommand("characteristic", "characteristic word from a continued fraction");
  char_cmd->add_option("--cf", cf_str, "e.g. \"(1)\" for the golden slope, \"1,2,(3)\"")->required();
  char_cmd->add_option("--len", char_len)->required();

  std::string bal_word;
  auto* bal_cmd = app.add_subcommand("balanced", "balance check with minimal witness");
  bal_cmd->add_option("W", bal_word)->required();

  std::string cx_word;
  long cx_n = 0;
  auto* cx_cmd = app.add_subcommand("complexity", "number of distinct length-N subwords");
  cx_cmd->add_option("W", cx_word)->required();
  cx_cmd->add_option("N", cx_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (christoffel_cmd->parsed()) {
      Int p(p_str), q(q_str);
      if (p < 1 || q < 1 || gcd(p, q) != 1)
        return usage_error("christoffel needs coprime positive integers");
      std::cout << christoffel(p, q).word.str() << "\n";
      return 0;
    }
    if (cutting_cmd->parsed()) {
      auto slope = SlopeSpec::parse(slope_str);
      if (!slope) return usage_error("bad slope: " + slope_str);
      auto intercept = parse_rational(intercept_str);
      if (!intercept) return usage_error("bad intercept: " + intercept_str);
      auto domain = IntervalSpec::parse(domain_str);
      if (!domain) return usage_error("bad domain: " + domain_str);
      if (upper == lower) return usage_error("choose exactly one of --lower/--upper");
      bool finite = domain->lo && domain->hi;
      if (!finite && cut_len < 0) return usage_error("--len is required on infinite domains");
      long len = finite ? (cut_len < 0 ? cutting_total_letters(
                                             CuttingLine{*slope, *intercept, *domain, upper})
                                       : cut_len)
                        : cut_len;
      WordWindow w = upper ? upper_cutting_word(*slope, *intercept, *domain, len)
                           : lower_cutting_word(*slope, *intercept, *domain, len);
      std::cout << w.word.str() << "\n";
      return 0;
    }
    if (char_cmd->parsed()) {
      auto cf = parse_cf(cf_str);
      if (!cf) return usage_error("bad continued fraction: " + cf_str);
      std::cout << characteristic_word(*cf, char_len).word.str() << "\n";
      return 0;
    }
    if (bal_cmd->parsed()) {
      auto witness = balance_witness(BinaryWord(bal_word));
      if (!witness) {
        std::cout << "balanced\n";
      } else {
        std::cout << "unbalanced n=" << witness->n << " light=" << witness->light.str()
                  << " heavy=" << witness->heavy.str() << "\n";
      }
      return 0;
    }
    if (cx_cmd->parsed()) {
      std::cout << complexity(BinaryWord(cx_word), cx_n) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return 2;
}
