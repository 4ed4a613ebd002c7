#include "brickwords/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brickwords {

BinaryWord::BinaryWord(std::string letters) : letters_(std::move(letters)) {
  for (char ch : letters_) {
    if (ch != 'a' && ch != 'b')
      throw std::invalid_argument("BinaryWord: letters must be 'a' or 'b'");
  }
}

long hamming_weight(const BinaryWord& w) {
  return static_cast<long>(std::count(w.str().begin(), w.str().end(), 'b'));
}

BinaryWord transpose(const BinaryWord& w) {
  std::string s(w.str().rbegin(), w.str().rend());
  return BinaryWord(std::move(s));
}

std::vector<size_t> occurrences(const BinaryWord& pattern, const BinaryWord& w) {
  std::vector<size_t> out;
  if (pattern.empty()) {
    for (size_t i = 0; i <= w.size(); ++i) out.push_back(i);
    return out;
  }
  if (pattern.size() > w.size()) return out;
  for (size_t i = 0; i + pattern.size() <= w.size(); ++i) {
    if (w.str().compare(i, pattern.size(), pattern.str()) == 0) out.push_back(i);
  }
  return out;
}

long complexity(const BinaryWord& w, long n) {
  if (n <= 0) throw std::invalid_argument("complexity: n must be positive");
  if (static_cast<size_t>(n) > w.size()) return 0;
  std::set<std::string> seen;
  for (size_t i = 0; i + n <= w.size(); ++i) seen.insert(w.str().substr(i, n));
  return static_cast<long>(seen.size());
}

std::optional<BalanceWitness> balance_witness(const BinaryWord& w) {
  const std::string& s = w.str();
  size_t len = s.size();
  // prefix[i] = number of b's among the first i letters
  std::vector<long> prefix(len + 1, 0);
  for (size_t i = 0; i < len; ++i) prefix[i + 1] = prefix[i] + (s[i] == 'b');
  for (size_t n = 1; n <= len; ++n) {
    long min_w = 0, max_w = 0;
    size_t min_pos = 0, max_pos = 0;
    bool first = true;
    for (size_t i = 0; i + n <= len; ++i) {
      long weight = prefix[i + n] - prefix[i];
      if (first || weight < min_w) {
        min_w = weight;
        min_pos = i;
      }
      if (first || weight > max_w) {
        max_w = weight;
        max_pos = i;
      }
      first = false;
    }
    if (!first && max_w - min_w >= 2) {
      BalanceWitness bw;
      bw.n = static_cast<long>(n);
      bw.light = w.substr(min_pos, n);
      bw.heavy = w.substr(max_pos, n);
      return bw;
    }
  }
  return std::nullopt;
}

std::optional<BinaryWord> sturmian_window_witness(const WordWindow& win) {
  const std::string& s = win.word.str();
  size_t len = s.size();
  if (len < 2) return std::nullopt;
  // axa and bxb have length |x| + 2; scan lengths from 0 up.
  for (size_t xl = 0; xl + 2 <= len; ++xl) {
    std::set<std::string> wrapped_a;
    for (size_t i = 0; i + xl + 2 <= len; ++i) {
      if (s[i] == 'a' && s[i + xl + 1] == 'a') wrapped_a.insert(s.substr(i + 1, xl));
    }
    if (wrapped_a.empty()) continue;
    for (size_t i = 0; i + xl + 2 <= len; ++i) {
      if (s[i] == 'b' && s[i + xl + 1] == 'b' && wrapped_a.count(s.substr(i + 1, xl))) {
        return BinaryWord(s.substr(i + 1, xl));
      }
    }
  }
  return std::nullopt;
}

bool is_primitive(const BinaryWord& w) {
  return !w.empty() && primitive_root(w) == w;
}

BinaryWord primitive_root(const BinaryWord& w) {
  size_t n = w.size();
  if (n == 0) throw std::invalid_argument("primitive_root: empty word");
  for (size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) ok = w.at(i) == w.at(i - p);
    if (ok) return w.substr(0, p);
  }
  return w;
}

BinaryWord least_rotation(const BinaryWord& w) {
  if (w.empty()) return w;
  std::string best = w.str();
  std::string cur = w.str();
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return BinaryWord(best);
}

}  // namespace brickwords
