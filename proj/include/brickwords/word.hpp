#pragma once

#include <optional>
#include <string>
#include <vector>

namespace brickwords {

// A finite word over the two-letter alphabet {a, b}. The empty word is fine.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string letters);

  const std::string& str() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char at(size_t i) const { return letters_[i]; }

  BinaryWord substr(size_t pos, size_t len) const {
    return BinaryWord(letters_.substr(pos, len));
  }

  bool operator==(const BinaryWord& o) const = default;
  auto operator<=>(const BinaryWord& o) const = default;

 private:
  std::string letters_;
};

inline BinaryWord operator+(const BinaryWord& u, const BinaryWord& v) {
  return BinaryWord(u.str() + v.str());
}

// Number of b's in w.
long hamming_weight(const BinaryWord& w);

// Letters of w in reverse order.
BinaryWord transpose(const BinaryWord& w);

// All start positions of pattern in w, overlaps allowed, increasing order.
// The empty pattern occurs at every boundary position 0..size(w).
std::vector<size_t> occurrences(const BinaryWord& pattern, const BinaryWord& w);

// Number of distinct length-n subwords; 0 when n > size(w). Requires n >= 1.
long complexity(const BinaryWord& w, long n);

struct BalanceWitness {
  long n = 0;          // smallest violating subword length
  BinaryWord light;    // minimal-weight length-n subword, earliest occurrence
  BinaryWord heavy;    // maximal-weight length-n subword, earliest occurrence
};

// A word is balanced when equal-length subwords have Hamming weights within 1
// of each other. Returns nullopt when balanced, otherwise the minimal witness.
std::optional<BalanceWitness> balance_witness(const BinaryWord& w);
inline bool is_balanced(const BinaryWord& w) { return !balance_witness(w).has_value(); }

// A finite window of evidence about a possibly infinite word. A closed end
// means the window really touches that end of the underlying word.
struct WordWindow {
  BinaryWord word;
  bool left_closed = false;
  bool right_closed = false;
};

// Shortest x (then earliest occurrences) such that axa and bxb both occur in
// w; nullopt when no such x exists. For infinite aperiodic words this is the
// Sturmian test, on windows it can only falsify.
std::optional<BinaryWord> sturmian_window_witness(const WordWindow& w);

// True when the word is primitive (not a proper power).
bool is_primitive(const BinaryWord& w);
// The primitive root of w.
BinaryWord primitive_root(const BinaryWord& w);
// Lexicographically least rotation.
BinaryWord least_rotation(const BinaryWord& w);

}  // namespace brickwords
