#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brickwords/infinite_word.hpp"
#include "brickwords/word.hpp"

using namespace brickwords;

namespace {
BinaryWord random_word(std::mt19937& rng, size_t max_len) {
  std::uniform_int_distribution<size_t> len(0, max_len);
  std::string s;
  size_t n = len(rng);
  for (size_t i = 0; i < n; ++i) s += (rng() & 1) ? 'b' : 'a';
  return BinaryWord(s);
}
}  // namespace

TEST_CASE("hamming weight") {
  CHECK(hamming_weight(BinaryWord("b")) == 1);
  CHECK(hamming_weight(BinaryWord("")) == 0);
  CHECK(hamming_weight(BinaryWord("babbababaa")) == 5);
}

TEST_CASE("hamming weight is additive over concatenation") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    BinaryWord u = random_word(rng, 12), v = random_word(rng, 12);
    CHECK(hamming_weight(u + v) == hamming_weight(u) + hamming_weight(v));
  }
}

TEST_CASE("transpose involution and weight preservation") {
  CHECK(transpose(BinaryWord("ab")) == BinaryWord("ba"));
  CHECK(transpose(BinaryWord("")) == BinaryWord(""));
  CHECK(transpose(BinaryWord("bba")) == BinaryWord("abb"));
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    BinaryWord w = random_word(rng, 20);
    CHECK(transpose(transpose(w)) == w);
    CHECK(hamming_weight(transpose(w)) == hamming_weight(w));
  }
}

TEST_CASE("occurrences with overlap and empty pattern") {
  CHECK(occurrences(BinaryWord("aa"), BinaryWord("aaa")) == std::vector<size_t>{0, 1});
  CHECK(occurrences(BinaryWord("b"), BinaryWord("aba")) == std::vector<size_t>{1});
  CHECK(occurrences(BinaryWord(""), BinaryWord("ab")) == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("complexity basics") {
  CHECK(complexity(BinaryWord("aab"), 2) == 2);
  CHECK(complexity(BinaryWord("abab"), 1) == 2);
  CHECK(complexity(BinaryWord("ab"), 5) == 0);
}

TEST_CASE("complexity growth bounds") {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    BinaryWord w = random_word(rng, 24);
    for (long n = 1; n + 1 <= static_cast<long>(w.size()); ++n) {
      CHECK(complexity(w, n + 1) <= 2 * complexity(w, n));
      CHECK(complexity(w, n) <= std::max(0L, static_cast<long>(w.size()) - n + 1));
    }
  }
}

TEST_CASE("balance examples from known words") {
  CHECK(is_balanced(BinaryWord("abababab")));
  CHECK(is_balanced(BinaryWord("")));
  auto w = balance_witness(BinaryWord("babbababaa"));
  REQUIRE(w.has_value());
  CHECK(w->n == 2);
  CHECK(w->light == BinaryWord("aa"));
  CHECK(w->heavy == BinaryWord("bb"));
}

TEST_CASE("subwords of balanced words are balanced") {
  std::mt19937 rng(19);
  int balanced_seen = 0;
  for (int i = 0; i < 400; ++i) {
    BinaryWord w = random_word(rng, 14);
    if (!is_balanced(w)) continue;
    ++balanced_seen;
    for (size_t s = 0; s < w.size(); ++s)
      for (size_t l = 0; s + l <= w.size(); ++l) CHECK(is_balanced(w.substr(s, l)));
  }
  CHECK(balanced_seen > 20);
}

TEST_CASE("unbalanced words contain aua and bub with a shared middle") {
  std::mt19937 rng(23);
  int unbalanced_seen = 0;
  for (int i = 0; i < 500; ++i) {
    BinaryWord w = random_word(rng, 16);
    auto witv = balance_witness(w);
    if (!witv) continue;
    ++unbalanced_seen;
    // the returned subwords really occur with the claimed weights
    CHECK(!occurrences(witv->light, w).empty());
    CHECK(!occurrences(witv->heavy, w).empty());
    CHECK(hamming_weight(witv->heavy) - hamming_weight(witv->light) >= 2);
    // some middle u has both aua and bub occurring
    bool found = false;
    for (size_t s = 0; s < w.size() && !found; ++s) {
      for (size_t l = 0; s + l + 2 <= w.size() && !found; ++l) {
        BinaryWord u = w.substr(s + 1, l);
        BinaryWord aua = BinaryWord("a") + u + BinaryWord("a");
        BinaryWord bub = BinaryWord("b") + u + BinaryWord("b");
        if (!occurrences(aua, w).empty() && !occurrences(bub, w).empty()) found = true;
      }
    }
    CHECK(found);
  }
  CHECK(unbalanced_seen > 50);
}

TEST_CASE("sturmian window witness") {
  CHECK(sturmian_window_witness({BinaryWord("aabb"), true, true}) == BinaryWord(""));
  CHECK(!sturmian_window_witness({BinaryWord("babbababbabb"), true, false}).has_value());
  CHECK(sturmian_window_witness({BinaryWord("babbababaa"), true, true}) == BinaryWord(""));
}

TEST_CASE("primitive roots and rotations") {
  CHECK(primitive_root(BinaryWord("abab")) == BinaryWord("ab"));
  CHECK(primitive_root(BinaryWord("aba")) == BinaryWord("aba"));
  CHECK(is_primitive(BinaryWord("ab")));
  CHECK(!is_primitive(BinaryWord("bb")));
  CHECK(least_rotation(BinaryWord("bab")) == BinaryWord("abb"));
}

TEST_CASE("eventually periodic canonicalization") {
  // empty head stays periodic
  EvPeriodicRight p{BinaryWord(""), BinaryWord("ab")};
  CHECK(classify_periodicity(InfiniteWordSpec(p)) == Periodicity::Periodic);
  // head that is a suffix of the periodic part collapses
  EvPeriodicRight q{BinaryWord("b"), BinaryWord("ab")};
  CHECK(classify_periodicity(InfiniteWordSpec(q)) == Periodicity::Periodic);
  // word = b.ababab... = (ba)^inf
  CHECK(q.head.empty());
  CHECK(q.period == BinaryWord("ba"));
  // genuinely eventually periodic
  EvPeriodicRight r{BinaryWord("aa"), BinaryWord("ab")};
  CHECK(classify_periodicity(InfiniteWordSpec(r)) == Periodicity::EventuallyRightPeriodic);
  // non-primitive periods are reduced
  EvPeriodicRight s{BinaryWord(""), BinaryWord("abab")};
  CHECK(s.period == BinaryWord("ab"));
}

TEST_CASE("eventually periodic left canonicalization mirrors the right") {
  EvPeriodicLeft p{BinaryWord("ab"), BinaryWord("a")};
  // ...ababab.a = ...(ba)(ba) shifted: tail absorbed
  CHECK(p.tail.empty());
  CHECK(classify_periodicity(InfiniteWordSpec(p)) == Periodicity::Periodic);
  EvPeriodicLeft q{BinaryWord("ab"), BinaryWord("bb")};
  CHECK(classify_periodicity(InfiniteWordSpec(q)) == Periodicity::EventuallyLeftPeriodic);
}

TEST_CASE("windows of periodic specs") {
  InfiniteWordSpec spec = EvPeriodicRight{BinaryWord(""), BinaryWord("ab")};
  WordWindow w = window(spec, 0, 5);
  CHECK(w.word == BinaryWord("ababa"));
  CHECK(w.left_closed);
  CHECK(!w.right_closed);
  CHECK_THROWS_AS(window(spec, -1, 3), std::out_of_range);

  InfiniteWordSpec bi = BiPeriodic{BinaryWord("ab")};
  WordWindow v = window(bi, -2, 4);
  CHECK(v.word == BinaryWord("abab"));
  CHECK(!v.left_closed);
  CHECK(!v.right_closed);

  InfiniteWordSpec left = EvPeriodicLeft{BinaryWord("ab"), BinaryWord("b")};
  WordWindow u = window(left, -4, 4);
  CHECK(u.right_closed);
  CHECK(!u.left_closed);
  // ...ababab b -> last four letters "abb"? indices -4..-1 of ...ab ab b
  CHECK(u.word == BinaryWord("babb"));
}

TEST_CASE("window determinism and overlap consistency") {
  InfiniteWordSpec spec = EvPeriodicRight{BinaryWord("ba"), BinaryWord("aab")};
  WordWindow w1 = window(spec, 2, 10);
  WordWindow w2 = window(spec, 5, 10);
  // overlap [5, 12) must agree
  CHECK(w1.word.str().substr(3) == w2.word.str().substr(0, 7));
}

TEST_CASE("spec json round trip") {
  std::vector<InfiniteWordSpec> specs;
  specs.push_back(EvPeriodicRight{BinaryWord("aa"), BinaryWord("ab")});
  specs.push_back(EvPeriodicLeft{BinaryWord("ab"), BinaryWord("bb")});
  specs.push_back(BiPeriodic{BinaryWord("ab")});
  specs.push_back(CharacteristicCF{{}, {1}});
  specs.push_back(CuttingLine{SlopeSpec::rational(make_rat(5, 8)), Rat(0),
                              IntervalSpec{Rat(0), std::nullopt, true, true}, false});
  specs.push_back(CuttingLine{SlopeSpec::surd(-1, 1, 2, 5), Rat(0),
                              IntervalSpec{std::nullopt, std::nullopt, true, true}, true});
  for (const auto& s : specs) {
    InfiniteWordSpec back = spec_from_json(spec_to_json(s));
    CHECK(spec_to_json(back) == spec_to_json(s));
  }
}
