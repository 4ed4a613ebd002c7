#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brickwords/quiver.hpp"
#include "brickwords/string_word.hpp"

using namespace brickwords;

namespace {

// Six vertices, arrows alpha: 1->2, beta: 2->3, gamma: 3->4, delta: 5->3,
// epsilon: 5->6, theta: 6->2, relations alpha beta and delta gamma.
GentleAlgebra fig1() {
  Quiver q({"1", "2", "3", "4", "5", "6"},
           {{"alpha", "1", "2"},
            {"beta", "2", "3"},
            {"gamma", "3", "4"},
            {"delta", "5", "3"},
            {"epsilon", "5", "6"},
            {"theta", "6", "2"}});
  auto id = [&](const std::string& n) { return *q.arrow_id(n); };
  std::vector<std::pair<int, int>> rels{{id("alpha"), id("beta")},
                                        {id("delta"), id("gamma")}};
  return GentleAlgebra(std::move(q), std::move(rels));
}

GentleAlgebra dk(bool with_relations = true) {
  Quiver q({"1", "2", "3"},
           {{"a1", "1", "2"}, {"a2", "1", "2"}, {"b1", "2", "3"}, {"b2", "2", "3"}});
  std::vector<std::pair<int, int>> rels;
  if (with_relations) {
    rels = {{*q.arrow_id("a1"), *q.arrow_id("b1")}, {*q.arrow_id("a2"), *q.arrow_id("b2")}};
  }
  return GentleAlgebra(std::move(q), std::move(rels));
}

StringWord parse(const GentleAlgebra& A, const std::string& s) {
  std::string err;
  auto w = parse_string(A, s, &err);
  REQUIRE_MESSAGE(w.has_value(), err);
  return *w;
}

}  // namespace

TEST_CASE("figure-one algebra is gentle") {
  CHECK(fig1().validate().empty());
}

TEST_CASE("double-Kronecker with relations is gentle, without them is not") {
  CHECK(dk(true).validate().empty());
  auto violations = dk(false).validate();
  CHECK(!violations.empty());
  bool alpha1_flagged = false;
  for (const auto& v : violations)
    if (v.clause == "forward-nonideal" && v.where == "a1") alpha1_flagged = true;
  CHECK(alpha1_flagged);
}

TEST_CASE("loops must square to zero") {
  Quiver q({"1"}, {{"alpha", "1", "1"}});
  GentleAlgebra bad(q, {});
  bool loop_flagged = false;
  for (const auto& v : bad.validate())
    if (v.clause == "loop-square") loop_flagged = true;
  CHECK(loop_flagged);
  GentleAlgebra good(q, {{0, 0}});
  CHECK(good.validate().empty());
}

TEST_CASE("degree bounds are checked") {
  Quiver q({"1", "2"},
           {{"x", "1", "2"}, {"y", "1", "2"}, {"z", "1", "2"}});
  GentleAlgebra bad(q, {});
  bool out_deg = false, in_deg = false;
  for (const auto& v : bad.validate()) {
    if (v.clause == "out-degree") out_deg = true;
    if (v.clause == "in-degree") in_deg = true;
  }
  CHECK(out_deg);
  CHECK(in_deg);
}

TEST_CASE("string validity over figure one") {
  GentleAlgebra A = fig1();
  CHECK(parse_string(A, "beta delta- epsilon theta alpha-").has_value());
  std::string err;
  CHECK(!parse_string(A, "alpha beta", &err).has_value());  // relation
  CHECK(!parse_string(A, "alpha alpha-", &err).has_value());  // backtrack
  CHECK(!parse_string(A, "alpha gamma", &err).has_value());  // not composable
  CHECK(!parse_string(A, "zeta", &err).has_value());          // unknown arrow
  // inverse relation through the formal inverse: gamma- delta is the inverse
  // of delta- gamma... P2 on the inverse word
  CHECK(!parse_string(A, "gamma- delta-", &err).has_value());
}

TEST_CASE("inverse is an involution and flips validity symmetrically") {
  GentleAlgebra A = fig1();
  StringWord w = parse(A, "beta delta- epsilon theta alpha-");
  StringWord winv = w.inverse();
  CHECK(format_string(A, winv) == "alpha theta- epsilon- delta beta-");
  CHECK(is_string(A, winv));
  CHECK(winv.inverse() == w);
  StringWord lz = StringWord::lazy(1);
  CHECK(lz.inverse() == lz);
}

TEST_CASE("enumerate_strings counts for figure one") {
  GentleAlgebra A = fig1();
  auto len0 = enumerate_strings(A, 0);
  CHECK(len0.size() == 6);  // one lazy string per vertex
  auto len1 = enumerate_strings(A, 1);
  CHECK(len1.size() == 6 + 12);  // each arrow and its inverse
  for (const auto& w : len1)
    CHECK((w.is_lazy() || is_string(A, w)));
}

TEST_CASE("inverse closure of enumeration") {
  GentleAlgebra A = fig1();
  auto all = enumerate_strings(A, 5);
  for (const auto& w : all) {
    if (w.is_lazy()) continue;
    CHECK(is_string(A, w.inverse()));
    CHECK(std::count(all.begin(), all.end(), w.inverse()) == 1);
  }
}

TEST_CASE("no-band algebras stabilize, band algebras keep growing") {
  // linear A3 quiver has finitely many strings
  Quiver q({"1", "2", "3"}, {{"x", "1", "2"}, {"y", "2", "3"}});
  GentleAlgebra lin(q, {});
  size_t prev = enumerate_strings(lin, 2).size();
  size_t next = enumerate_strings(lin, 8).size();
  CHECK(prev == next);
  CHECK(enumerate_bands(lin, 8).empty());
  // figure one contains a band so counts strictly increase
  GentleAlgebra A = fig1();
  CHECK(enumerate_strings(A, 8).size() > enumerate_strings(A, 7).size());
}

TEST_CASE("figure one has exactly one band class up to length 8") {
  GentleAlgebra A = fig1();
  auto bands3 = enumerate_bands(A, 3);
  CHECK(bands3.empty());
  auto bands = enumerate_bands(A, 8);
  REQUIRE(bands.size() == 1);
  CHECK(format_string(A, bands[0].word) == "beta delta- epsilon theta");
}

TEST_CASE("band canonical form is rotation and inverse invariant") {
  GentleAlgebra A = fig1();
  StringWord u = parse(A, "beta delta- epsilon theta");
  Band canon = canonical_band(A, u);
  for (long k = 0; k < u.length(); ++k) {
    CHECK(canonical_band(A, u.rotate(k)) == canon);
    CHECK(canonical_band(A, u.inverse().rotate(k)) == canon);
  }
}

TEST_CASE("double-Kronecker bands of length two") {
  GentleAlgebra A = dk();
  auto bands = enumerate_bands(A, 2);
  REQUIRE(bands.size() == 2);
  // classes of a = a1- a2 and b = b1 b2-
  std::set<std::string> names;
  for (const auto& b : bands) names.insert(format_string(A, b.word));
  // canonical representatives start with the least step
  CHECK(names == std::set<std::string>{"a1 a2-", "b1 b2-"});
}

TEST_CASE("every band mixes directions") {
  GentleAlgebra A = dk();
  for (const auto& b : enumerate_bands(A, 6)) {
    bool dir = false, inv = false;
    for (const Step& s : b.word.steps()) (s.inverse ? inv : dir) = true;
    CHECK(dir);
    CHECK(inv);
  }
}

TEST_CASE("direct strings of figure one") {
  GentleAlgebra A = fig1();
  auto ds = direct_strings(A);
  REQUIRE(!ds.empty());
  // alpha and delta cannot extend either way; the longest is epsilon theta beta gamma
  std::set<std::string> maximal;
  for (const auto& d : ds)
    if (d.maximal) maximal.insert(format_string(A, d.word));
  CHECK(maximal ==
        std::set<std::string>{"alpha", "delta", "epsilon theta beta gamma"});
  const DirectString& longest = ds.back();
  CHECK(format_string(A, longest.word) == "epsilon theta beta gamma");
  CHECK(longest.maximal);
  // the longest inverse string is its formal inverse
  CHECK(format_string(A, longest.word.inverse()) == "gamma- beta- theta- epsilon-");
  CHECK(is_string(A, longest.word.inverse()));
}

TEST_CASE("direct strings of the double-Kronecker") {
  GentleAlgebra A = dk();
  auto ds = direct_strings(A);
  std::set<std::string> maximal;
  for (const auto& d : ds)
    if (d.maximal) maximal.insert(format_string(A, d.word));
  CHECK(maximal == std::set<std::string>{"a1 b2", "a2 b1"});
  // a1 b1 and a2 b2 are killed by the ideal
  CHECK(!parse_string(A, "a1 b1").has_value());
  CHECK(!parse_string(A, "a2 b2").has_value());
}

TEST_CASE("x_count sums to length plus one") {
  GentleAlgebra A = dk();
  StringWord a = parse(A, "a1- a2");
  CHECK(x_count(A, a, *A.quiver().vertex_id("2")) == 2);
  CHECK(x_count(A, a, *A.quiver().vertex_id("3")) == 0);
  CHECK(x_count(A, StringWord::lazy(*A.quiver().vertex_id("2")),
                *A.quiver().vertex_id("2")) == 1);
  for (const auto& w : enumerate_strings(A, 6)) {
    long total = 0;
    for (int v = 0; v < A.quiver().vertex_count(); ++v) total += x_count(A, w, v);
    CHECK(total == w.length() + 1);
  }
}

TEST_CASE("algebra json round trip") {
  GentleAlgebra A = fig1();
  auto j = algebra_to_json(A);
  GentleAlgebra back = algebra_from_json(j);
  CHECK(algebra_to_json(back) == j);
  CHECK(back.validate().empty());
  CHECK(back.relations() == A.relations());
}

TEST_CASE("string literal syntax round trips") {
  GentleAlgebra A = fig1();
  for (const auto& w : enumerate_strings(A, 5)) {
    CHECK(parse(A, format_string(A, w)) == w);
  }
}
