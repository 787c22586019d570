#include <doctest.h>

#include <unordered_set>

#include "common.hpp"

using namespace bruhat;
using testing_util::group;
using testing_util::oracle_group;
using testing_util::to_oracle;
using testing_util::word;

TEST_CASE("root counts") {
  // |Phi+| = n(n+1)/2, n^2, n^2, n(n-1), 36, 63, 120, 24, 6
  CHECK(group("A4")->roots().size() == 10);
  CHECK(group("B4")->roots().size() == 16);
  CHECK(group("C3")->roots().size() == 9);
  CHECK(group("D5")->roots().size() == 20);
  CHECK(group("E6")->roots().size() == 36);
  CHECK(group("E7")->roots().size() == 63);
  CHECK(group("E8")->roots().size() == 120);
  CHECK(group("F4")->roots().size() == 24);
  CHECK(group("G2")->roots().size() == 6);
}

TEST_CASE("lengths match Cayley-graph distance") {
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    auto g = group(name);
    auto o = oracle_group(name);
    REQUIRE(o.size() == g->order());
    for (std::size_t w = 0; w < o.size(); ++w) {
      const auto& ow = o.word(w);
      auto e = g->from_word(std::vector<Node>(ow.begin(), ow.end()));
      CHECK(e.length() == o.length(w));
      CHECK(static_cast<std::size_t>(e.word().size()) == static_cast<std::size_t>(e.length()));
      CHECK(to_oracle(o, e) == w);
    }
  }
}

TEST_CASE("canonical words round-trip") {
  auto g = group("B3");
  auto o = oracle_group("B3");
  for (std::size_t w = 0; w < o.size(); ++w) {
    auto e = g->from_key(o.key(w));
    CHECK(g->from_word(e.word()) == e);
  }
}

TEST_CASE("multiply and inverse agree with matrices") {
  auto g = group("A3");
  auto o = oracle_group("A3");
  std::vector<WeylElement> all;
  for (std::size_t w = 0; w < o.size(); ++w) all.push_back(g->from_key(o.key(w)));
  for (std::size_t a = 0; a < o.size(); ++a) {
    CHECK(to_oracle(o, g->inverse(all[a])) == o.inverse(a));
    for (std::size_t b = 0; b < o.size(); ++b)
      CHECK(to_oracle(o, g->multiply(all[a], all[b])) == o.product(a, b));
  }
}

TEST_CASE("group axioms on G2") {
  auto g = group("G2");
  auto o = oracle_group("G2");
  std::vector<WeylElement> all;
  for (std::size_t w = 0; w < o.size(); ++w) all.push_back(g->from_key(o.key(w)));
  for (const auto& a : all) {
    CHECK(g->multiply(a, g->inverse(a)).is_identity());
    CHECK(g->inverse(a).length() == a.length());
    for (const auto& b : all)
      for (const auto& c : all)
        CHECK(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
  }
}

TEST_CASE("longest element length equals number of positive roots") {
  for (const char* name : {"A4", "B4", "D4", "E6", "F4", "G2"}) {
    auto g = group(name);
    Weight neg(g->rank(), -1);  // w0(rho) = -rho
    CHECK(g->from_key(neg).length() == static_cast<int>(g->roots().size()));
  }
}

TEST_CASE("from_key rejects points off the orbit of rho") {
  auto g = group("A2");
  CHECK_THROWS_AS(g->from_key({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(g->from_key({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(g->from_key({1}), std::invalid_argument);
}

TEST_CASE("elements of different diagrams do not mix") {
  auto a = group("A2");
  auto g = group("G2");
  CHECK_THROWS_AS(a->multiply(a->generator(0), g->generator(0)), std::invalid_argument);
}

TEST_CASE("right descents") {
  auto g = group("A3");
  auto w = g->from_word(word({2, 1}));
  CHECK(g->is_right_descent(w, 0));
  CHECK_FALSE(g->is_right_descent(w, 1));
  CHECK_FALSE(g->is_right_descent(w, 2));
}

TEST_CASE("greedy Bruhat comparison equals the cover-relation order") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2"}) {
    auto g = group(name);
    auto o = oracle_group(name);
    oracle::CoverBruhat order(o);
    std::vector<WeylElement> all;
    for (std::size_t w = 0; w < o.size(); ++w) all.push_back(g->from_key(o.key(w)));
    std::size_t mismatches = 0;
    for (std::size_t u = 0; u < o.size(); ++u)
      for (std::size_t v = 0; v < o.size(); ++v)
        mismatches += g->bruhat_leq(all[u], all[v]) != order.leq(u, v);
    CHECK_MESSAGE(mismatches == 0, name);
  }
}

TEST_CASE("Bruhat order basics") {
  auto g = group("A3");
  auto e = g->identity();
  auto s = g->from_word(word({1}));
  auto sts = g->from_word(word({1, 2, 1}));
  CHECK(g->bruhat_leq(e, sts));
  CHECK(g->bruhat_leq(s, sts));
  CHECK_FALSE(g->bruhat_leq(sts, s));
  CHECK_FALSE(g->bruhat_leq(g->from_word(word({3})), sts));
}

TEST_CASE("element hashing separates all of F4") {
  auto g = group("F4");
  auto o = oracle_group("F4");
  std::unordered_set<WeylElement, WeylElementHash> seen;
  for (std::size_t w = 0; w < o.size(); ++w) seen.insert(g->from_key(o.key(w)));
  CHECK(seen.size() == 1152);
}

TEST_CASE("simple reflections are involutions fixing exactly the v_i = 0 weights") {
  DynkinDiagram d({Family::F, 4});
  for (const Weight& v : {Weight{1, 0, 2, -1}, Weight{0, 3, 0, 0}, Weight{-2, 1, 1, 5}})
    for (Node i = 0; i < 4; ++i) {
      auto w = simple_reflection_apply(i, v, d);
      CHECK(simple_reflection_apply(i, w, d) == v);
      CHECK((w == v) == (v[i] == 0));
    }
}

TEST_CASE("lengths change by exactly one under simple reflections") {
  auto g = group("D4");
  auto o = oracle_group("D4");
  for (std::size_t w = 0; w < o.size(); ++w) {
    auto e = g->from_key(o.key(w));
    for (Node s = 0; s < 4; ++s) {
      int l = g->multiply(e, g->generator(s)).length();
      CHECK(std::abs(l - e.length()) == 1);
    }
    CHECK(g->multiply(e, g->identity()) == e);
    CHECK(g->multiply(g->identity(), e) == e);
  }
  CHECK(g->identity().length() == 0);
  for (Node s = 0; s < 4; ++s) CHECK(g->generator(s).length() == 1);
}

TEST_CASE("Bruhat order is a graded partial order") {
  auto g = group("B3");
  auto o = oracle_group("B3");
  std::vector<WeylElement> all;
  for (std::size_t w = 0; w < o.size(); ++w) all.push_back(g->from_key(o.key(w)));
  const std::size_t n = all.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) le[u][v] = g->bruhat_leq(all[u], all[v]);
  for (std::size_t u = 0; u < n; ++u) {
    CHECK(le[u][u]);
    CHECK(le[0][u]);
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && le[u][v]) {
        CHECK_FALSE(le[v][u]);
        CHECK(all[u].length() < all[v].length());
      }
      if (!le[u][v]) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (le[v][x]) CHECK(le[u][x]);
    }
  }
}

TEST_CASE("small Bruhat facts") {
  auto a2 = group("A2");
  CHECK(a2->bruhat_leq(a2->generator(0), a2->from_word(word({1, 2}))));
  CHECK(group("A3")->from_key({-1, -1, -1}).length() == 6);
}
