#include <doctest.h>

#include <random>
#include <set>

#include "common.hpp"

using namespace bruhat;
using namespace testing_util;

TEST_CASE("quotient sizes are group indices") {
  for (const char* name : {"A4", "B3", "C3", "D4", "F4", "G2"}) {
    auto g = group(name);
    for (NodeSet j : proper_subsets(g->rank())) {
      auto q = enumerate_quotient(g, j);
      CHECK(q->size() == g->order() / parabolic_order(j, g->diagram()));
      CHECK(enumerate_subgroup(*g, j).elements.size() == parabolic_order(j, g->diagram()));
    }
  }
}

TEST_CASE("quotient elements are the minimal coset representatives") {
  for (const char* name : {"A3", "B3", "G2", "D4"}) {
    auto g = group(name);
    auto o = oracle_group(name);
    for (NodeSet j : proper_subsets(g->rank())) {
      auto q = enumerate_quotient(g, j);
      std::set<std::size_t> expected;
      for (std::size_t w = 0; w < o.size(); ++w)
        if (o.minimal_in_coset(w, j.bits())) expected.insert(w);
      std::set<std::size_t> got;
      for (std::size_t i = 0; i < q->size(); ++i) got.insert(to_oracle(o, q->element(i)));
      CHECK(got == expected);
    }
  }
}

TEST_CASE("quotient bookkeeping") {
  auto g = group("D5");
  auto q = enumerate_quotient(g, J({1, 2, 5}));
  CHECK(q->element(0).is_identity());
  int longest = 0;
  for (std::size_t i = 0; i < q->size(); ++i) {
    auto e = q->element(i);
    CHECK(e.length() == q->length(i));
    CHECK(q->word(i).size() == static_cast<std::size_t>(q->length(i)));
    CHECK(g->from_word(q->word(i)) == e);
    CHECK(q->index_of(e) == i);
    if (i) CHECK(q->length(i - 1) <= q->length(i));
    longest = std::max(longest, q->length(i));
    Weight v = q->lambda();
    q->act(i, v);
    CHECK(q->find(v) == i);
  }
  CHECK(q->length(q->maximal()) == longest);
  std::size_t at_top = 0;
  for (std::size_t i = 0; i < q->size(); ++i) at_top += q->length(i) == longest;
  CHECK(at_top == 1);
}

TEST_CASE("min_coset_rep against scanning the coset") {
  auto g = group("A3");
  auto o = oracle_group("A3");
  for (NodeSet j : proper_subsets(3)) {
    const auto sub = o.subgroup(j.bits());
    for (std::size_t w = 0; w < o.size(); ++w) {
      auto m = min_coset_rep(g->from_key(o.key(w)), j, *g);
      CHECK(to_oracle(o, m) == o.coset_min(w, sub));
    }
  }
}

TEST_CASE("index_of maps any element to its coset") {
  auto g = group("B3");
  auto o = oracle_group("B3");
  const NodeSet j = J({2, 3});
  auto q = enumerate_quotient(g, j);
  const auto sub = o.subgroup(j.bits());
  for (std::size_t w = 0; w < o.size(); ++w) {
    auto idx = q->index_of(g->from_key(o.key(w)));
    CHECK(to_oracle(o, q->element(idx)) == o.coset_min(w, sub));
  }
}

TEST_CASE("lambda_J") {
  CHECK(lambda_for(J({2, 3}), 4) == Weight{1, 0, 0, 1});
  CHECK(lambda_for({}, 2) == Weight{1, 1});
}

TEST_CASE("errors") {
  auto g = group("E8");
  CHECK_THROWS_AS(enumerate_quotient(g, {}, 1000), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_subgroup(*g, J({1, 2, 3, 4, 5, 6, 7}), 1000), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_quotient(group("A3"), J({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("E8 quotients by E7 and D7") {
  auto d7 = enumerate_quotient(group("E8"), J({1, 2, 3, 4, 5, 6, 8}));
  CHECK(d7->size() == 2160);
  CHECK(d7->length(d7->maximal()) == 120 - 42);
  auto q = enumerate_quotient(group("E8"), J({2, 3, 4, 5, 6, 7, 8}));
  CHECK(q->size() == 240);
  CHECK(q->length(q->maximal()) == 57);
}

TEST_CASE("min_coset_rep is below w, idempotent and constant on cosets") {
  auto g = group("C3");
  auto o = oracle_group("C3");
  std::mt19937 rng(12345);
  for (NodeSet j : proper_subsets(3)) {
    const auto sub = enumerate_subgroup(*g, j).elements;
    std::uniform_int_distribution<std::size_t> pick(0, sub.size() - 1);
    for (std::size_t w = 0; w < o.size(); ++w) {
      auto e = g->from_key(o.key(w));
      auto m = min_coset_rep(e, j, *g);
      CHECK(g->bruhat_leq(m, e));
      CHECK(min_coset_rep(m, j, *g) == m);
      auto rest = g->multiply(g->inverse(m), e);
      CHECK(std::find(sub.begin(), sub.end(), rest) != sub.end());
      for (int k = 0; k < 3; ++k)
        CHECK(min_coset_rep(g->multiply(e, sub[pick(rng)]), j, *g) == m);
    }
  }
}

TEST_CASE("listed subgroup and quotient examples") {
  auto g = group("A3");
  CHECK(enumerate_subgroup(*g, {}).elements.size() == 1);
  CHECK(enumerate_subgroup(*g, J({2, 3})).elements.size() == 6);
  CHECK(enumerate_subgroup(*g, J({1, 3})).elements.size() == 4);
  auto q = enumerate_quotient(g, J({2, 3}));
  REQUIRE(q->size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(q->length(i) == i);
  for (const auto& u : enumerate_subgroup(*g, J({2, 3})).elements)
    CHECK(min_coset_rep(g->multiply(g->generator(0), u), J({2, 3}), *g) == g->generator(0));
  CHECK(enumerate_quotient(g, {})->size() == 24);
}
