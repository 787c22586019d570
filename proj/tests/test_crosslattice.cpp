#include <doctest.h>

#include "common.hpp"
#include "bruhat/crosslattice.hpp"
#include "bruhat/smoothness.hpp"

using namespace bruhat;
using namespace testing_util;

namespace {

DynkinDiagram dg(const char* name) { return DynkinDiagram(parse_diagram_type(name)); }

const LatticeMember& member(const CrossSectionLattice& l, NodeSet i) {
  for (const auto& m : l.members)
    if (m.i == i) return m;
  throw std::runtime_error("not a member");
}

}  // namespace

TEST_CASE("lattice members and stars") {
  auto d = dg("A3");
  auto l = cross_section(J({2, 3}), d);
  CHECK(member(l, {}).i_star == J({2, 3}));
  CHECK(member(l, {}).orbit_size == 4);
  CHECK(member(l, J({1})).i_star == J({1, 3}));
  for (const auto& m : l.members) {
    CHECK(m.i.subset_of(m.i_star));
    CHECK((m.i_star - m.i).subset_of(J({2, 3})));
    for (NodeSet c : connected_components(m.i, d)) CHECK_FALSE(c.subset_of(J({2, 3})));
  }
  CHECK(l.members.front().i.empty());
  CHECK(l.members.back().i == d.nodes());
  CHECK_THROWS_AS(cross_section(d.nodes(), d), std::invalid_argument);
}

TEST_CASE("rank-one members are S minus J") {
  for (const char* name : {"A5", "D5", "E7", "F4"}) {
    auto d = dg(name);
    for (NodeSet j : proper_subsets(d.rank())) {
      std::size_t k = 0;
      for (const auto& m : cross_section(j, d).members) k += m.i.size() == 1;
      CHECK(k == static_cast<std::size_t>((d.nodes() - j).size()));
    }
  }
}

TEST_CASE("face vectors of A3") {
  auto d = dg("A3");
  auto p = face_vector({}, d);
  CHECK(p.f == std::vector<std::uint64_t>{24, 36, 14});
  CHECK(p.h == std::vector<std::int64_t>{1, 11, 11, 1});
  CHECK(face_vector(J({2, 3}), d).f == std::vector<std::uint64_t>{4, 6, 4});
}

TEST_CASE("face counts against (w, I) pairs") {
  for (const char* name : {"A3", "A4", "B3", "C3", "D4", "G2"}) {
    auto d = dg(name);
    auto o = oracle_group(name);
    for (NodeSet j : proper_subsets(d.rank())) {
      auto f = face_vector(j, d).f;
      auto pairs = oracle::face_pairs(o, j.bits());
      CHECK(pairs.back() == 1);
      pairs.pop_back();
      CHECK_MESSAGE(f == pairs, name, " J=", format_node_set(j));
    }
  }
}

TEST_CASE("Euler relation and vertex count") {
  for (const char* name : {"A6", "B5", "C5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    auto g = group(name);
    const auto& d = g->diagram();
    for (NodeSet j : proper_subsets(d.rank())) {
      auto fv = face_vector(j, d);
      std::int64_t e = 0;
      for (std::size_t k = 0; k < fv.f.size(); ++k)
        e += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(fv.f[k]);
      CHECK(e == (d.rank() % 2 ? 2 : 0));
      CHECK(fv.f[0] == g->order() / parabolic_order(j, d));
      std::int64_t hsum = 0;
      for (auto x : fv.h) hsum += x;
      CHECK(hsum == static_cast<std::int64_t>(fv.f[0]));  // h(1) = f_0
    }
  }
}

TEST_CASE("smooth J: simple polytope") {
  for (const char* name : {"A6", "B5", "D6", "E6", "E7", "E8", "F4"}) {
    auto d = dg(name);
    for (NodeSet j : enumerate_smooth(d)) {
      auto fv = face_vector(j, d);
      CHECK(2 * fv.f[1] == static_cast<std::uint64_t>(d.rank()) * fv.f[0]);
      std::vector<std::int64_t> rev(fv.h.rbegin(), fv.h.rend());
      CHECK(rev == fv.h);
      for (auto x : fv.h) CHECK(x > 0);
    }
  }
}

TEST_CASE("h against the total-nu distribution") {
  // Equal for every smooth J in this range; the general statement is open.
  for (const char* name : {"A5", "B4", "C4", "D5", "F4", "G2"}) {
    auto g = group(name);
    for (NodeSet j : enumerate_smooth(g->diagram())) {
      AugmentedPoset poset(descent_system(g, j));
      std::vector<std::int64_t> dist(g->rank() + 1, 0);
      for (std::size_t w = 0; w < poset.size(); ++w) ++dist[poset.nu_total(w)];
      CHECK(dist == face_vector(j, g->diagram()).h);
    }
  }
}

TEST_CASE("f_1 counts the distinct edge pairs") {
  for (const char* name : {"A4", "B3", "C3", "D4", "F4", "G2"}) {
    auto g = group(name);
    for (NodeSet j : proper_subsets(g->rank())) {
      AugmentedPoset poset(descent_system(g, j));
      CHECK(face_vector(j, g->diagram()).f[1] == edges(poset).distinct_pairs);
    }
  }
}
