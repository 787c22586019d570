#include "bruhat/verify.hpp"

#include <algorithm>
#include <set>

#include "bruhat/crosslattice.hpp"
#include "bruhat/smoothness.hpp"

namespace bruhat {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.ok || c.informational; });
}

namespace {

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

// Kernels are compared only on small quotients; the reference path is slow.
constexpr std::size_t kReferenceLimit = 20000;

}  // namespace

VerifyReport verify_instance(std::shared_ptr<const WeylGroup> group, NodeSet j,
                             std::uint64_t budget) {
  VerifyReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}, bool info = false) {
    report.checks.push_back({std::move(name), ok, std::move(detail), info});
  };
  const DynkinDiagram& d = group->diagram();
  const int rank = d.rank();
  const bool smooth = is_combinatorially_smooth(j, d).smooth;

  auto quotient = enumerate_quotient(group, j, budget);
  AugmentedPoset poset(descent_system(quotient));
  const DescentSystem& sys = poset.system();
  const std::size_t n = poset.size();
  const std::size_t top = quotient->maximal();

  // descent system
  {
    std::set<std::size_t> seen;
    bool disjoint = true;
    bool no_identity = true;
    for (std::size_t c = 0; c < sys.classes().size(); ++c)
      for (std::size_t r : sys.part(c)) {
        disjoint &= seen.insert(r).second;
        no_identity &= r != 0;
      }
    add("parts are disjoint", disjoint);
    add("identity not in S^J", no_identity);
    add("|S^J| = |S| iff J smooth", (sys.size() == static_cast<std::size_t>(rank)) == smooth,
        "|S^J| = " + std::to_string(sys.size()));
    const auto formula = count_edges_at_base(j, d);
    add("edge-count formula equals |S^J|", formula == sys.size(),
        "formula " + std::to_string(formula));
  }

  if (n <= kReferenceLimit) {
    add("reference and parallel kernels agree",
        coset_targets(sys, Execution::Reference) == poset.targets());
  }

  // dichotomy and bookkeeping
  {
    bool distinct = true;
    bool split = true;
    std::uint64_t nu_sum = 0;
    std::size_t zero_nu = 0;
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t g = 0; g < sys.size(); ++g) {
        const auto v = poset.target(w, g);
        distinct &= v != w && quotient->length(v) != quotient->length(w);
      }
      split &= poset.ascent_set(w).size() + poset.descent_set(w).size() == sys.size() &&
               static_cast<std::size_t>(poset.nu_total(w)) == poset.ascent_set(w).size();
      nu_sum += static_cast<std::uint64_t>(poset.nu_total(w));
      zero_nu += poset.nu_total(w) == 0;
    }
    add("w and (wr)_0 distinct with different lengths", distinct);
    add("S^J = A^J(w) + D^J(w)", split);
    add("nu vanishes at the maximal element", poset.nu_total(top) == 0);
    add("only the maximal element has nu = 0", zero_nu == 1,
        std::to_string(zero_nu) + " elements");

    const auto h = h_statistic_polynomial(poset);
    add("H coefficients sum to |W^J|", h.total() == n);

    const auto es = edges(poset);
    add("edge pairs equal sum of nu", es.edges.size() == nu_sum,
        std::to_string(es.edges.size()) + " pairs, " + std::to_string(es.distinct_pairs) +
            " distinct");

    if (j.empty()) {
      bool classical = true;
      for (std::size_t w = 0; w < n; ++w) {
        const WeylElement e = quotient->element(w);
        for (std::size_t g = 0; g < sys.size(); ++g) {
          const Node s = sys.classes()[sys.class_of_generator(g)];
          classical &= poset.is_ascent(w, g) != group->is_right_descent(e, s);
        }
      }
      add("J empty: relative descents are classical descents", classical);
    }

    if (smooth) {
      std::vector<std::size_t> degree(n, 0);
      std::set<std::pair<std::size_t, std::size_t>> pairs;
      for (const auto& e : es.edges)
        if (pairs.insert({std::min(e.lower, e.upper), std::max(e.lower, e.upper)}).second) {
          ++degree[e.lower];
          ++degree[e.upper];
        }
      add("smooth: every vertex on |S| edges",
          std::all_of(degree.begin(), degree.end(),
                      [&](std::size_t k) { return k == static_cast<std::size_t>(rank); }));

      bool chains = true;
      for (std::size_t c = 0; c < sys.classes().size(); ++c) {
        std::vector<std::size_t> idx;
        for (const auto& w : chain_formula_SJs(j, sys.classes()[c], *group))
          idx.push_back(quotient->index_of(w));
        std::sort(idx.begin(), idx.end());
        chains &= idx == sys.part(c);
      }
      add("chain formula equals S^J_s", chains);

      bool ends = true;
      for (NodeSet c : connected_components(j, d)) ends &= (c & d.end_nodes()).size() == 1;
      add("smooth: each component of J holds one end node", ends);
    }

    bool index_bound = true;
    for (Node s : (d.nodes() - j).nodes())
      for (NodeSet c : connected_components(j, d)) {
        NodeSet t = d.neighbors(s) & c;
        if (t.size() != 1) continue;
        const auto idx = parabolic_index(c, t.first(), d);
        const auto bound = static_cast<std::uint64_t>(c.size()) + 1;
        index_bound &= idx > bound || (idx == bound && is_type_A_chain_setup(c, t.first(), d));
      }
    add("parabolic index bound", index_bound);

    // lattice
    const auto lattice = cross_section(j, d);
    const auto fv = face_vector(lattice);
    std::int64_t euler = 0;
    for (std::size_t k = 0; k < fv.f.size(); ++k)
      euler += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(fv.f[k]);
    add("Euler relation", euler == 1 - (rank % 2 == 0 ? 1 : -1), "f = " + join(fv.f));
    add("f_0 = |W^J|", fv.f[0] == n);
    std::size_t rank_one = 0;
    for (const auto& m : lattice.members) rank_one += m.i.size() == 1;
    add("one edge class per s outside J",
        rank_one == static_cast<std::size_t>((d.nodes() - j).size()));
    if (rank >= 2 && es.edges.size() == es.distinct_pairs)
      add("f_1 = sum of nu", fv.f[1] == nu_sum);
    if (rank >= 2) add("f_1 = distinct edge pairs", fv.f[1] == es.distinct_pairs);

    if (smooth) {
      if (rank >= 2)
        add("smooth: 2 f_1 = |S| f_0", 2 * fv.f[1] == static_cast<std::uint64_t>(rank) * fv.f[0]);
      std::vector<std::int64_t> rev(fv.h.rbegin(), fv.h.rend());
      add("smooth: h palindromic", rev == fv.h, "h = " + join(fv.h));

      std::vector<std::int64_t> dist(rank + 1, 0);
      for (std::size_t w = 0; w < n; ++w) ++dist[poset.nu_total(w)];
      add("h equals distribution of total nu", dist == fv.h, "nu distribution " + join(dist),
          !j.empty());
    }
  }
  return report;
}

}  // namespace bruhat
