#include "bruhat/parabolic.hpp"

#include <algorithm>

namespace bruhat {

Weight lambda_for(NodeSet j, int rank) {
  Weight out(rank, 1);
  for (Node n : j.nodes()) out[n] = 0;
  return out;
}

ParabolicQuotient::ParabolicQuotient(std::shared_ptr<const WeylGroup> group, NodeSet j,
                                     UpwardOrbit orbit)
    : group_(std::move(group)), j_(j), lambda_(lambda_for(j, group_->rank())),
      orbit_(std::move(orbit)) {}

Weight ParabolicQuotient::point_weight(std::size_t i) const {
  auto p = point(i);
  return Weight(p.begin(), p.end());
}

std::vector<Node> ParabolicQuotient::word(std::size_t i) const {
  std::vector<Node> out;
  out.reserve(length(i));
  while (i != 0) {
    out.push_back(orbit_.letter[i]);
    i = orbit_.parent[i];
  }
  return out;
}

WeylElement ParabolicQuotient::element(std::size_t i) const { return group_->from_word(word(i)); }

void ParabolicQuotient::act(std::size_t i, std::span<int> v) const {
  const std::vector<Node> w = word(i);
  group_->apply_word(w, v);
}

std::size_t ParabolicQuotient::index_of(const WeylElement& w) const {
  Weight v = group_->apply(w, lambda_);
  auto idx = find(v);
  if (!idx) throw std::logic_error("coset image missing from quotient");
  return *idx;
}

std::shared_ptr<const ParabolicQuotient> enumerate_quotient(std::shared_ptr<const WeylGroup> group,
                                                            NodeSet j, std::uint64_t budget) {
  const NodeSet all = group->diagram().nodes();
  if (!j.subset_of(all)) throw std::invalid_argument("J is not a subset of S");
  if (j == all) throw std::invalid_argument("J must be a proper subset of S");
  Weight lambda = lambda_for(j, group->rank());
  UpwardOrbit orbit = upward_orbit(*group, lambda, all, budget);
  return std::make_shared<const ParabolicQuotient>(std::move(group), j, std::move(orbit));
}

ParabolicSubgroup enumerate_subgroup(const WeylGroup& group, NodeSet j, std::uint64_t budget) {
  if (!j.subset_of(group.diagram().nodes())) throw std::invalid_argument("J is not a subset of S");
  UpwardOrbit orbit = upward_orbit(group, group.rho(), j, budget);
  ParabolicSubgroup out{j, {}};
  out.elements.reserve(orbit.points.size());
  for (std::size_t k = 0; k < orbit.points.size(); ++k) {
    auto p = orbit.points[k];
    out.elements.push_back(group.from_key(Weight(p.begin(), p.end())));
  }
  return out;
}

WeylElement min_coset_rep(const WeylElement& w, NodeSet j, const WeylGroup& group) {
  const std::vector<Node> gens = j.nodes();
  WeylElement cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Node s : gens) {
      WeylElement next = group.multiply(cur, group.generator(s));
      if (next.length() < cur.length()) {
        cur = std::move(next);
        changed = true;
      }
    }
  }
  return cur;
}

}  // namespace bruhat
