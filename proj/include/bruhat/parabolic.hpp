#pragma once

// Parabolic subgroups W_J and quotients W^J (minimal length left coset
// representatives of wW_J).

#include <memory>

#include "bruhat/orbit.hpp"

namespace bruhat {

/// W^J for a fixed proper J, enumerated as the orbit W . lambda_J where
/// lambda_J is 1 on S \ J and 0 on J. Index 0 is the identity; indices are
/// in breadth-first order, so lengths are non-decreasing.
class ParabolicQuotient {
 public:
  ParabolicQuotient(std::shared_ptr<const WeylGroup> group, NodeSet j, UpwardOrbit orbit);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const DynkinDiagram& diagram() const { return group_->diagram(); }
  NodeSet j() const { return j_; }
  const Weight& lambda() const { return lambda_; }

  std::size_t size() const { return orbit_.points.size(); }
  int length(std::size_t i) const { return orbit_.depth[i]; }
  std::span<const std::int8_t> point(std::size_t i) const { return orbit_.points[i]; }
  Weight point_weight(std::size_t i) const;

  /// Reduced word of element i (tree path), w = s_{word[0]} s_{word[1]} ...
  std::vector<Node> word(std::size_t i) const;
  WeylElement element(std::size_t i) const;

  /// Index of the coset containing the element whose lambda_J-image is
  /// `point`.
  std::optional<std::size_t> find(std::span<const int> point) const {
    return orbit_.points.find(point);
  }
  /// Index of (w)_0, the representative of wW_J.
  std::size_t index_of(const WeylElement& w) const;

  /// Applies element i to v in place (v is a weight, not necessarily in the
  /// orbit of lambda_J).
  void act(std::size_t i, std::span<int> v) const;

  /// First-letter / parent along the breadth-first tree.
  int letter(std::size_t i) const { return orbit_.letter[i]; }
  std::size_t parent(std::size_t i) const { return orbit_.parent[i]; }

  /// The unique element of maximal length.
  std::size_t maximal() const { return size() - 1; }

 private:
  std::shared_ptr<const WeylGroup> group_;
  NodeSet j_;
  Weight lambda_;
  UpwardOrbit orbit_;
};

struct ParabolicSubgroup {
  NodeSet j;
  std::vector<WeylElement> elements;
};

/// Throws std::invalid_argument when J = S, BudgetExceeded past `budget`.
std::shared_ptr<const ParabolicQuotient> enumerate_quotient(std::shared_ptr<const WeylGroup> group,
                                                            NodeSet j,
                                                            std::uint64_t budget = kDefaultBudget);

/// All of W_J. Throws BudgetExceeded past `budget`.
ParabolicSubgroup enumerate_subgroup(const WeylGroup& group, NodeSet j,
                                     std::uint64_t budget = kDefaultBudget);

/// (w)_0: strip right descents in J until none remains.
WeylElement min_coset_rep(const WeylElement& w, NodeSet j, const WeylGroup& group);

/// lambda_J: 1 on S \ J, 0 on J.
Weight lambda_for(NodeSet j, int rank);

}  // namespace bruhat
