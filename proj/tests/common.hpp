#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bruhat/descent.hpp"
#include "oracles.hpp"

namespace testing_util {

using namespace bruhat;

inline std::shared_ptr<const WeylGroup> group(const std::string& name) {
  return std::make_shared<const WeylGroup>(parse_diagram_type(name));
}

inline oracle::Group oracle_group(const std::string& name) {
  const auto t = parse_diagram_type(name);
  return oracle::Group(static_cast<char>(t.family), t.rank);
}

/// Oracle index of a library element.
inline std::size_t to_oracle(const oracle::Group& g, const WeylElement& w) {
  return g.from_key(w.key());
}

/// 1-based labels.
inline NodeSet J(std::initializer_list<int> labels) {
  NodeSet s;
  for (int l : labels) s = s.with(l - 1);
  return s;
}

/// Every proper subset of S.
inline std::vector<NodeSet> proper_subsets(int rank) {
  std::vector<NodeSet> out;
  for (std::uint64_t b = 0; b + 1 < (std::uint64_t{1} << rank); ++b) out.emplace_back(b);
  return out;
}

/// Word from 1-based labels.
inline std::vector<Node> word(std::initializer_list<int> labels) {
  std::vector<Node> w;
  for (int l : labels) w.push_back(l - 1);
  return w;
}

}  // namespace testing_util
