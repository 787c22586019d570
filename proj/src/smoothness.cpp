#include "bruhat/smoothness.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhat {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MultipleNeighborsInJ: return "MultipleNeighborsInJ";
    case ViolationKind::NotTypeAEndChain: return "NotTypeAEndChain";
    case ViolationKind::ComponentMultiplyAttached: return "ComponentMultiplyAttached";
  }
  return "?";
}

namespace {

void require_proper(NodeSet j, const DynkinDiagram& diagram) {
  if (!j.subset_of(diagram.nodes())) throw std::invalid_argument("J is not a subset of S");
  if (j == diagram.nodes()) throw std::invalid_argument("J must be a proper subset of S");
}

NodeSet component_containing(Node t, const std::vector<NodeSet>& components) {
  for (NodeSet c : components)
    if (c.contains(t)) return c;
  throw std::logic_error("node not in any component");
}

}  // namespace

SmoothnessReport is_combinatorially_smooth(NodeSet j, const DynkinDiagram& diagram) {
  require_proper(j, diagram);
  SmoothnessReport report{j, true, {}};
  const auto components = connected_components(j, diagram);
  const NodeSet outside = diagram.nodes() - j;

  for (Node s : outside.nodes()) {
    NodeSet touching = diagram.neighbors(s) & j;
    if (touching.size() >= 2) {
      report.violations.push_back({s, ViolationKind::MultipleNeighborsInJ, touching});
    } else if (touching.size() == 1) {
      Node t = touching.first();
      NodeSet c = component_containing(t, components);
      if (!is_type_A_chain_setup(c, t, diagram))
        report.violations.push_back({s, ViolationKind::NotTypeAEndChain, c});
    }
  }
  for (NodeSet c : components) {
    NodeSet attached;
    for (Node s : outside.nodes())
      if (diagram.neighbors(s).intersects(c)) attached = attached.with(s);
    if (attached.size() >= 2)
      for (Node s : attached.nodes())
        report.violations.push_back({s, ViolationKind::ComponentMultiplyAttached, c});
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.s < b.s; });
  report.smooth = report.violations.empty();
  return report;
}

std::vector<NodeSet> enumerate_smooth(const DynkinDiagram& diagram) {
  if (diagram.rank() > 24) throw std::invalid_argument("subset enumeration limited to rank 24");
  std::vector<NodeSet> out;
  const std::uint64_t full = diagram.nodes().bits();
  for (std::uint64_t bits = 0; bits < full; ++bits) {
    NodeSet j(bits);
    if (is_combinatorially_smooth(j, diagram).smooth) out.push_back(j);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::uint64_t parabolic_index(NodeSet component, Node t, const DynkinDiagram& diagram) {
  return parabolic_order(component, diagram) / parabolic_order(component.without(t), diagram);
}

std::uint64_t count_edges_at_base(NodeSet j, const DynkinDiagram& diagram) {
  require_proper(j, diagram);
  const auto components = connected_components(j, diagram);
  std::uint64_t total = 0;
  for (Node s : (diagram.nodes() - j).nodes()) {
    NodeSet touching = diagram.neighbors(s) & j;
    if (touching.empty()) {
      ++total;
      continue;
    }
    std::uint64_t product = 1;
    for (NodeSet c : components) {
      NodeSet t = touching & c;
      if (t.empty()) continue;
      if (t.size() != 1) throw std::logic_error("diagram is not a tree");
      product *= parabolic_index(c, t.first(), diagram);
    }
    total += product;
  }
  return total;
}

std::vector<SmoothGroup> group_by_end_nodes(const std::vector<NodeSet>& subsets,
                                            const DynkinDiagram& diagram) {
  const NodeSet ends = diagram.end_nodes();
  std::vector<SmoothGroup> groups;
  for (NodeSet j : subsets) {
    NodeSet key = j & ends;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const SmoothGroup& g) { return g.end_nodes == key; });
    if (it == groups.end()) {
      groups.push_back({key, {}});
      it = groups.end() - 1;
    }
    it->subsets.push_back(j);
  }
  std::sort(groups.begin(), groups.end(), [](const SmoothGroup& a, const SmoothGroup& b) {
    return canonical_less(a.end_nodes, b.end_nodes);
  });
  for (auto& g : groups) std::sort(g.subsets.begin(), g.subsets.end(), canonical_less);
  return groups;
}

namespace {

// 1-based labels, as printed.
NodeSet labels(std::initializer_list<int> ls) {
  NodeSet s;
  for (int l : ls) s = s.with(l - 1);
  return s;
}

NodeSet label_range(int first, int last) { return NodeSet::range(first - 1, last - 1); }

}  // namespace

std::vector<NodeSet> published_smooth_subsets(DiagramType type) {
  const int n = type.rank;
  std::vector<NodeSet> out{NodeSet{}};
  switch (type.family) {
    case Family::A:
      if (n == 1) break;
      for (int i = 1; i < n; ++i) out.push_back(label_range(1, i));
      for (int j = 2; j <= n; ++j) out.push_back(label_range(j, n));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 3; j <= n; ++j) out.push_back(label_range(1, i) | label_range(j, n));
      break;
    case Family::B:
    case Family::C:
      if (n == 2) {
        out.push_back(labels({1}));
        out.push_back(labels({2}));
        break;
      }
      for (int i = 1; i < n; ++i) out.push_back(label_range(1, i));
      out.push_back(labels({n}));
      for (int i = 1; i <= n - 3; ++i) out.push_back(label_range(1, i).with(n - 1));
      break;
    case Family::D:
      for (int i = 1; i <= n - 3; ++i) out.push_back(label_range(1, i));
      out.push_back(labels({n - 1}));
      out.push_back(labels({n}));
      for (int i = 1; i <= n - 4; ++i) out.push_back(label_range(1, i).with(n - 2));
      for (int i = 1; i <= n - 4; ++i) out.push_back(label_range(1, i).with(n - 1));
      break;
    case Family::E:
      if (n == 6) {
        out.insert(out.end(), {labels({1}), labels({1, 2}), labels({5}), labels({4, 5}),
                               labels({6}), labels({1, 5}), labels({1, 2, 5}), labels({1, 4, 5}),
                               labels({1, 6}), labels({5, 6}), labels({1, 5, 6})});
      } else if (n == 7) {
        out.insert(out.end(),
                   {labels({1}), labels({1, 2}), labels({1, 2, 3}), labels({6}), labels({5, 6}),
                    labels({7}), labels({1, 6}), labels({1, 2, 6}), labels({1, 2, 3, 6}),
                    labels({1, 5, 6}), labels({1, 2, 5, 6}), labels({6, 7}), labels({1, 7}),
                    labels({1, 2, 7}), labels({1, 6, 7}), labels({1, 2, 6, 7})});
      } else {
        out.insert(out.end(),
                   {labels({1}), labels({1, 2}), labels({1, 2, 3}), labels({1, 2, 3, 4}),
                    labels({7}), labels({6, 7}), labels({8}), labels({1, 7}), labels({1, 2, 7}),
                    labels({1, 2, 3, 7}), labels({1, 2, 3, 4, 7}), labels({1, 6, 7}),
                    labels({1, 2, 6, 7}), labels({1, 2, 3, 6, 7}), labels({1, 2, 5, 6}),
                    labels({7, 8}), labels({1, 8}), labels({1, 2, 8}), labels({1, 2, 3, 8}),
                    labels({1, 7, 8}), labels({1, 2, 7, 8})});
      }
      break;
    case Family::F:
      out.insert(out.end(),
                 {labels({1}), labels({1, 2}), labels({4}), labels({3, 4}), labels({1, 4})});
      break;
    case Family::G:
      out.insert(out.end(), {labels({1}), labels({2})});
      break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeSet> flagged_published_entries(DiagramType type) {
  if (type == DiagramType{Family::E, 8}) return {labels({1, 2, 5, 6})};
  return {};
}

ClassificationDiff diff_against_published(const DynkinDiagram& diagram) {
  const auto computed = enumerate_smooth(diagram);
  const auto published = published_smooth_subsets(diagram.type());
  ClassificationDiff diff;
  for (NodeSet j : computed)
    if (std::find(published.begin(), published.end(), j) == published.end())
      diff.only_computed.push_back(j);
  for (NodeSet j : published)
    if (std::find(computed.begin(), computed.end(), j) == computed.end())
      diff.only_published.push_back(j);
  return diff;
}

}  // namespace bruhat
