#include "bruhat/dynkin.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace bruhat {

std::string DiagramType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool valid_rank(Family family, int rank) {
  if (rank < 1 || rank > kMaxRank) return false;
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

DiagramType parse_diagram_type(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad diagram '" + std::string(text) + "'");
  char f = text[0];
  if (f >= 'a' && f <= 'z') f = static_cast<char>(f - 'a' + 'A');
  if (f < 'A' || f > 'G') throw std::invalid_argument("unknown family in '" + std::string(text) + "'");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad rank in '" + std::string(text) + "'");
  DiagramType type{static_cast<Family>(f), rank};
  if (!valid_rank(type.family, rank))
    throw std::invalid_argument("rank out of range for " + type.name());
  return type;
}

NodeSet NodeSet::of(std::initializer_list<Node> nodes) {
  NodeSet s;
  for (Node n : nodes) s = s.with(n);
  return s;
}

NodeSet NodeSet::range(Node first, Node last) {
  NodeSet s;
  for (Node n = first; n <= last; ++n) s = s.with(n);
  return s;
}

NodeSet NodeSet::all(int rank) {
  return rank >= 64 ? NodeSet(~std::uint64_t{0}) : NodeSet((std::uint64_t{1} << rank) - 1);
}

int NodeSet::size() const { return std::popcount(bits_); }

Node NodeSet::first() const { return std::countr_zero(bits_); }

std::vector<Node> NodeSet::nodes() const {
  std::vector<Node> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool canonical_less(NodeSet a, NodeSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.nodes() < b.nodes();
}

NodeSet parse_node_set(std::string_view text, int rank) {
  NodeSet out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(pos, comma - pos));
    int label = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), label);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("bad node label '" + std::string(item) + "'");
    if (label < 1 || label > rank)
      throw std::invalid_argument("node " + std::to_string(label) + " out of range 1.." +
                                  std::to_string(rank));
    if (out.contains(label - 1))
      throw std::invalid_argument("duplicate node " + std::to_string(label));
    out = out.with(label - 1);
    pos = comma + 1;
  }
  return out;
}

std::string format_node_set(NodeSet set) {
  std::string out = "{";
  bool first = true;
  for (Node n : set.nodes()) {
    if (!first) out += ",";
    out += std::to_string(n + 1);
    first = false;
  }
  return out + "}";
}

std::vector<int> node_labels(NodeSet set) {
  std::vector<int> out;
  for (Node n : set.nodes()) out.push_back(n + 1);
  return out;
}

DynkinDiagram::DynkinDiagram(DiagramType type) : type_(type) {
  if (!valid_rank(type.family, type.rank))
    throw std::invalid_argument("rank out of range for " + type.name());
  const int n = type.rank;
  cartan_.assign(n, std::vector<int>(n, 0));
  neighbors_.assign(n, NodeSet{});
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;

  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 2, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case Family::E:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 4, n - 1, -1, -1);  // s3-s6, s4-s7, s5-s8
      break;
    case Family::F:
      link(0, 1, -1, -1);
      link(1, 2, -2, -1);  // alpha_3 short
      link(2, 3, -1, -1);
      break;
    case Family::G:
      link(0, 1, -1, -3);  // alpha_1 short
      break;
  }
}

void DynkinDiagram::link(Node i, Node j, int ij, int ji) {
  cartan_[i][j] = ij;
  cartan_[j][i] = ji;
  neighbors_[i] = neighbors_[i].with(j);
  neighbors_[j] = neighbors_[j].with(i);
}

NodeSet DynkinDiagram::end_nodes() const {
  NodeSet out;
  for (Node n = 0; n < rank(); ++n)
    if (neighbors_[n].size() <= 1) out = out.with(n);
  return out;
}

std::vector<NodeSet> connected_components(NodeSet subset, const DynkinDiagram& diagram) {
  std::vector<NodeSet> out;
  NodeSet rest = subset;
  while (!rest.empty()) {
    NodeSet comp = NodeSet::of({rest.first()});
    NodeSet frontier = comp;
    while (!frontier.empty()) {
      NodeSet next;
      for (Node n : frontier.nodes()) next = next | (diagram.neighbors(n) & subset);
      frontier = next - comp;
      comp = comp | next;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

bool is_connected(NodeSet subset, const DynkinDiagram& diagram) {
  return !subset.empty() && connected_components(subset, diagram).size() == 1;
}

bool is_type_A_chain_setup(NodeSet component, Node t, const DynkinDiagram& diagram) {
  if (!component.contains(t))
    throw std::invalid_argument("node s" + std::to_string(t + 1) + " is not in " +
                                format_node_set(component));
  if (!is_connected(component, diagram)) return false;
  for (Node i : component.nodes()) {
    NodeSet nbrs = diagram.neighbors(i) & component;
    if (nbrs.size() > 2) return false;
    for (Node j : nbrs.nodes())
      if (diagram.bond(i, j) != 1) return false;
  }
  return (diagram.neighbors(t) & component).size() <= 1;
}

namespace {

// Number of nodes on the arm that leaves `hub` through `start`.
int arm_length(Node hub, Node start, NodeSet component, const DynkinDiagram& diagram) {
  int len = 0;
  Node prev = hub;
  Node cur = start;
  while (true) {
    ++len;
    NodeSet next = (diagram.neighbors(cur) & component).without(prev);
    if (next.empty()) return len;
    prev = cur;
    cur = next.first();
  }
}

}  // namespace

DiagramType classify_component(NodeSet component, const DynkinDiagram& diagram) {
  if (!is_connected(component, diagram))
    throw std::invalid_argument(format_node_set(component) + " is not connected");
  const int k = component.size();
  if (k == 1) return {Family::A, 1};

  int max_bond = 1;
  Node branch = -1;
  for (Node i : component.nodes()) {
    NodeSet nbrs = diagram.neighbors(i) & component;
    if (nbrs.size() >= 3) branch = i;
    for (Node j : nbrs.nodes()) max_bond = std::max(max_bond, diagram.bond(i, j));
  }

  if (max_bond == 3) return {Family::G, 2};

  if (branch >= 0) {
    std::vector<int> arms;
    for (Node j : (diagram.neighbors(branch) & component).nodes())
      arms.push_back(arm_length(branch, j, component, diagram));
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return {Family::D, k};
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {Family::E, k};
    throw std::logic_error("unrecognised branched subdiagram " + format_node_set(component));
  }

  if (max_bond == 1) return {Family::A, k};

  // Path with one double bond: locate it along the path.
  Node end = -1;
  for (Node i : component.nodes())
    if ((diagram.neighbors(i) & component).size() == 1) {
      end = i;
      break;
    }
  std::vector<Node> path{end};
  while (static_cast<int>(path.size()) < k) {
    Node cur = path.back();
    NodeSet next = diagram.neighbors(cur) & component;
    if (path.size() >= 2) next = next.without(path[path.size() - 2]);
    path.push_back(next.first());
  }
  int pos = 0;
  for (int i = 0; i + 1 < k; ++i)
    if (diagram.bond(path[i], path[i + 1]) == 2) pos = i;
  if (k == 4 && pos == 1) return {Family::F, 4};
  if (k == 2) return {Family::B, 2};
  // Orient so that the double bond is at the far end, then check whether the
  // last root is short (B) or long (C).
  if (pos == 0) std::reverse(path.begin(), path.end());
  Node last = path[k - 1];
  Node before = path[k - 2];
  return {diagram.cartan(before, last) == -2 ? Family::B : Family::C, k};
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Weyl group order overflows 64 bits");
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out = checked_mul(out, static_cast<std::uint64_t>(i));
  return out;
}

}  // namespace

std::uint64_t weyl_group_order(DiagramType type) {
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C:
      if (n >= 64) throw std::overflow_error("Weyl group order overflows 64 bits");
      return checked_mul(std::uint64_t{1} << n, factorial(n));
    case Family::D: return checked_mul(std::uint64_t{1} << (n - 1), factorial(n));
    case Family::E:
      return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::uint64_t parabolic_order(NodeSet subset, const DynkinDiagram& diagram) {
  std::uint64_t out = 1;
  for (NodeSet comp : connected_components(subset, diagram))
    out = checked_mul(out, weyl_group_order(classify_component(comp, diagram)));
  return out;
}

}  // namespace bruhat
