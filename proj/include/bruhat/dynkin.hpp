#pragma once

// Irreducible crystallographic Dynkin diagrams, Cartan data and graph
// combinatorics on subsets of the simple reflections.
//
// Nodes are 0-based internally. Everything printed or parsed uses the
// 1-based labels s_1..s_n with the numbering below.
//
//   A_n, B_n, C_n, F_4, G_2  path s_1 - ... - s_n
//   B_n                      alpha_n short
//   C_n                      alpha_n long
//   F_4                      alpha_1, alpha_2 long
//   G_2                      alpha_1 short
//   D_n                      path s_1..s_{n-2}, with s_{n-1} and s_n both
//                            attached to s_{n-2}
//   E_n                      path s_1..s_{n-1}; s_n attached to
//                            s_3 (E6), s_4 (E7), s_5 (E8)

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Largest supported rank. Subsets are 64-bit masks and orbit points are
/// stored with 8-bit coordinates, which bounds B_n/C_n coroot heights.
inline constexpr int kMaxRank = 64;

struct DiagramType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  friend bool operator==(const DiagramType&, const DiagramType&) = default;
};

bool valid_rank(Family family, int rank);

/// Parses "A3", "e8", "G2". Throws std::invalid_argument.
DiagramType parse_diagram_type(std::string_view text);

using Node = int;

/// A subset of the simple reflections, as a bitmask over 0-based nodes.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

  static NodeSet of(std::initializer_list<Node> nodes);
  /// Inclusive 0-based range; empty when first > last.
  static NodeSet range(Node first, Node last);
  static NodeSet all(int rank);

  constexpr std::uint64_t bits() const { return bits_; }
  bool contains(Node n) const { return (bits_ >> n) & 1U; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<Node> nodes() const;
  /// Lowest node; undefined on the empty set.
  Node first() const;

  NodeSet with(Node n) const { return NodeSet(bits_ | (std::uint64_t{1} << n)); }
  NodeSet without(Node n) const { return NodeSet(bits_ & ~(std::uint64_t{1} << n)); }
  bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }

  friend NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  friend NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  friend bool operator==(NodeSet, NodeSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order on subsets: by size, then lexicographically on the
/// sorted node lists.
bool canonical_less(NodeSet a, NodeSet b);

/// Parses a comma-separated list of 1-based node labels ("2,3"; "" is the
/// empty set). Throws std::invalid_argument on bad labels or duplicates.
NodeSet parse_node_set(std::string_view text, int rank);

/// "{1,3}" style, 1-based.
std::string format_node_set(NodeSet set);

/// 1-based labels as a vector, for serialization.
std::vector<int> node_labels(NodeSet set);

class DynkinDiagram {
 public:
  /// Throws std::invalid_argument when the rank is out of bounds for the
  /// family.
  explicit DynkinDiagram(DiagramType type);

  DiagramType type() const { return type_; }
  int rank() const { return type_.rank; }
  std::string name() const { return type_.name(); }

  /// Row i is alpha_i in fundamental-weight coordinates:
  /// cartan(i, j) = <alpha_i, alpha_j^vee>.
  int cartan(Node i, Node j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// Coxeter-graph adjacency: s_i s_j != s_j s_i.
  bool adjacent(Node i, Node j) const { return i != j && cartan_[i][j] != 0; }
  /// cartan(i,j) * cartan(j,i): 0 (commuting), 1, 2 or 3.
  int bond(Node i, Node j) const { return cartan_[i][j] * cartan_[j][i]; }
  NodeSet neighbors(Node n) const { return neighbors_[n]; }
  NodeSet nodes() const { return NodeSet::all(rank()); }
  /// Nodes of degree at most one.
  NodeSet end_nodes() const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.type_ == b.type_;
  }

 private:
  void link(Node i, Node j, int ij, int ji);

  DiagramType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<NodeSet> neighbors_;
};

inline DynkinDiagram build_diagram(DiagramType type) { return DynkinDiagram(type); }

/// Maximal connected pieces of the induced subgraph, ordered by lowest node.
std::vector<NodeSet> connected_components(NodeSet subset, const DynkinDiagram& diagram);

bool is_connected(NodeSet subset, const DynkinDiagram& diagram);

/// True iff the subdiagram on `component` is a simply-laced path with `t`
/// at one end, i.e. component \ {t} inside component is A_{l-1} in A_l.
/// Throws std::invalid_argument when t is not in the component.
bool is_type_A_chain_setup(NodeSet component, Node t, const DynkinDiagram& diagram);

/// Type of the subdiagram on a nonempty connected subset.
DiagramType classify_component(NodeSet component, const DynkinDiagram& diagram);

/// Order of an irreducible Weyl group. Throws std::overflow_error past 2^64.
std::uint64_t weyl_group_order(DiagramType type);

/// |W_I| as the product of the component orders (1 for the empty set).
std::uint64_t parabolic_order(NodeSet subset, const DynkinDiagram& diagram);

}  // namespace bruhat
