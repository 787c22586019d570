#pragma once

// Combinatorial smoothness of J, decided on the Dynkin diagram alone.
//
// J is smooth iff
//  (a) every s outside J that meets J has exactly one neighbour t in J, and
//      the component of J through t is a simply-laced path ending at t;
//  (b) every component of J is attached to exactly one s outside J.
// Equivalently the orbit polytope of a point with stabiliser W_J is simple,
// and |S^J| = |S|. Rational smoothness of the associated torus embedding is
// the same condition.

#include <cstdint>
#include <vector>

#include "bruhat/dynkin.hpp"

namespace bruhat {

enum class ViolationKind { MultipleNeighborsInJ, NotTypeAEndChain, ComponentMultiplyAttached };

const char* to_string(ViolationKind kind);

struct Violation {
  Node s;
  ViolationKind kind;
  /// The component of J involved; for MultipleNeighborsInJ, the
  /// neighbours of s in J.
  NodeSet component;
};

struct SmoothnessReport {
  NodeSet j;
  bool smooth = true;
  std::vector<Violation> violations;
};

/// Throws std::invalid_argument unless J is a proper subset of S.
SmoothnessReport is_combinatorially_smooth(NodeSet j, const DynkinDiagram& diagram);

inline bool is_rationally_smooth(NodeSet j, const DynkinDiagram& diagram) {
  return is_combinatorially_smooth(j, diagram).smooth;
}

/// All proper smooth J, ordered by canonical_less.
std::vector<NodeSet> enumerate_smooth(const DynkinDiagram& diagram);

/// Number of edges of the orbit polytope at the base vertex:
///   |Int(S\J)| + sum over s in Bd(S\J) of prod over components C of J
///   touching s of [W_C : W_{C \ t(s,C)}],
/// with t(s,C) the node of C adjacent to s (unique, as S is a tree).
std::uint64_t count_edges_at_base(NodeSet j, const DynkinDiagram& diagram);

/// Parabolic index [W_C : W_{C \ {t}}].
std::uint64_t parabolic_index(NodeSet component, Node t, const DynkinDiagram& diagram);

/// Smooth subsets grouped by which end nodes of S they contain. Groups are
/// ordered by canonical_less on the end-node sets; empty groups are dropped.
struct SmoothGroup {
  NodeSet end_nodes;
  std::vector<NodeSet> subsets;
};
std::vector<SmoothGroup> group_by_end_nodes(const std::vector<NodeSet>& subsets,
                                            const DynkinDiagram& diagram);

/// The published classification list for one irreducible type, transcribed
/// verbatim (including any misprints).
std::vector<NodeSet> published_smooth_subsets(DiagramType type);

/// Published entries already known to be misprints.
std::vector<NodeSet> flagged_published_entries(DiagramType type);

struct ClassificationDiff {
  std::vector<NodeSet> only_computed;
  std::vector<NodeSet> only_published;
  bool empty() const { return only_computed.empty() && only_published.empty(); }
};

ClassificationDiff diff_against_published(const DynkinDiagram& diagram);

}  // namespace bruhat
