#pragma once

// The cross-section lattice of the orbit W . lambda_J and the face counts of
// its convex hull, read off from the lattice alone.
//
// Faces of Conv(W . lambda_J) up to W are indexed by the I in S with no
// component inside J. The face class of I has dimension |I| and |W|/|W_{I*}|
// members, I* being I together with the nodes of J commuting with all of I.

#include <cstdint>
#include <vector>

#include "bruhat/dynkin.hpp"

namespace bruhat {

struct LatticeMember {
  NodeSet i;
  NodeSet i_star;
  std::uint64_t orbit_size;
};

struct CrossSectionLattice {
  DiagramType type;
  NodeSet j;
  /// Ordered by canonical_less on I; includes the empty set and S.
  std::vector<LatticeMember> members;
};

/// I* = I u {t in J : t commutes with every node of I}.
NodeSet star(NodeSet i, NodeSet j, const DynkinDiagram& diagram);

/// Throws std::invalid_argument unless J is a proper subset of S, or when
/// the rank exceeds 24.
CrossSectionLattice cross_section(NodeSet j, const DynkinDiagram& diagram);

struct FaceVector {
  /// f[k] for 0 <= k < |S|.
  std::vector<std::uint64_t> f;
  /// Coefficients of sum_{k<=d} f_k (t-1)^k with f_d = 1, lowest first.
  std::vector<std::int64_t> h;
};

FaceVector face_vector(const CrossSectionLattice& lattice);
FaceVector face_vector(NodeSet j, const DynkinDiagram& diagram);

}  // namespace bruhat
