#include "bruhat/crosslattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhat {

NodeSet star(NodeSet i, NodeSet j, const DynkinDiagram& diagram) {
  NodeSet out = i;
  for (Node t : j.nodes())
    if (!diagram.neighbors(t).intersects(i) && !i.contains(t)) out = out.with(t);
  return out;
}

namespace {

bool has_component_inside(NodeSet i, NodeSet j, const DynkinDiagram& diagram) {
  for (NodeSet c : connected_components(i, diagram))
    if (c.subset_of(j)) return true;
  return false;
}

}  // namespace

CrossSectionLattice cross_section(NodeSet j, const DynkinDiagram& diagram) {
  if (!j.subset_of(diagram.nodes()) || j == diagram.nodes())
    throw std::invalid_argument("J must be a proper subset of S");
  if (diagram.rank() > 24) throw std::invalid_argument("lattice enumeration limited to rank 24");
  const std::uint64_t order = weyl_group_order(diagram.type());
  CrossSectionLattice out{diagram.type(), j, {}};
  for (std::uint64_t bits = 0; bits <= diagram.nodes().bits(); ++bits) {
    NodeSet i(bits);
    if (has_component_inside(i, j, diagram)) continue;
    NodeSet s = star(i, j, diagram);
    out.members.push_back({i, s, order / parabolic_order(s, diagram)});
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const LatticeMember& a, const LatticeMember& b) { return canonical_less(a.i, b.i); });
  return out;
}

FaceVector face_vector(const CrossSectionLattice& lattice) {
  const int d = lattice.type.rank;
  std::vector<std::int64_t> full(d + 1, 0);
  for (const auto& m : lattice.members) full[m.i.size()] += static_cast<std::int64_t>(m.orbit_size);

  FaceVector out;
  for (int k = 0; k < d; ++k) out.f.push_back(static_cast<std::uint64_t>(full[k]));

  // Expand sum_k f_k (t-1)^k.
  out.h.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    std::int64_t binom = 1;
    for (int i = 0; i <= k; ++i) {
      const std::int64_t sign = ((k - i) % 2 == 0) ? 1 : -1;
      out.h[i] += sign * binom * full[k];
      binom = binom * (k - i) / (i + 1);
    }
  }
  return out;
}

FaceVector face_vector(NodeSet j, const DynkinDiagram& diagram) {
  return face_vector(cross_section(j, diagram));
}

}  // namespace bruhat
