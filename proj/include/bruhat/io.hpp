#pragma once

// JSON, DOT and plain-text renderings. All node labels are 1-based.

#include <string>

#include <json.hpp>

#include "bruhat/crosslattice.hpp"
#include "bruhat/descent.hpp"
#include "bruhat/smoothness.hpp"
#include "bruhat/verify.hpp"

namespace bruhat::io {

using nlohmann::json;

json labels(NodeSet set);
json word(const std::vector<Node>& w);
/// "1" for the identity, otherwise "s3s2s1".
std::string word_text(const std::vector<Node>& w);

json diagram_json(const DynkinDiagram& d);
json quotient_json(const ParabolicQuotient& q);
json descent_system_json(const DescentSystem& sys);
json ascents_json(const AugmentedPoset& poset);
/// Keys are exponent vectors written "[a,b,c]".
json hpoly_json(const MultiPolynomial& h);
json edges_json(const AugmentedPoset& poset, const EdgeSet& es);
json smooth_json(const SmoothnessReport& report);
json smooth_enum_json(const DynkinDiagram& d);
json lattice_json(const CrossSectionLattice& lattice);
json verify_json(const VerifyReport& report);

std::string edges_dot(const AugmentedPoset& poset, const EdgeSet& es);

std::string diagram_text(const DynkinDiagram& d);
std::string quotient_text(const ParabolicQuotient& q);
std::string hpoly_text(const MultiPolynomial& h);
std::string smooth_text(const SmoothnessReport& report);
std::string verify_text(const VerifyReport& report);

}  // namespace bruhat::io
